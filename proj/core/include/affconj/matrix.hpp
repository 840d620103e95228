#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "affconj/poly.hpp"
#include "affconj/rational.hpp"

namespace affconj {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over Q. Zero-sized dimensions are legal.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(std::span<const Rational> entries);
  /// Columns laid side by side; every column must have length `rows`.
  static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix transpose() const;
  /// Rows [r0, r0+nr), columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Rational trace() const;

  /// Largest bit_size over all entries.
  std::size_t max_bit_size() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Rational& c);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, std::span<const Rational> x);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
std::string to_string(const Vector& v);

/// Block-diagonal matrix diag(a, b).
Matrix block_diag(const Matrix& a, const Matrix& b);
Matrix block_diag(std::span<const Matrix> blocks);

/// M^e by repeated squaring; M^0 is the identity.
Matrix power(const Matrix& m, std::size_t exponent);

/// Companion matrix of a monic polynomial: ones on the subdiagonal and the
/// negated low coefficients in the last column. companion(x - a) = [a].
Matrix companion(const Poly& monic_poly);

/// p(M) for square M.
Matrix poly_at_matrix(const Poly& p, const Matrix& m);

struct Echelon {
  Matrix reduced;                   ///< reduced row echelon form
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Gauss-Jordan elimination. Among the nonzero candidates in a pivot column
/// the entry of smallest bit size is chosen.
Echelon reduced_row_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);

/// One exact solution of M x = v, or nullopt if the system is inconsistent.
/// Free variables are set to zero.
std::optional<Vector> solve_linear(const Matrix& m, std::span<const Rational> v);

/// Basis of the null space read from the free columns of the reduced
/// echelon form: one vector per free column, with a 1 in that column.
std::vector<Vector> kernel_basis(const Matrix& m);

/// The pivot columns of M itself.
std::vector<Vector> image_basis(const Matrix& m);

/// Reduced echelon basis of the column space (nonzero rows of rref(M^T)).
/// Coordinate subspaces come back as standard basis vectors.
std::vector<Vector> column_space_echelon_basis(const Matrix& m);

std::optional<Matrix> try_inverse(const Matrix& m);
/// Throws std::invalid_argument when M is singular or not square.
Matrix inverse(const Matrix& m);

Rational determinant(const Matrix& m);

/// det(xI - M) by the Faddeev-LeVerrier recurrence. Monic of degree n;
/// the 0x0 matrix gives the constant 1.
Poly char_poly(const Matrix& m);

}  // namespace affconj
