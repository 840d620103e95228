#pragma once

#include <cstddef>
#include <optional>

#include "affconj/matrix.hpp"

namespace affconj {

/// The map x -> A x + b on Q^n, identified with the pair (A, b).
class AffineOperator {
 public:
  AffineOperator() = default;
  /// Throws std::invalid_argument unless A is n x n and b has length n.
  AffineOperator(Matrix matrix, Vector translation);

  static AffineOperator identity(std::size_t n);
  static AffineOperator linear(Matrix matrix);

  std::size_t dim() const { return translation_.size(); }
  const Matrix& matrix() const { return matrix_; }
  const Vector& translation() const { return translation_; }

  friend bool operator==(const AffineOperator&, const AffineOperator&) = default;

 private:
  Matrix matrix_;
  Vector translation_;
};

/// An invertible affine map h(x) = S x + shift. The inverse of S is computed
/// and cached on construction; a singular S is rejected.
class AffineWitness {
 public:
  AffineWitness() = default;
  AffineWitness(Matrix linear, Vector shift);

  static AffineWitness identity(std::size_t n);
  static AffineWitness translation(Vector shift);
  static AffineWitness linear_map(Matrix linear);

  std::size_t dim() const { return shift_.size(); }
  const Matrix& linear() const { return linear_; }
  const Vector& shift() const { return shift_; }
  const Matrix& linear_inverse() const { return linear_inverse_; }

  AffineOperator as_operator() const { return {linear_, shift_}; }

  friend bool operator==(const AffineWitness& a, const AffineWitness& b) {
    return a.linear_ == b.linear_ && a.shift_ == b.shift_;
  }

 private:
  AffineWitness(Matrix linear, Vector shift, Matrix linear_inverse)
      : linear_(std::move(linear)), shift_(std::move(shift)), linear_inverse_(std::move(linear_inverse)) {}

  Matrix linear_;
  Vector shift_;
  Matrix linear_inverse_;

  friend AffineWitness inverse(const AffineWitness& h);
  friend AffineWitness compose(const AffineWitness& outer, const AffineWitness& inner);
};

Vector apply(const AffineOperator& f, const Vector& x);

/// x -> f(g(x)).
AffineOperator compose(const AffineOperator& f, const AffineOperator& g);
AffineWitness compose(const AffineWitness& outer, const AffineWitness& inner);

AffineWitness inverse(const AffineWitness& h);

/// Block-diagonal (A_f, A_g) with stacked translation (b_f; b_g).
AffineOperator direct_sum(const AffineOperator& f, const AffineOperator& g);

/// A solution of (A - I) x = -b, free variables zero; nullopt if none.
std::optional<Vector> fixed_point(const AffineOperator& f);

/// h^{-1} f h for h(x) = S x: (S^{-1} A S, S^{-1} b). Singular S is rejected.
AffineOperator linear_conjugate(const AffineOperator& f, const Matrix& s);

/// h^{-1} f h for h(x) = x + p: (A, A p + b - p).
AffineOperator translation_conjugate(const AffineOperator& f, const Vector& p);

/// h^{-1} f h.
AffineOperator conjugate_by(const AffineOperator& f, const AffineWitness& h);

}  // namespace affconj
