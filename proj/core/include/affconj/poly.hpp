#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "affconj/rational.hpp"

namespace affconj {

/// Univariate polynomial over Q. Coefficients run from the constant term
/// upward; the leading coefficient is nonzero and the zero polynomial has no
/// coefficients at all.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);
  Poly(std::initializer_list<Rational> coefficients)
      : Poly(std::vector<Rational>(coefficients)) {}

  static Poly constant(const Rational& c) { return Poly({c}); }
  static Poly monomial(const Rational& c, std::size_t degree);
  /// x - root
  static Poly linear(const Rational& root) { return Poly({-root, Rational(1)}); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const Rational& leading() const;
  Rational coefficient(std::size_t k) const;

  Poly monic() const;
  Poly derivative() const;
  Rational eval(const Rational& at) const;

  /// Expanded human form, e.g. "x^2-3*x-2".
  std::string to_string() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of Euclidean division; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& p, const Poly& q);

/// Monic gcd. gcd(0, 0) is the zero polynomial.
Poly poly_gcd(const Poly& p, const Poly& q);

/// p / q where q is known to divide p. Throws std::logic_error otherwise.
Poly poly_divexact(const Poly& p, const Poly& q);

Rational poly_eval(const Poly& p, const Rational& at);

Poly poly_pow(const Poly& p, unsigned exponent);

struct SquarefreeFactor {
  Poly factor;
  unsigned multiplicity = 0;
  friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// Yun's algorithm. For monic nonzero p returns pairwise coprime monic
/// squarefree s_j with p = prod s_j^j, in increasing j, skipping trivial s_j.
std::vector<SquarefreeFactor> squarefree_decomposition(const Poly& p);

/// Refines a list of polynomials into pairwise coprime monic squarefree
/// non-constant pieces whose products generate every input's radical.
std::vector<Poly> coprime_base(const std::vector<Poly>& polys);

/// Multiplicative form from the squarefree decomposition, highest
/// multiplicity first, e.g. "(x-1)^2*(x^2-2)". Constants render as "1".
std::string factored_string(const Poly& monic_poly);

/// Total ordering used to sort canonical blocks: degree first, then
/// coefficients from the constant term upward.
bool poly_less(const Poly& a, const Poly& b);

}  // namespace affconj
