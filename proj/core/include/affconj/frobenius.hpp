#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "affconj/matrix.hpp"
#include "affconj/poly.hpp"

namespace affconj {

/// Nontrivial invariant factors f_1 | f_2 | ... | f_r of xI - A, monic.
/// Constant factors are dropped, so the degrees add up to n.
struct InvariantFactors {
  std::vector<Poly> chain;

  std::size_t size() const;  // sum of degrees
  std::string to_string() const;  // "(x-1), (x-1)^2"
  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
};

/// Smith elimination of xI - A over Q[x].
InvariantFactors smith_invariant_factors(const Matrix& a);

/// Determinantal divisors d_k = gcd of the k x k minors of xI - A and
/// f_k = d_k / d_{k-1}. Exponential in n; rejects n > 6.
InvariantFactors minors_gcd_invariant_factors(const Matrix& a);

/// Similarity over Q (equivalently over its algebraic closure).
bool similar(const Matrix& a, const Matrix& c);

/// Rational canonical form: companion blocks of the chain in chain order.
Matrix frobenius_form(const InvariantFactors& factors);

}  // namespace affconj
