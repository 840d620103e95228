#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "affconj/affine.hpp"
#include "affconj/decompose.hpp"
#include "affconj/frobenius.hpp"

namespace affconj {

/// The operator has a fixed point: it is conjugate to its linear part, and
/// the class is the similarity class of A.
struct FixedPointCase {
  InvariantFactors factors;
  friend bool operator==(const FixedPointCase&, const FixedPointCase&) = default;
};

/// No fixed point: the class is determined by the characteristic polynomial
/// of the nonsingular Fitting block (its eigenvalue multiset, which always
/// contains 1) and the Jordan partition of the nilpotent block.
struct NoFixedPointCase {
  Poly q_star;
  Partition nil_partition;
  friend bool operator==(const NoFixedPointCase&, const NoFixedPointCase&) = default;
};

/// Complete invariant of an affine operator under biregular conjugacy over
/// the algebraic closure of Q.
class BiregularClassInvariant {
 public:
  BiregularClassInvariant(FixedPointCase c) : value_(std::move(c)) {}  // NOLINT(implicit)
  BiregularClassInvariant(NoFixedPointCase c);                          // NOLINT(implicit)

  bool has_fixed_point() const { return std::holds_alternative<FixedPointCase>(value_); }
  const FixedPointCase& fixed_point_case() const { return std::get<FixedPointCase>(value_); }
  const NoFixedPointCase& no_fixed_point_case() const { return std::get<NoFixedPointCase>(value_); }
  std::size_t dim() const;

  /// "fixed-point; invariant factors: (x-1)" or
  /// "no-fixed-point; q*=(x-1)^2; nilpotent partition []".
  std::string summary() const;

  friend bool operator==(const BiregularClassInvariant&, const BiregularClassInvariant&) = default;

 private:
  std::variant<FixedPointCase, NoFixedPointCase> value_;
};

struct CanonicalForm {
  AffineOperator representative;
  BiregularClassInvariant invariant;
  std::string descriptor;
};

/// Conjugation witness for the affine part of the reduction of a
/// fixed-point-free operator: conjugate_by(f, witness) == reduced, and
/// reduced = (A*, c) + (J, 0) with J a descending nilpotent Jordan matrix.
struct ReductionTrace {
  AffineWitness witness;
  AffineOperator reduced;
  std::size_t star_dim = 0;
};

BiregularClassInvariant classify(const AffineOperator& f);

/// False for different dimensions.
bool biregularly_conjugate(const AffineOperator& f, const AffineOperator& g);

/// First component on which the two invariants disagree, or empty if equal.
std::string explain_difference(const AffineOperator& f, const AffineOperator& g);

CanonicalForm canonical_form(const AffineOperator& f);

/// Block diagonal of companion(s_j) repeated j times for r = prod s_j^j,
/// degree descending then by coefficients. Diagonalizable over the closure
/// with characteristic polynomial r. Rejects r(0) == 0.
Matrix canonical_semisimple_block(const Poly& r);

/// Human-readable class description: Jordan structure grouped by coprime
/// squarefree factors in the fixed-point case; semisimple factors, the
/// translated coordinate and the nilpotent partition otherwise.
std::string describe(const BiregularClassInvariant& inv);

/// Throws std::invalid_argument if f has a fixed point.
ReductionTrace reduce_no_fixed_point(const AffineOperator& f);

/// dim f^i(Q^n) for i = 1..n, by pushing the affine image subspace forward.
std::vector<std::size_t> image_dimension_sequence(const AffineOperator& f);

}  // namespace affconj
