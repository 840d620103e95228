#include "affconj/classify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace affconj {

namespace {

const Poly& x_minus_one() {
  static const Poly p = Poly::linear(1);
  return p;
}

unsigned multiplicity_in(const Poly& factor, Poly p) {
  unsigned m = 0;
  while (true) {
    auto [q, r] = poly_divmod(p, factor);
    if (!r.is_zero()) return m;
    p = std::move(q);
    ++m;
  }
}

// The shape (A*, c) + (J, 0) with A* nonsingular, J the descending Jordan
// matrix of its own partition and (A*, c) free of fixed points.
bool has_reduced_shape(const AffineOperator& g, std::size_t k) {
  const std::size_t n = g.dim();
  const Matrix& a = g.matrix();
  if (!a.block(0, k, k, n - k).is_zero() || !a.block(k, 0, n - k, k).is_zero()) return false;
  const Matrix star = a.block(0, 0, k, k);
  const Matrix nil = a.block(k, k, n - k, n - k);
  if (rank(star) != k || !is_nilpotent(nil)) return false;
  if (nilpotent_jordan_matrix(nilpotent_partition(nil)) != nil) return false;
  for (std::size_t i = k; i < n; ++i)
    if (!g.translation()[i].is_zero()) return false;
  const AffineOperator star_part(star, Vector(g.translation().begin(), g.translation().begin() + static_cast<std::ptrdiff_t>(k)));
  return !fixed_point(star_part).has_value();
}

}  // namespace

BiregularClassInvariant::BiregularClassInvariant(NoFixedPointCase c) {
  const Poly& q = c.q_star;
  if (q.is_zero() || !q.leading().is_one()) throw std::logic_error("NoFixedPointCase: q* is not monic");
  if (!q.eval(1).is_zero()) throw std::logic_error("NoFixedPointCase: 1 is not a root of q*");
  if (q.eval(0).is_zero()) throw std::logic_error("NoFixedPointCase: 0 is a root of q*");
  value_ = std::move(c);
}

std::size_t BiregularClassInvariant::dim() const {
  if (has_fixed_point()) return fixed_point_case().factors.size();
  const auto& c = no_fixed_point_case();
  return static_cast<std::size_t>(c.q_star.degree()) + c.nil_partition.total();
}

std::string BiregularClassInvariant::summary() const {
  if (has_fixed_point()) return "fixed-point; invariant factors: " + fixed_point_case().factors.to_string();
  const auto& c = no_fixed_point_case();
  return "no-fixed-point; q*=" + factored_string(c.q_star) + "; nilpotent partition " +
         c.nil_partition.to_string();
}

BiregularClassInvariant classify(const AffineOperator& f) {
  if (fixed_point(f)) return FixedPointCase{smith_invariant_factors(f.matrix())};
  const FittingSplit split = fitting_split(f.matrix());
  return NoFixedPointCase{char_poly(split.star), nilpotent_partition(split.nil)};
}

bool biregularly_conjugate(const AffineOperator& f, const AffineOperator& g) {
  if (f.dim() != g.dim()) return false;
  return classify(f) == classify(g);
}

std::string explain_difference(const AffineOperator& f, const AffineOperator& g) {
  if (f.dim() != g.dim())
    return "dimensions differ (" + std::to_string(f.dim()) + " vs " + std::to_string(g.dim()) + ")";
  const auto a = classify(f);
  const auto b = classify(g);
  if (a.has_fixed_point() != b.has_fixed_point()) return "fixed-point existence differs";
  if (a.has_fixed_point()) {
    if (a.fixed_point_case() != b.fixed_point_case()) return "invariant factors differ";
    return {};
  }
  const auto& x = a.no_fixed_point_case();
  const auto& y = b.no_fixed_point_case();
  if (x.q_star != y.q_star) return "q* (eigenvalues of the nonsingular part) differs";
  if (x.nil_partition != y.nil_partition) return "nilpotent partitions differ";
  return {};
}

Matrix canonical_semisimple_block(const Poly& r) {
  if (r.is_zero() || !r.leading().is_one()) throw std::invalid_argument("canonical_semisimple_block: r must be monic");
  if (r.eval(0).is_zero()) throw std::invalid_argument("canonical_semisimple_block: r(0) = 0");
  auto parts = squarefree_decomposition(r);
  std::sort(parts.begin(), parts.end(), [](const SquarefreeFactor& a, const SquarefreeFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() > b.factor.degree();
    return poly_less(a.factor, b.factor);
  });
  std::vector<Matrix> blocks;
  for (const auto& part : parts)
    for (unsigned j = 0; j < part.multiplicity; ++j) blocks.push_back(companion(part.factor));
  return block_diag(blocks);
}

CanonicalForm canonical_form(const AffineOperator& f) {
  BiregularClassInvariant inv = classify(f);
  AffineOperator rep;
  if (inv.has_fixed_point()) {
    rep = AffineOperator::linear(frobenius_form(inv.fixed_point_case().factors));
  } else {
    const auto& c = inv.no_fixed_point_case();
    const Poly rest = poly_divexact(c.q_star, x_minus_one());
    const AffineOperator shift(Matrix{{1}}, Vector{1});
    rep = direct_sum(direct_sum(shift, AffineOperator::linear(canonical_semisimple_block(rest))),
                     AffineOperator::linear(nilpotent_jordan_matrix(c.nil_partition)));
  }
  std::string descriptor = describe(inv);
  return {std::move(rep), std::move(inv), std::move(descriptor)};
}

std::string describe(const BiregularClassInvariant& inv) {
  std::ostringstream os;
  if (inv.has_fixed_point()) {
    const auto& chain = inv.fixed_point_case().factors.chain;
    os << "fixed-point class: conjugate to the linear map x -> Fx, F the companion form of\n";
    os << "  invariant factors: " << inv.fixed_point_case().factors.to_string() << '\n';
    for (const Poly& g : coprime_base(chain)) {
      std::vector<unsigned> blocks;
      for (const Poly& f : chain)
        if (unsigned m = multiplicity_in(g, f); m > 0) blocks.push_back(m);
      std::sort(blocks.rbegin(), blocks.rend());
      os << "  each root of " << g.to_string() << ": Jordan blocks [";
      for (std::size_t i = 0; i < blocks.size(); ++i) os << (i ? "," : "") << blocks[i];
      os << "]\n";
    }
    return os.str();
  }
  const auto& c = inv.no_fixed_point_case();
  const Poly rest = poly_divexact(c.q_star, x_minus_one());
  os << "no-fixed-point class: x1 -> x1 + 1, semisimple part, nilpotent part\n";
  os << "  q* = " << factored_string(c.q_star) << '\n';
  if (rest.is_constant())
    os << "  semisimple part: empty\n";
  else
    os << "  semisimple eigenvalues: roots of " << factored_string(rest) << " (1x1 Jordan blocks)\n";
  os << "  nilpotent partition: " << c.nil_partition.to_string() << '\n';
  return os.str();
}

ReductionTrace reduce_no_fixed_point(const AffineOperator& f) {
  if (fixed_point(f))
    throw std::invalid_argument(
        "reduce_no_fixed_point: operator has a fixed point p; translating by p conjugates it to its linear part");
  const FittingSplit split = fitting_split(f.matrix());
  const std::size_t k = split.star_dim;
  const JordanBasis jordan = nilpotent_jordan_basis(split.nil);

  // Linear step: basis change to diag(A*, J).
  const Matrix s = split.basis_change * block_diag(Matrix::identity(k), jordan.transform);
  const AffineOperator linear_step = linear_conjugate(f, s);

  // Translation step: the nilpotent summand (J, s') fixes the solution of
  // (J - I) x = -s', which always exists since J - I is invertible.
  const Vector tail(linear_step.translation().begin() + static_cast<std::ptrdiff_t>(k),
                    linear_step.translation().end());
  const auto p = fixed_point(AffineOperator(jordan.jordan, tail));
  if (!p) throw std::logic_error("reduce_no_fixed_point: nilpotent summand has no fixed point");
  Vector shift(k);
  shift.insert(shift.end(), p->begin(), p->end());

  AffineWitness witness = compose(AffineWitness::linear_map(s), AffineWitness::translation(std::move(shift)));
  AffineOperator reduced = conjugate_by(f, witness);
  if (reduced.matrix() != linear_step.matrix())
    throw std::logic_error("reduce_no_fixed_point: translation step changed the matrix");
  if (!has_reduced_shape(reduced, k)) throw std::logic_error("reduce_no_fixed_point: reduced operator has wrong shape");
  return {std::move(witness), std::move(reduced), k};
}

std::vector<std::size_t> image_dimension_sequence(const AffineOperator& f) {
  const std::size_t n = f.dim();
  Vector point(n);
  Matrix basis = Matrix::identity(n);
  std::vector<std::size_t> dims;
  for (std::size_t i = 1; i <= n; ++i) {
    point = affconj::apply(f, point);
    const auto reduced = column_space_echelon_basis(f.matrix() * basis);
    basis = Matrix::from_columns(reduced, n);
    dims.push_back(reduced.size());
  }
  return dims;
}

}  // namespace affconj
