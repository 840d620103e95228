#include "affconj/affine.hpp"

#include <stdexcept>
#include <string>

namespace affconj {

namespace {

void require_dim(std::size_t expected, std::size_t got, const char* what) {
  if (expected != got)
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(expected) +
                                " vs " + std::to_string(got) + ")");
}

}  // namespace

AffineOperator::AffineOperator(Matrix matrix, Vector translation)
    : matrix_(std::move(matrix)), translation_(std::move(translation)) {
  if (!matrix_.is_square()) throw std::invalid_argument("AffineOperator: matrix is not square");
  require_dim(matrix_.rows(), translation_.size(), "AffineOperator");
}

AffineOperator AffineOperator::identity(std::size_t n) { return {Matrix::identity(n), Vector(n)}; }

AffineOperator AffineOperator::linear(Matrix matrix) {
  const std::size_t n = matrix.rows();
  return {std::move(matrix), Vector(n)};
}

AffineWitness::AffineWitness(Matrix linear, Vector shift) : linear_(std::move(linear)), shift_(std::move(shift)) {
  if (!linear_.is_square()) throw std::invalid_argument("AffineWitness: linear part is not square");
  require_dim(linear_.rows(), shift_.size(), "AffineWitness");
  auto inv = try_inverse(linear_);
  if (!inv) throw std::invalid_argument("AffineWitness: linear part is singular");
  linear_inverse_ = *std::move(inv);
}

AffineWitness AffineWitness::identity(std::size_t n) {
  return {Matrix::identity(n), Vector(n), Matrix::identity(n)};
}

AffineWitness AffineWitness::translation(Vector shift) {
  const std::size_t n = shift.size();
  return {Matrix::identity(n), std::move(shift), Matrix::identity(n)};
}

AffineWitness AffineWitness::linear_map(Matrix linear) {
  const std::size_t n = linear.rows();
  return {std::move(linear), Vector(n)};
}

Vector apply(const AffineOperator& f, const Vector& x) {
  require_dim(f.dim(), x.size(), "apply");
  return f.matrix() * x + f.translation();
}

AffineOperator compose(const AffineOperator& f, const AffineOperator& g) {
  require_dim(f.dim(), g.dim(), "compose");
  return {f.matrix() * g.matrix(), f.matrix() * g.translation() + f.translation()};
}

AffineWitness compose(const AffineWitness& outer, const AffineWitness& inner) {
  require_dim(outer.dim(), inner.dim(), "compose");
  return {outer.linear_ * inner.linear_, outer.linear_ * inner.shift_ + outer.shift_,
          inner.linear_inverse_ * outer.linear_inverse_};
}

AffineWitness inverse(const AffineWitness& h) {
  return {h.linear_inverse_, -(h.linear_inverse_ * h.shift_), h.linear_};
}

AffineOperator direct_sum(const AffineOperator& f, const AffineOperator& g) {
  Vector b = f.translation();
  b.insert(b.end(), g.translation().begin(), g.translation().end());
  return {block_diag(f.matrix(), g.matrix()), std::move(b)};
}

std::optional<Vector> fixed_point(const AffineOperator& f) {
  return solve_linear(f.matrix() - Matrix::identity(f.dim()), -f.translation());
}

AffineOperator linear_conjugate(const AffineOperator& f, const Matrix& s) {
  if (!s.is_square()) throw std::invalid_argument("linear_conjugate: S is not square");
  require_dim(f.dim(), s.rows(), "linear_conjugate");
  auto s_inv = try_inverse(s);
  if (!s_inv) throw std::invalid_argument("linear_conjugate: S is singular");
  return {*s_inv * f.matrix() * s, *s_inv * f.translation()};
}

AffineOperator translation_conjugate(const AffineOperator& f, const Vector& p) {
  require_dim(f.dim(), p.size(), "translation_conjugate");
  return {f.matrix(), f.matrix() * p + f.translation() - p};
}

AffineOperator conjugate_by(const AffineOperator& f, const AffineWitness& h) {
  require_dim(f.dim(), h.dim(), "conjugate_by");
  return compose(inverse(h).as_operator(), compose(f, h.as_operator()));
}

}  // namespace affconj
