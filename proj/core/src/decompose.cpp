#include "affconj/decompose.hpp"

#include <numeric>
#include <stdexcept>

namespace affconj {

std::size_t Partition::total() const { return std::accumulate(parts.begin(), parts.end(), std::size_t{0}); }

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + "]";
}

std::size_t fitting_index(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("fitting_index: matrix is not square");
  Matrix p = Matrix::identity(a.rows());
  std::size_t r = a.rows();
  for (std::size_t m = 0;; ++m) {
    p = p * a;
    const std::size_t next = rank(p);
    if (next == r) return m;
    r = next;
  }
}

FittingSplit fitting_split(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("fitting_split: matrix is not square");
  const std::size_t n = a.rows();
  const Matrix an = power(a, n);

  std::vector<Vector> columns = column_space_echelon_basis(an);
  const std::size_t k = columns.size();
  for (auto& v : kernel_basis(an)) columns.push_back(std::move(v));

  FittingSplit split;
  split.basis_change = Matrix::from_columns(columns, n);
  auto s_inv = try_inverse(split.basis_change);
  if (!s_inv) throw std::logic_error("fitting_split: image and kernel of A^n do not span");
  const Matrix conj = *s_inv * a * split.basis_change;

  if (!conj.block(0, k, k, n - k).is_zero() || !conj.block(k, 0, n - k, k).is_zero())
    throw std::logic_error("fitting_split: blocks are not invariant");
  split.star_dim = k;
  split.star = conj.block(0, 0, k, k);
  split.nil = conj.block(k, k, n - k, n - k);
  if (rank(split.star) != k) throw std::logic_error("fitting_split: star block is singular");
  if (!is_nilpotent(split.nil)) throw std::logic_error("fitting_split: nil block is not nilpotent");
  return split;
}

bool is_nilpotent(const Matrix& n) {
  if (!n.is_square()) throw std::invalid_argument("is_nilpotent: matrix is not square");
  return power(n, n.rows()).is_zero();
}

Partition nilpotent_partition(const Matrix& n) {
  if (!is_nilpotent(n)) throw std::invalid_argument("nilpotent_partition: matrix is not nilpotent");
  std::vector<std::size_t> ranks;
  Matrix p = Matrix::identity(n.rows());
  do {
    p = p * n;
    ranks.push_back(rank(p));
  } while (ranks.back() != 0);
  return partition_from_rank_sequence(ranks, n.rows());
}

Partition partition_from_rank_sequence(std::span<const std::size_t> ranks, std::size_t n) {
  if (ranks.empty()) {
    if (n == 0) return {};
    throw std::invalid_argument("partition_from_rank_sequence: empty rank sequence");
  }
  if (ranks.back() != 0)
    throw std::invalid_argument("partition_from_rank_sequence: sequence does not reach 0");

  // at_least[k-1] = number of blocks of size >= k = rank(N^(k-1)) - rank(N^k)
  std::vector<std::size_t> at_least;
  std::size_t prev = n;
  for (std::size_t r : ranks) {
    if (r > prev) throw std::invalid_argument("partition_from_rank_sequence: ranks increase");
    at_least.push_back(prev - r);
    prev = r;
  }
  for (std::size_t k = 1; k < at_least.size(); ++k)
    if (at_least[k] > at_least[k - 1])
      throw std::invalid_argument("partition_from_rank_sequence: rank drops increase");

  Partition p;
  for (std::size_t k = at_least.size(); k-- > 0;) {
    const std::size_t bigger = k + 1 < at_least.size() ? at_least[k + 1] : 0;
    p.parts.insert(p.parts.end(), at_least[k] - bigger, k + 1);
  }
  return p;
}

Matrix nilpotent_jordan_matrix(const Partition& p) {
  Matrix j(p.total(), p.total());
  std::size_t offset = 0;
  for (std::size_t size : p.parts) {
    for (std::size_t i = 0; i + 1 < size; ++i) j(offset + i, offset + i + 1) = 1;
    offset += size;
  }
  return j;
}

JordanBasis nilpotent_jordan_basis(const Matrix& n) {
  if (!is_nilpotent(n)) throw std::invalid_argument("nilpotent_jordan_basis: matrix is not nilpotent");
  const std::size_t d = n.rows();
  const std::size_t height = fitting_index(n);

  std::vector<std::vector<Vector>> kernels(height + 1);
  for (std::size_t k = 1; k <= height; ++k) kernels[k] = kernel_basis(power(n, k));

  struct Chain {
    Vector top;
    std::size_t length;
  };
  std::vector<Chain> chains;

  // Walk down the kernel flag; at level k, new chain tops complete
  // ker(N^(k-1)) plus the images of longer chains to a basis of ker(N^k).
  for (std::size_t k = height; k >= 1; --k) {
    std::vector<Vector> span = kernels[k - 1];
    for (const auto& c : chains) span.push_back(power(n, c.length - k) * c.top);
    std::size_t r = rank(Matrix::from_columns(span, d));
    for (const auto& u : kernels[k]) {
      span.push_back(u);
      const std::size_t next = rank(Matrix::from_columns(span, d));
      if (next > r) {
        r = next;
        chains.push_back({u, k});
      } else {
        span.pop_back();
      }
    }
  }

  std::vector<Vector> columns;
  Partition sizes;
  for (const auto& c : chains) {
    sizes.parts.push_back(c.length);
    for (std::size_t i = c.length; i-- > 0;) columns.push_back(power(n, i) * c.top);
  }

  JordanBasis out{Matrix::from_columns(columns, d), nilpotent_jordan_matrix(sizes)};
  auto t_inv = try_inverse(out.transform);
  if (!t_inv || *t_inv * n * out.transform != out.jordan)
    throw std::logic_error("nilpotent_jordan_basis: chain basis verification failed");
  return out;
}

}  // namespace affconj
