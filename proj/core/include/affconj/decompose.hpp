#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "affconj/matrix.hpp"

namespace affconj {

/// Similarity S^{-1} A S = diag(star, nil) with star nonsingular and nil
/// nilpotent. The columns of S are an echelon basis of im(A^n) followed by a
/// basis of ker(A^n). Either block may be 0x0.
struct FittingSplit {
  Matrix basis_change;
  Matrix star;
  Matrix nil;
  std::size_t star_dim = 0;
};

/// Jordan block sizes of a nilpotent matrix, sorted descending.
struct Partition {
  std::vector<std::size_t> parts;

  std::size_t total() const;
  std::string to_string() const;  // "[3,1]"
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Smallest m with rank(A^m) = rank(A^(m+1)).
std::size_t fitting_index(const Matrix& a);

FittingSplit fitting_split(const Matrix& a);

/// rank(N^n) == 0.
bool is_nilpotent(const Matrix& n);

/// Counts parts >= k as rank(N^(k-1)) - rank(N^k). Throws
/// std::invalid_argument if N is not nilpotent.
Partition nilpotent_partition(const Matrix& n);

/// `ranks` lists rank(N^1), rank(N^2), ... ending in 0; `n` is the size of N.
/// Throws std::invalid_argument on sequences no nilpotent matrix can have.
Partition partition_from_rank_sequence(std::span<const std::size_t> ranks, std::size_t n);

/// Nilpotent Jordan matrix with ones on the superdiagonal inside each block,
/// blocks in the order given.
Matrix nilpotent_jordan_matrix(const Partition& p);

struct JordanBasis {
  Matrix transform;  ///< T with T^{-1} N T = jordan
  Matrix jordan;
};

/// Chain basis of a nilpotent matrix, blocks descending.
JordanBasis nilpotent_jordan_basis(const Matrix& n);

}  // namespace affconj
