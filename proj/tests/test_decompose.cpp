#include <doctest.h>

#include "affconj/decompose.hpp"
#include "affconj/frobenius.hpp"
#include "affconj/harness.hpp"
#include "oracles.hpp"

using namespace affconj;

namespace {

Matrix jordan(std::vector<std::size_t> parts) { return nilpotent_jordan_matrix(Partition{std::move(parts)}); }

}  // namespace

TEST_CASE("fitting index") {
  CHECK(fitting_index(Matrix{{2, 1}, {0, 3}}) == 0);
  CHECK(fitting_index(jordan({3})) == 3);
  CHECK(fitting_index(Matrix{{1, 0}, {0, 0}}) == 1);
  CHECK(fitting_index(Matrix()) == 0);
}

TEST_CASE("fitting split examples") {
  const Matrix a{{1, 1}, {1, 1}};
  const FittingSplit s = fitting_split(a);
  CHECK(s.star == Matrix{{2}});
  CHECK(s.nil == Matrix{{0}});
  CHECK(s.star_dim == 1);
  CHECK(inverse(s.basis_change) * a * s.basis_change == Matrix{{2, 0}, {0, 0}});
  // columns span (1,1) and the kernel line (1,-1)
  CHECK(s.basis_change.column(0) == Vector{1, 1});
  CHECK(rank(Matrix::from_columns(std::vector<Vector>{s.basis_change.column(1), Vector{1, -1}}, 2)) == 1);

  const Matrix n = jordan({2, 1});
  const FittingSplit sn = fitting_split(n);
  CHECK(sn.star_dim == 0);
  CHECK(sn.star == Matrix());
  CHECK(sn.nil == n);

  const Matrix inv{{0, 1}, {-1, 0}};
  const FittingSplit si = fitting_split(inv);
  CHECK(si.nil == Matrix());
  CHECK(similar(si.star, inv));
}

TEST_CASE("nilpotent partition examples") {
  CHECK(nilpotent_partition(jordan({3, 1})) == Partition{{3, 1}});
  CHECK(nilpotent_partition(Matrix(3, 3)) == Partition{{1, 1, 1}});
  CHECK(nilpotent_partition(Matrix()) == Partition{});
  CHECK_THROWS_AS(nilpotent_partition(Matrix{{1}}), std::invalid_argument);
}

TEST_CASE("partition from rank sequence") {
  const std::vector<std::size_t> r1{2, 1, 0};
  CHECK(partition_from_rank_sequence(r1, 4) == Partition{{3, 1}});
  const std::vector<std::size_t> r2{0};
  CHECK(partition_from_rank_sequence(r2, 2) == Partition{{1, 1}});
  const std::vector<std::size_t> r3{1, 0};
  CHECK(partition_from_rank_sequence(r3, 2) == Partition{{2}});
  CHECK(partition_from_rank_sequence(std::vector<std::size_t>{}, 0) == Partition{});

  const std::vector<std::size_t> rising{1, 2, 0};
  CHECK_THROWS_AS(partition_from_rank_sequence(rising, 3), std::invalid_argument);
  const std::vector<std::size_t> stuck{2, 1};
  CHECK_THROWS_AS(partition_from_rank_sequence(stuck, 3), std::invalid_argument);
  // drops 1 then 2 is impossible for a nilpotent matrix
  const std::vector<std::size_t> convex{3, 1, 0};
  CHECK_THROWS_AS(partition_from_rank_sequence(convex, 4), std::invalid_argument);
}

TEST_CASE("nilpotent jordan basis examples") {
  const Matrix j = jordan({2, 2, 1});
  const JordanBasis already = nilpotent_jordan_basis(j);
  CHECK(already.transform == Matrix::identity(5));
  CHECK(already.jordan == j);

  const Matrix lower{{0, 0}, {1, 0}};
  const JordanBasis b = nilpotent_jordan_basis(lower);
  CHECK(b.jordan == Matrix{{0, 1}, {0, 0}});
  CHECK(inverse(b.transform) * lower * b.transform == b.jordan);

  const JordanBasis z = nilpotent_jordan_basis(Matrix(3, 3));
  CHECK(z.transform == Matrix::identity(3));
  CHECK(z.jordan == Matrix(3, 3));
}

TEST_CASE("planted partitions survive conjugation (random)") {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 80; ++trial) {
    const auto n = static_cast<std::size_t>(rng.range(0, 7));
    const Partition p = oracle::random_partition(n, rng);
    const Matrix s = random_unimodular(n, 3, rng);
    const Matrix nmat = s * nilpotent_jordan_matrix(p) * inverse(s);
    CHECK(nilpotent_partition(nmat) == p);
    const JordanBasis jb = nilpotent_jordan_basis(nmat);
    CHECK(jb.jordan == nilpotent_jordan_matrix(p));
    CHECK(inverse(jb.transform) * nmat * jb.transform == jb.jordan);
    CHECK(nilpotent_partition(jb.jordan) == nilpotent_partition(nmat));
    // invariant factors of a nilpotent matrix are x^part
    const auto chain = smith_invariant_factors(nmat).chain;
    std::vector<std::size_t> exps;
    for (const auto& f : chain) {
      CHECK(f == Poly::monomial(1, static_cast<std::size_t>(f.degree())));
      exps.push_back(static_cast<std::size_t>(f.degree()));
    }
    std::sort(exps.rbegin(), exps.rend());
    CHECK(exps == p.parts);
  }
}

TEST_CASE("fitting split properties (random)") {
  for (std::uint64_t trial = 0; trial < 120; ++trial) {
    const GenConfig cfg{static_cast<std::size_t>(trial % 7), 3, derive_seed(7, trial), 0.7};
    const Matrix a = random_affine_operator(cfg).matrix();
    const std::size_t n = a.rows();
    const FittingSplit s = fitting_split(a);
    CHECK(inverse(s.basis_change) * a * s.basis_change == block_diag(s.star, s.nil));
    CHECK(rank(s.star) == s.star_dim);
    CHECK(is_nilpotent(s.nil));
    CHECK(s.star_dim == rank(power(a, n)));
    CHECK(char_poly(a) == char_poly(s.star) * Poly::monomial(1, n - s.star_dim));
    CHECK(fitting_index(a) <= n);

    // splitting an already split matrix preserves the pieces up to similarity
    const FittingSplit again = fitting_split(block_diag(s.star, s.nil));
    CHECK(char_poly(again.star) == char_poly(s.star));
    CHECK(nilpotent_partition(again.nil) == nilpotent_partition(s.nil));
  }
}
