#include <doctest.h>

#include "affconj/affine.hpp"
#include "affconj/harness.hpp"

using namespace affconj;

namespace {

Rational q(long n, long d) { return Rational(mpz_class(n), mpz_class(d)); }

AffineOperator op(Matrix a, Vector b) { return {std::move(a), std::move(b)}; }

}  // namespace

TEST_CASE("operator construction validates shape") {
  CHECK_THROWS_AS(AffineOperator(Matrix(2, 3), Vector(2)), std::invalid_argument);
  CHECK_THROWS_AS(AffineOperator(Matrix::identity(2), Vector(3)), std::invalid_argument);
  CHECK(AffineOperator().dim() == 0);
  CHECK_THROWS_AS(AffineWitness(Matrix{{1, 2}, {2, 4}}, Vector(2)), std::invalid_argument);
}

TEST_CASE("apply") {
  CHECK(affconj::apply(op(Matrix::identity(2), {1, 0}), {0, 0}) == Vector{1, 0});
  CHECK(affconj::apply(op(Matrix{{1, 1}, {0, 1}}, {0, 1}), {0, 0}) == Vector{0, 1});
  CHECK(affconj::apply(op(Matrix{{2}}, {-1}), {1}) == Vector{1});
  CHECK_THROWS_AS(affconj::apply(op(Matrix{{2}}, {-1}), {1, 2}), std::invalid_argument);
}

TEST_CASE("compose") {
  const auto f = op(Matrix{{1, 1}, {0, 1}}, {0, 1});
  CHECK(compose(AffineOperator::identity(2), f) == f);
  CHECK(compose(op(Matrix::identity(2), {1, 0}), op(Matrix::identity(2), {0, 1})) ==
        op(Matrix::identity(2), {1, 1}));
  CHECK(compose(op(Matrix{{2}}, {0}), op(Matrix{{3}}, {1})) == op(Matrix{{6}}, {2}));
  CHECK_THROWS_AS(compose(f, AffineOperator::identity(1)), std::invalid_argument);
}

TEST_CASE("witness inverse") {
  CHECK(inverse(AffineWitness::identity(2)) == AffineWitness::identity(2));
  CHECK(inverse(AffineWitness(Matrix::identity(2), {1, 2})) == AffineWitness(Matrix::identity(2), {-1, -2}));
  CHECK(inverse(AffineWitness(Matrix{{2}}, {4})) == AffineWitness(Matrix{{q(1, 2)}}, {-2}));
}

TEST_CASE("direct sum") {
  CHECK(direct_sum(op(Matrix{{2}}, {1}), op(Matrix{{3}}, {0})) == op(Matrix{{2, 0}, {0, 3}}, {1, 0}));
  const auto f = op(Matrix{{1, 1}, {0, 1}}, {0, 1});
  CHECK(direct_sum(f, AffineOperator()) == f);
  CHECK(direct_sum(AffineOperator(), f) == f);
  CHECK(direct_sum(op(Matrix{{1}}, {1}), op(Matrix{{0}}, {0})) == op(Matrix{{1, 0}, {0, 0}}, {1, 0}));
}

TEST_CASE("fixed points") {
  const auto f = op(Matrix{{2, 0}, {0, 3}}, {1, 1});
  const auto p = fixed_point(f);
  REQUIRE(p.has_value());
  CHECK(*p == Vector{-1, q(-1, 2)});
  CHECK(affconj::apply(f, *p) == *p);
  CHECK_FALSE(fixed_point(op(Matrix{{1}}, {1})).has_value());
  CHECK_FALSE(fixed_point(op(Matrix{{1, 1}, {0, 1}}, {0, 1})).has_value());
  // positive-dimensional fixed set: free variables are zero
  CHECK(fixed_point(op(Matrix{{1, 0}, {0, 2}}, {0, 1})) == Vector{0, -1});
}

TEST_CASE("linear conjugation") {
  const auto f = op(Matrix{{1, 1}, {1, 1}}, {0, 0});
  CHECK(linear_conjugate(f, Matrix::identity(2)) == f);
  CHECK(linear_conjugate(f, Matrix{{1, 1}, {1, -1}}) == op(Matrix{{2, 0}, {0, 0}}, {0, 0}));
  CHECK(linear_conjugate(op(Matrix::identity(2), {1, 1}), Matrix{{1, 0}, {1, 1}}) == op(Matrix::identity(2), {1, 0}));
  CHECK_THROWS_AS(linear_conjugate(f, Matrix{{1, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("translation conjugation") {
  CHECK(translation_conjugate(op(Matrix{{2}}, {-1}), {1}) == op(Matrix{{2}}, {0}));
  const auto f = op(Matrix{{1, 1}, {0, 1}}, {0, 1});
  CHECK(translation_conjugate(f, {0, 0}) == f);
  CHECK(translation_conjugate(op(Matrix{{1}}, {1}), {5}) == op(Matrix{{1}}, {1}));
}

TEST_CASE("conjugate_by agrees with the two special moves") {
  const auto f = op(Matrix{{2}}, {-1});
  CHECK(conjugate_by(f, AffineWitness::identity(1)) == f);
  CHECK(conjugate_by(f, AffineWitness(Matrix{{1}}, {1})) == op(Matrix{{2}}, {0}));
  CHECK(conjugate_by(op(Matrix::identity(2), {1, 1}), AffineWitness(Matrix{{1, 0}, {1, 1}}, {0, 0})) ==
        op(Matrix::identity(2), {1, 0}));
}

TEST_CASE("affine algebra properties (random)") {
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(trial % 7);
    GenConfig cfg{n, 3, derive_seed(99, 3 * trial), 0.5};
    const AffineOperator f = random_affine_operator(cfg);
    cfg.seed = derive_seed(99, 3 * trial + 1);
    const AffineWitness h = random_affine_witness(cfg);
    cfg.seed = derive_seed(99, 3 * trial + 2);
    const AffineWitness k = random_affine_witness(cfg);

    CHECK(conjugate_by(conjugate_by(f, h), inverse(h)) == f);
    CHECK(fixed_point(f).has_value() == fixed_point(conjugate_by(f, h)).has_value());
    CHECK(compose(h, inverse(h)) == AffineWitness::identity(n));
    CHECK(compose(compose(f, h.as_operator()), k.as_operator()) ==
          compose(f, compose(h.as_operator(), k.as_operator())));
    if (auto p = fixed_point(f)) {
      CHECK(affconj::apply(f, *p) == *p);
      CHECK(translation_conjugate(f, *p).translation() == Vector(n));
    }
    // direct sum acts blockwise
    const Vector x = h.shift();
    const Vector y = k.shift();
    Vector xy = x;
    xy.insert(xy.end(), y.begin(), y.end());
    const AffineOperator g = conjugate_by(f, k);
    Vector expected = affconj::apply(f, x);
    const Vector gy = affconj::apply(g, y);
    expected.insert(expected.end(), gy.begin(), gy.end());
    CHECK(affconj::apply(direct_sum(f, g), xy) == expected);
  }
}
