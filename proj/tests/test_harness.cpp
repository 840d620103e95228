#include <doctest.h>

#include "affconj/classify.hpp"
#include "affconj/harness.hpp"

using namespace affconj;

TEST_CASE("splitmix64 reference stream") {
  // First outputs for seed 0 of the published SplitMix64 generator.
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0x06C45D188009454FULL);
}

TEST_CASE("generators are deterministic") {
  const GenConfig cfg{4, 3, 1234, 0.5};
  CHECK(random_affine_operator(cfg) == random_affine_operator(cfg));
  CHECK(random_affine_witness(cfg) == random_affine_witness(cfg));
  GenConfig other = cfg;
  other.seed = 1235;
  CHECK_FALSE(random_affine_operator(cfg) == random_affine_operator(other));
}

TEST_CASE("generator edge cases") {
  CHECK(random_affine_operator(GenConfig{0, 3, 1, 0.5}).dim() == 0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const AffineWitness h = random_affine_witness(GenConfig{1, 1, seed, 0.5});
    CHECK((h.linear() == Matrix{{1}} || h.linear() == Matrix{{-1}}));
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const AffineOperator f = random_affine_operator(GenConfig{2, 3, seed, 1.0});
    CHECK(rank(power(f.matrix(), 2)) < 2);
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const AffineWitness h = random_affine_witness(GenConfig{6, 3, seed, 0.5});
    CHECK(determinant(h.linear()).abs() == Rational(1));
  }
}

TEST_CASE("generated operators cover both cases") {
  std::size_t with = 0, without = 0, planted = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const AffineOperator f = random_affine_operator(GenConfig{4, 3, derive_seed(5, seed), 0.5});
    (fixed_point(f) ? with : without)++;
    if (rank(power(f.matrix(), 4)) < 4) ++planted;
  }
  CHECK(with > 20);
  CHECK(without > 20);
  CHECK(planted > 50);
}

TEST_CASE("invariance suite") {
  SUBCASE("single trial") {
    const SuiteReport r = run_invariance_suite(1, GenConfig{4, 3, 42, 0.5});
    CHECK(r.trials == 1);
    CHECK(r.passed());
  }
  SUBCASE("dimension zero is vacuous") {
    const SuiteReport r = run_invariance_suite(5, GenConfig{0, 3, 42, 0.5});
    CHECK(r.trials == 5);
    CHECK(r.passed());
  }
  SUBCASE("report renders") {
    const SuiteReport r = run_invariance_suite(20, GenConfig{5, 3, 9, 0.5});
    CHECK(r.passed());
    CHECK(r.to_text().find("failures: 0") != std::string::npos);
    CHECK(r.to_json().find("\"passed\": true") != std::string::npos);
  }
  CHECK_THROWS_AS(run_invariance_suite(0, GenConfig{}), std::invalid_argument);
}

TEST_CASE("flagship fixture is constant on its affine orbit") {
  const AffineOperator f(Matrix{{1, 1}, {0, 1}}, Vector{0, 1});
  const auto inv = classify(f);
  for (std::uint64_t k = 0; k < 50; ++k) {
    const AffineWitness h = random_affine_witness(GenConfig{2, 3, derive_seed(314, k), 0.5});
    CHECK(classify(conjugate_by(f, h)) == inv);
  }
}

TEST_CASE("image dimension oracle matches direct iteration") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const AffineOperator f = random_affine_operator(GenConfig{6, 3, derive_seed(8, seed), 0.6});
    CHECK(image_dimension_sequence(f) == predicted_image_dimensions(f));
  }
}
