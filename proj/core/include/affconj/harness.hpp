#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "affconj/affine.hpp"
#include "affconj/matrix.hpp"

namespace affconj {

/// SplitMix64: state += 0x9E3779B97F4A7C15, then the output mix
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z ^= z >> 31
/// Only integer operations are used, so streams match across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform-ish integer in [lo, hi] by reduction modulo the span.
  std::int64_t range(std::int64_t lo, std::int64_t hi);
  /// True with probability p, compared against the top 53 bits.
  bool chance(double p);

 private:
  std::uint64_t state_;
};

/// Seed of the `index`-th derived stream of `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

struct GenConfig {
  std::size_t dimension = 3;
  std::uint64_t coefficient_bound = 3;  ///< entries drawn from [-bound, bound]
  std::uint64_t seed = 0;
  double nilpotent_bias = 0.5;  ///< probability of planting a nilpotent block
};

/// Random operator, deterministic in cfg. With probability nilpotent_bias
/// the matrix is S diag(M*, N) S^{-1} with M* nonsingular (eigenvalue 1
/// favoured), N strictly upper triangular and S unimodular.
AffineOperator random_affine_operator(const GenConfig& cfg);

/// Linear part is a product of random elementary matrices (determinant
/// +-1); shift entries are drawn from [-bound, bound].
AffineWitness random_affine_witness(const GenConfig& cfg);

Matrix random_unimodular(std::size_t n, std::uint64_t bound, SplitMix64& rng);
/// S N S^{-1} with N strictly upper triangular.
Matrix random_nilpotent(std::size_t n, std::uint64_t bound, SplitMix64& rng);

/// Oracle for image_dimension_sequence: star_dim + rank(nil^i), i = 1..n,
/// from the Fitting split of the matrix.
std::vector<std::size_t> predicted_image_dimensions(const AffineOperator& f);

struct SuiteReport {
  std::size_t trials = 0;      ///< trials completed
  std::size_t failures = 0;
  std::size_t fixed_point_trials = 0;
  std::size_t no_fixed_point_trials = 0;
  std::size_t max_bit_size = 0;  ///< largest entry observed
  std::optional<std::uint64_t> failing_seed;
  std::string failure;

  bool passed() const { return failures == 0; }
  std::string to_text() const;
  std::string to_json() const;
};

/// For each trial t draws f and h from derived seeds (n uniform in
/// [1, cfg.dimension]) and checks that classify and fixed-point existence
/// are unchanged by conjugation, and that the directly iterated image
/// dimensions match the Fitting prediction for f and h^{-1} f h. Stops at
/// the first failure, recording the seed that reproduces it.
SuiteReport run_invariance_suite(std::size_t trials, const GenConfig& cfg);

}  // namespace affconj
