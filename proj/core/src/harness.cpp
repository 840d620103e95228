#include "affconj/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "affconj/classify.hpp"
#include "affconj/decompose.hpp"

namespace affconj {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::range(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("SplitMix64::range: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

bool SplitMix64::chance(double p) {
  if (p <= 0.0) {
    next();
    return false;
  }
  if (p >= 1.0) {
    next();
    return true;
  }
  const auto threshold = static_cast<std::uint64_t>(std::ldexp(p, 53));
  return (next() >> 11) < threshold;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return SplitMix64(base ^ (index * 0xD1B54A32D192ED03ULL)).next();
}

namespace {

Rational random_entry(std::uint64_t bound, SplitMix64& rng) {
  const auto b = static_cast<std::int64_t>(bound);
  return Rational(static_cast<long>(rng.range(-b, b)));
}

Rational random_nonzero(std::uint64_t bound, SplitMix64& rng) {
  const auto b = static_cast<std::int64_t>(bound);
  std::int64_t v = rng.range(1, b);
  return Rational(static_cast<long>(rng.chance(0.5) ? -v : v));
}

// Upper triangular; each diagonal entry is 1 with probability `one_bias`,
// otherwise nonzero (or arbitrary when allow_zero).
Matrix random_triangular(std::size_t n, std::uint64_t bound, double one_bias, bool allow_zero,
                         SplitMix64& rng) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng.chance(one_bias))
      m(i, i) = 1;
    else
      m(i, i) = allow_zero ? random_entry(bound, rng) : random_nonzero(bound, rng);
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = rng.chance(0.5) ? random_entry(bound, rng) : Rational(0);
  }
  return m;
}

Vector random_vector(std::size_t n, std::uint64_t bound, SplitMix64& rng) {
  Vector v(n);
  for (auto& x : v) x = random_entry(bound, rng);
  return v;
}

std::size_t max_bits(const AffineOperator& f) {
  std::size_t best = f.matrix().max_bit_size();
  for (const auto& x : f.translation()) best = std::max(best, x.bit_size());
  return best;
}

}  // namespace

Matrix random_unimodular(std::size_t n, std::uint64_t bound, SplitMix64& rng) {
  Matrix m = Matrix::identity(n);
  if (n == 0) return m;
  const auto last = static_cast<std::int64_t>(n) - 1;
  for (std::size_t step = 0; step < 2 * n; ++step) {
    const auto kind = rng.range(0, 9);
    const auto i = static_cast<std::size_t>(rng.range(0, last));
    if (n == 1 || kind == 0) {
      for (std::size_t c = 0; c < n; ++c) m(i, c) = -m(i, c);
      continue;
    }
    auto j = static_cast<std::size_t>(rng.range(0, last - 1));
    if (j >= i) ++j;
    if (kind == 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(i, c), m(j, c));
    } else {
      const Rational factor = random_nonzero(bound, rng);
      for (std::size_t c = 0; c < n; ++c) m(i, c) += factor * m(j, c);
    }
  }
  return m;
}

Matrix random_nilpotent(std::size_t n, std::uint64_t bound, SplitMix64& rng) {
  Matrix strict(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) strict(i, j) = rng.chance(0.5) ? random_entry(bound, rng) : Rational(0);
  const Matrix s = random_unimodular(n, bound, rng);
  return s * strict * inverse(s);
}

AffineOperator random_affine_operator(const GenConfig& cfg) {
  const std::size_t n = cfg.dimension;
  if (n == 0) return {};
  const std::uint64_t bound = std::max<std::uint64_t>(cfg.coefficient_bound, 1);
  SplitMix64 rng(cfg.seed);

  Matrix core;
  if (rng.chance(cfg.nilpotent_bias)) {
    const auto nil_dim = static_cast<std::size_t>(rng.range(1, static_cast<std::int64_t>(n)));
    core = block_diag(random_triangular(n - nil_dim, bound, 0.5, false, rng),
                      random_nilpotent(nil_dim, bound, rng));
  } else if (rng.chance(0.5)) {
    core = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) core(i, j) = random_entry(bound, rng);
  } else {
    core = random_triangular(n, bound, 1.0 / 3.0, true, rng);
  }
  const Matrix s = random_unimodular(n, bound, rng);
  Vector b = rng.chance(0.2) ? Vector(n) : random_vector(n, bound, rng);
  return {s * core * inverse(s), std::move(b)};
}

AffineWitness random_affine_witness(const GenConfig& cfg) {
  const std::uint64_t bound = std::max<std::uint64_t>(cfg.coefficient_bound, 1);
  SplitMix64 rng(cfg.seed);
  Matrix linear = random_unimodular(cfg.dimension, bound, rng);
  Vector shift = random_vector(cfg.dimension, bound, rng);
  return {std::move(linear), std::move(shift)};
}

std::vector<std::size_t> predicted_image_dimensions(const AffineOperator& f) {
  const FittingSplit split = fitting_split(f.matrix());
  std::vector<std::size_t> dims;
  Matrix p = Matrix::identity(split.nil.rows());
  for (std::size_t i = 1; i <= f.dim(); ++i) {
    p = p * split.nil;
    dims.push_back(split.star_dim + rank(p));
  }
  return dims;
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "trials: " << trials << '\n'
     << "failures: " << failures << '\n'
     << "fixed-point trials: " << fixed_point_trials << '\n'
     << "no-fixed-point trials: " << no_fixed_point_trials << '\n'
     << "max coefficient bits: " << max_bit_size << '\n';
  if (failing_seed) os << "failing seed: " << *failing_seed << '\n' << "failure: " << failure << '\n';
  os << (passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["trials"] = trials;
  j["failures"] = failures;
  j["fixed_point_trials"] = fixed_point_trials;
  j["no_fixed_point_trials"] = no_fixed_point_trials;
  j["max_bit_size"] = max_bit_size;
  j["failing_seed"] = failing_seed ? nlohmann::ordered_json(*failing_seed) : nlohmann::ordered_json(nullptr);
  j["failure"] = failure;
  j["passed"] = passed();
  return j.dump(2);
}

SuiteReport run_invariance_suite(std::size_t trials, const GenConfig& cfg) {
  if (trials == 0) throw std::invalid_argument("run_invariance_suite: trials must be at least 1");
  SuiteReport report;
  for (std::size_t t = 0; t < trials; ++t) {
    GenConfig fc = cfg;
    fc.seed = derive_seed(cfg.seed, 2 * t);
    if (cfg.dimension > 0)
      fc.dimension = 1 + static_cast<std::size_t>(fc.seed % cfg.dimension);
    GenConfig hc = fc;
    hc.seed = derive_seed(cfg.seed, 2 * t + 1);

    auto fail = [&](std::string why) {
      report.failures = 1;
      report.failing_seed = fc.seed;
      report.failure = "trial " + std::to_string(t) + " (witness seed " + std::to_string(hc.seed) +
                       ", n=" + std::to_string(fc.dimension) + "): " + std::move(why);
    };

    try {
      const AffineOperator f = random_affine_operator(fc);
      const AffineWitness h = random_affine_witness(hc);
      const AffineOperator g = conjugate_by(f, h);
      report.max_bit_size = std::max({report.max_bit_size, max_bits(f), max_bits(g)});

      const auto inv_f = classify(f);
      const auto inv_g = classify(g);
      if (inv_f.has_fixed_point())
        ++report.fixed_point_trials;
      else
        ++report.no_fixed_point_trials;

      if (fixed_point(f).has_value() != fixed_point(g).has_value())
        fail("fixed-point existence changed under conjugation");
      else if (!(inv_f == inv_g))
        fail("invariant changed under conjugation: " + inv_f.summary() + " vs " + inv_g.summary());
      else if (image_dimension_sequence(f) != predicted_image_dimensions(f))
        fail("image dimensions of f disagree with the Fitting prediction");
      else if (image_dimension_sequence(g) != predicted_image_dimensions(g))
        fail("image dimensions of the conjugate disagree with the Fitting prediction");
    } catch (const std::exception& e) {
      fail(std::string("exception: ") + e.what());
    }
    ++report.trials;
    if (report.failures) break;
  }
  return report;
}

}  // namespace affconj
