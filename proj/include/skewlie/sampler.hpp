#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

#include "skewlie/algebra.hpp"

namespace skewlie {

/// SplitMix64 stream; one instance per (seed, index) keeps trials independent.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform integer in [-h, h].
  long symmetric(long h);

 private:
  std::uint64_t state_;
};

struct SampleConfig {
  std::size_t dim = 3;
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  long height = 1;

  /// Throws UnsupportedDim / std::invalid_argument on out-of-range fields.
  void validate() const;
};

/// Deterministic in (cfg.seed, index): integer structure constants in
/// [-height, height] drawn from SplitMix64(seed ^ index).
SkewAlgebra random_algebra(const SampleConfig& cfg, std::size_t index);

/// n x n integer matrix with entries in [-h, h].
Matrix random_matrix(SplitMix64& rng, std::size_t n, long h);
/// Redraws until the determinant is nonzero.
Matrix random_invertible(SplitMix64& rng, std::size_t n, long h);

struct TrialOutcome {
  std::size_t rank_M = 0;
  std::size_t homlie_dim = 0;
  bool homlie = false;
  bool lie = false;
};

struct GenericityReport {
  SampleConfig config;
  std::map<std::size_t, std::size_t> rank_histogram_M;
  std::map<std::size_t, std::size_t> homlie_dim_histogram;
  std::size_t homlie_count = 0;
  std::size_t lie_count = 0;
  std::size_t trials = 0;
};

TrialOutcome run_trial(const SampleConfig& cfg, std::size_t index);

/// Evaluates every trial (on up to `threads` workers, 0 = hardware
/// concurrency) and merges the outcomes in index order.
GenericityReport run_experiment(const SampleConfig& cfg, unsigned threads = 0);

}  // namespace skewlie
