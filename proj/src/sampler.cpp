#include "skewlie/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "skewlie/errors.hpp"
#include "skewlie/linalg.hpp"
#include "skewlie/structmats.hpp"

namespace skewlie {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long SplitMix64::symmetric(long h) {
  const auto span = static_cast<std::uint64_t>(2 * h + 1);
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return static_cast<long>(x % span) - h;
}

void SampleConfig::validate() const {
  if (dim < kMinDim || dim > kMaxDim) {
    throw UnsupportedDim("sample dimension " + std::to_string(dim) + " outside 2..6");
  }
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (height < 1) throw std::invalid_argument("height must be >= 1");
}

SkewAlgebra random_algebra(const SampleConfig& cfg, std::size_t index) {
  cfg.validate();
  SplitMix64 rng(cfg.seed ^ static_cast<std::uint64_t>(index));
  const std::size_t n = cfg.dim;
  std::vector<Vec> constants(n * (n - 1) / 2, Vec(n));
  for (auto& v : constants)
    for (auto& c : v) c = Rational(rng.symmetric(cfg.height));
  return SkewAlgebra(n, std::move(constants));
}

Matrix random_matrix(SplitMix64& rng, std::size_t n, long h) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(rng.symmetric(h));
  return m;
}

Matrix random_invertible(SplitMix64& rng, std::size_t n, long h) {
  while (true) {
    Matrix m = random_matrix(rng, n, h);
    if (!determinant(m).is_zero()) return m;
  }
}

TrialOutcome run_trial(const SampleConfig& cfg, std::size_t index) {
  const SkewAlgebra a = random_algebra(cfg, index);
  TrialOutcome t;
  t.rank_M = orbit_dimension(a);
  t.homlie_dim = homlie_space(a).dim;
  t.homlie = t.homlie_dim >= 1;
  t.lie = is_lie(a);
  return t;
}

GenericityReport run_experiment(const SampleConfig& cfg, unsigned threads) {
  cfg.validate();
  std::vector<TrialOutcome> outcomes(cfg.trials);

  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, cfg.trials));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(workers);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = next++; i < cfg.trials; i = next++) outcomes[i] = run_trial(cfg, i);
    } catch (...) {
      failures[w] = std::current_exception();
      next = cfg.trials;
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  GenericityReport report;
  report.config = cfg;
  report.trials = cfg.trials;
  for (const auto& t : outcomes) {
    ++report.rank_histogram_M[t.rank_M];
    ++report.homlie_dim_histogram[t.homlie_dim];
    report.homlie_count += t.homlie ? 1 : 0;
    report.lie_count += t.lie ? 1 : 0;
  }
  return report;
}

}  // namespace skewlie
