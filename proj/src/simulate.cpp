#include "cogrowth/simulate.hpp"

#include <cmath>
#include <thread>
#include <vector>

#include "cogrowth/errors.hpp"

namespace cogrowth {

double WalkSample::estimate() const {
  return trials == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(trials);
}

double WalkSample::standard_error() const {
  if (trials == 0) return 0.0;
  const double p = estimate();
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

namespace {

/// Runs trials [lo, hi) and counts events; each trial gets its own derived
/// stream so the split into ranges cannot change the totals.
template <typename Event>
std::uint64_t run_range(std::uint64_t seed, std::uint64_t lo, std::uint64_t hi,
                        const Event& event) {
  std::uint64_t hits = 0;
  for (std::uint64_t t = lo; t < hi; ++t) {
    SplitMix64 rng(SplitMix64::derive(seed, t));
    if (event(rng)) ++hits;
  }
  return hits;
}

template <typename Event>
WalkSample sample(std::size_t n, std::uint64_t trials, std::uint64_t seed,
                  unsigned threads, const Event& event) {
  WalkSample s;
  s.seed = seed;
  s.n = n;
  s.trials = trials;
  if (trials == 0) throw UsageError("simulate: trials must be >= 1");
  if (threads <= 1 || trials < 1024) {
    s.hits = run_range(seed, 0, trials, event);
    return s;
  }
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (trials + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t lo = std::min<std::uint64_t>(w * chunk, trials);
    const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, trials);
    workers.emplace_back(
        [&, lo, hi, w] { partial[w] = run_range(seed, lo, hi, event); });
  }
  for (auto& t : workers) t.join();
  for (std::uint64_t h : partial) s.hits += h;
  return s;
}

std::size_t walk(const CayleyBall& b, std::size_t n, SplitMix64& rng) {
  const std::uint64_t k = b.num_generators();
  std::size_t at = 0;  // ball index of the identity
  for (std::size_t i = 0; i < n; ++i)
    at = b.step(at, static_cast<GenIndex>(rng.below(k)));
  return at;
}

}  // namespace

WalkSample estimate_local(const CayleyBall& b, ElementId s, std::size_t n,
                          std::uint64_t trials, std::uint64_t seed,
                          unsigned threads) {
  if (b.radius() < n)
    throw UsageError("estimate_local: ball radius smaller than the walk length");
  // A target outside the ball can never be hit; npos compares unequal to
  // every walk endpoint, keeping the trial loop uniform.
  const std::size_t target = b.index_of(s);
  return sample(n, trials, seed, threads,
                [&](SplitMix64& rng) { return walk(b, n, rng) == target; });
}

WalkSample estimate_coincidence(const CayleyBall& b, std::size_t n,
                                std::uint64_t trials, std::uint64_t seed,
                                unsigned threads) {
  if (b.radius() < n)
    throw UsageError("estimate_coincidence: ball radius smaller than the walk length");
  return sample(n, trials, seed, threads, [&](SplitMix64& rng) {
    const std::size_t first = walk(b, n, rng);
    return walk(b, n, rng) == first;
  });
}

}  // namespace cogrowth
