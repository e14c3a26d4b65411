#pragma once

#include <cstdint>

#include "cogrowth/cayley.hpp"

namespace cogrowth {

/// Outcome of a seeded Monte Carlo estimate; hits/trials estimates the
/// probability of the sampled event.
struct WalkSample {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;

  double estimate() const;
  double standard_error() const;  // sqrt(p(1-p)/trials) at p = estimate()
};

/// Probability that an n-step uniform right walk from the identity of S^1
/// ends at s: targets lambda_s(n)/|X|^n. The ball must have radius >= n.
/// Each trial draws from its own SplitMix64 stream derived from (seed,
/// trial index), so results are independent of the thread partition.
WalkSample estimate_local(const CayleyBall& b, ElementId s, std::size_t n,
                          std::uint64_t trials, std::uint64_t seed,
                          unsigned threads = 1);

/// Probability that two independent n-step walks end at the same element:
/// targets gamma_prime(2n)/|X|^(2n). Draws the first walk's n generators,
/// then the second's, from the trial stream.
WalkSample estimate_coincidence(const CayleyBall& b, std::size_t n,
                                std::uint64_t trials, std::uint64_t seed,
                                unsigned threads = 1);

}  // namespace cogrowth
