#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace cogrowth {

/// Exact arbitrary-precision integer. Every count in the library is one of
/// these; floating point only ever appears in final root/log extraction.
using Int = mpz_class;

/// Exact rational, used for Markov-operator vectors and Rayleigh quotients.
using Rat = mpq_class;

/// Natural log of a positive Int, computed from mantissa and exponent so it
/// stays accurate far beyond double range.
double log_int(const Int& v);

/// Natural log of a positive Rat.
double log_rat(const Rat& v);

/// v^(1/n) for positive v, via exp(log v / n).
double nth_root(const Int& v, std::size_t n);

/// Binomial coefficient C(n, k).
Int binomial(unsigned long n, unsigned long k);

/// base^exp.
Int int_pow(const Int& base, unsigned long exp);

/// Decimal rendering; Int and Rat serialize as exact strings, never doubles.
std::string to_decimal(const Int& v);
std::string to_decimal(const Rat& v);

/// SplitMix64 stream. Cheap to seed, passes BigCrush, and a distinct stream
/// can be derived per Monte Carlo trial so results do not depend on how
/// trials are partitioned across threads.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = -bound % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Derives the seed of an independent substream, e.g. one per trial.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
    g.next();
    return g.next();
  }

private:
  std::uint64_t state_;
};

}  // namespace cogrowth
