#pragma once

#include <string>
#include <vector>

#include "cogrowth/engine.hpp"
#include "cogrowth/numeric.hpp"

namespace cogrowth {

/// Exact distribution of length-n words: counts[i] words evaluate to
/// ids[i]. Ids are sorted ascending, counts are positive, and the counts
/// sum to |X|^n.
struct CountVector {
  std::size_t n = 0;
  std::vector<ElementId> ids;
  std::vector<Int> counts;

  std::size_t support() const { return ids.size(); }
  Int total() const;
  /// Count for an element, zero when outside the support.
  const Int& at(ElementId s) const;
};

/// Exact inner product over the common support.
Int inner_product(const CountVector& a, const CountVector& b);

/// All word-count tables to a horizon: vectors v_1..v_N, the diagonal
/// series gamma_prime(n) for n <= 2N (zero at odd n), and the pair series
/// gamma(n) for n <= N+1 (splits i + j = n need both vectors within the
/// horizon, so N+1 is the safe range; gamma(1) = 0).
struct CogrowthTable {
  std::size_t horizon = 0;
  std::size_t num_generators = 0;
  std::vector<CountVector> vectors;  // vectors[n-1] holds v_n
  std::vector<Int> gamma_prime;      // gamma_prime[n-1], n = 1..2N
  std::vector<Int> gamma;            // gamma[n-1], n = 1..N+1

  const CountVector& vector_at(std::size_t n) const { return vectors.at(n - 1); }
  const Int& gamma_prime_at(std::size_t n) const { return gamma_prime.at(n - 1); }
  const Int& gamma_at(std::size_t n) const { return gamma.at(n - 1); }
};

/// One DP step per length: v_{n+1}[t] = sum over (s, i) with s.x_i = t of
/// v_n[s]. Exact big integers throughout; ResourceError propagates from the
/// engine when the cap is hit.
std::vector<CountVector> count_vectors(SemigroupEngine& E, const GeneratorChoice& X,
                                       std::size_t N);

CogrowthTable compute_cogrowth(SemigroupEngine& E, const GeneratorChoice& X,
                               std::size_t N);

/// lambda_s(n) for n = 1..N, zero where s is never represented.
std::vector<Int> local_cogrowth(const CogrowthTable& table, ElementId s);

struct RateEstimate {
  double value = 0.0;
  std::size_t horizon = 0;
  bool certified_lower_bound = false;
  std::size_t window_lo = 0, window_hi = 0;  // n range inspected
  std::size_t argmax_n = 0;                  // 0 when no positive term exists
};

/// max over even n <= 2N of gamma_prime(n)^(1/n), in log space. Certified:
/// every finite sup really bounds the limit gamma from below. Always at
/// least sqrt(|X|), exactly 1.0 when |X| = 1.
RateEstimate gamma_rate(const CogrowthTable& table);

/// Same, restricted to gamma_prime(n) with n <= 2*limit; limit <= horizon.
RateEstimate gamma_rate_prefix(const CogrowthTable& table, std::size_t limit);

/// max over n in [ceil(N/2), N] of lambda_s(n)^(1/n). Uncertified: a finite
/// window bounds no limsup. Requires N >= 2.
RateEstimate local_rate(const CogrowthTable& table, ElementId s);

struct ConvolutionCheck {
  bool ok = true;
  std::size_t failed_n = 0;
  std::string detail;
};

/// Replays gamma(n) for n <= min(N+1, 8) by direct enumeration of all word
/// pairs (u, v) with |uv| = n, and checks gamma(2n) >= lambda_s(n)^2 for
/// each tracked element.
ConvolutionCheck verify_convolution(SemigroupEngine& E, const GeneratorChoice& X,
                                    const CogrowthTable& table,
                                    const std::vector<ElementId>& tracked);

}  // namespace cogrowth
