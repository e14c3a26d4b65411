#pragma once

#include <string>
#include <vector>

#include "cogrowth/counting.hpp"

namespace cogrowth {

/// Finitely supported exact-rational vector on the element space; ids
/// sorted ascending, entries nonzero.
struct RatVector {
  std::vector<ElementId> ids;
  std::vector<Rat> values;

  std::size_t support() const { return ids.size(); }
  /// Exact squared 2-norm.
  Rat norm_squared() const;
  void scale(const Rat& c);
};

/// Builds a RatVector from unsorted (id, value) pairs, merging duplicates
/// and dropping zeros.
RatVector make_rat_vector(std::vector<std::pair<ElementId, Rat>> entries);

/// The distribution of the n-step uniform right walk from the identity:
/// chi_1 M^n, with entries lambda_s(n)/|X|^n. Sums to 1.
RatVector walk_vector(const CogrowthTable& table, std::size_t n);

/// One application of the Markov operator: (vM)(t) = (1/|X|) sum over
/// (s, i) with s.x_i = t of v(s). The image support is exact; new elements
/// are interned as needed (no truncation).
RatVector apply_markov(SemigroupEngine& E, const GeneratorChoice& X,
                       const RatVector& v);

struct WalkIdentityCheck {
  bool ok = true;
  std::size_t failed_n = 0;
  std::string detail;
};

/// Exact rational identity gamma_prime(2n) / |X|^(2n) = |chi_1 M^n|_2^2
/// for every n up to the table horizon, where the right side comes from the
/// walk vectors.
WalkIdentityCheck verify_walk_identity(const CogrowthTable& table);

/// |vM|_2 / |v|_2 with exact rational interiors; the square root is the
/// only floating step. Zero vectors are a usage error.
double rayleigh_quotient(SemigroupEngine& E, const GeneratorChoice& X,
                         const RatVector& v);

/// Exact square of the quotient, for tests that want no floating point.
Rat rayleigh_quotient_squared(SemigroupEngine& E, const GeneratorChoice& X,
                              const RatVector& v);

struct PowerIterationResult {
  double best_quotient = 0.0;
  std::vector<double> quotients;  // one per iteration
};

/// Rayleigh ascent from chi_1: apply M exactly, record |vM|/|v|, truncate
/// the image to the radius ball, l1-normalize, repeat. Every recorded
/// quotient is achieved by a concrete vector, so the best one is a true
/// lower bound for the operator norm. Radius >= 1.
PowerIterationResult norm_lower_bound(SemigroupEngine& E, const GeneratorChoice& X,
                                      std::size_t radius, std::size_t iterations);

class CayleyBall;

struct RayleighSampleReport {
  std::size_t samples = 0;  // vectors actually evaluated
  double max_quotient = 0.0;
  std::vector<double> quotients;
};

/// Seeded random vectors over the ball: sample i draws its own stream from
/// (seed, i), picks a support of 1..max_support ball elements and integer
/// values in [-5,5] \ {0}. Vectors whose entries cancel to zero are
/// skipped. Each quotient is a true lower bound for the operator norm.
RayleighSampleReport sample_rayleigh(SemigroupEngine& E, const GeneratorChoice& X,
                                     const CayleyBall& b, std::size_t samples,
                                     std::size_t max_support, std::uint64_t seed);

struct SpectralBound {
  double value = 0.0;     // max over n <= N of |chi_1 M^n|_2^(1/n)
  std::size_t argmax_n = 0;
  std::size_t horizon = 0;
};

/// Lower bound for the spectral radius of M. Reported as
/// gamma_rate(N)/|X|, which the walk identity makes equal to the max of
/// |chi_1 M^n|_2^(1/n); the two routes are cross-checked to 1e-12.
SpectralBound spectral_radius_lower_bound(const CogrowthTable& table);

}  // namespace cogrowth
