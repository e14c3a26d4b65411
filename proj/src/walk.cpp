#include "cogrowth/walk.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cogrowth/cayley.hpp"
#include "cogrowth/errors.hpp"

namespace cogrowth {

Rat RatVector::norm_squared() const {
  Rat sum = 0;
  for (const Rat& v : values) sum += v * v;
  return sum;
}

void RatVector::scale(const Rat& c) {
  for (Rat& v : values) v *= c;
}

RatVector make_rat_vector(std::vector<std::pair<ElementId, Rat>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  RatVector out;
  for (auto& [id, val] : entries) {
    if (!out.ids.empty() && out.ids.back() == id) {
      out.values.back() += val;
      if (sgn(out.values.back()) == 0) {
        out.ids.pop_back();
        out.values.pop_back();
      }
    } else if (sgn(val) != 0) {
      out.ids.push_back(id);
      out.values.push_back(std::move(val));
    }
  }
  return out;
}

RatVector walk_vector(const CogrowthTable& table, std::size_t n) {
  const CountVector& v = table.vector_at(n);
  const Int scale = int_pow(Int(table.num_generators), static_cast<unsigned long>(n));
  RatVector out;
  out.ids = v.ids;
  out.values.reserve(v.counts.size());
  for (const Int& c : v.counts) {
    Rat q(c, scale);
    q.canonicalize();
    out.values.push_back(std::move(q));
  }
  return out;
}

RatVector apply_markov(SemigroupEngine& E, const GeneratorChoice& X,
                       const RatVector& v) {
  if (X.size() == 0) throw UsageError("apply_markov: empty generator choice");
  std::vector<std::pair<ElementId, Rat>> image;
  image.reserve(v.support() * X.size());
  const Rat inv_k(1, static_cast<unsigned long>(X.size()));
  for (std::size_t i = 0; i < v.ids.size(); ++i)
    for (std::size_t g = 0; g < X.size(); ++g)
      image.emplace_back(E.mul(v.ids[i], X.targets[g]), v.values[i] * inv_k);
  return make_rat_vector(std::move(image));
}

WalkIdentityCheck verify_walk_identity(const CogrowthTable& table) {
  WalkIdentityCheck check;
  const Int k(table.num_generators);
  for (std::size_t n = 1; n <= table.horizon; ++n) {
    const Rat lhs(table.gamma_prime_at(2 * n),
                  int_pow(k, static_cast<unsigned long>(2 * n)));
    Rat canon = lhs;
    canon.canonicalize();
    const Rat rhs = walk_vector(table, n).norm_squared();
    if (canon != rhs) {
      check.ok = false;
      check.failed_n = n;
      check.detail = "gamma_prime(2n)/|X|^(2n) = " + to_decimal(canon) +
                     " but |chi_1 M^n|^2 = " + to_decimal(rhs) + " at n = " +
                     std::to_string(n);
      return check;
    }
  }
  return check;
}

Rat rayleigh_quotient_squared(SemigroupEngine& E, const GeneratorChoice& X,
                              const RatVector& v) {
  const Rat denom = v.norm_squared();
  if (sgn(denom) == 0) throw UsageError("rayleigh_quotient: zero vector");
  return apply_markov(E, X, v).norm_squared() / denom;
}

double rayleigh_quotient(SemigroupEngine& E, const GeneratorChoice& X,
                         const RatVector& v) {
  const Rat q2 = rayleigh_quotient_squared(E, X, v);
  return std::sqrt(q2.get_d());
}

PowerIterationResult norm_lower_bound(SemigroupEngine& E, const GeneratorChoice& X,
                                      std::size_t radius, std::size_t iterations) {
  if (radius < 1) throw UsageError("norm_lower_bound: radius must be >= 1");
  const CayleyBall b = ball(E, X, radius);

  PowerIterationResult result;
  RatVector v;
  v.ids = {kIdentityId};
  v.values = {Rat(1)};
  for (std::size_t it = 0; it < iterations; ++it) {
    const Rat before = v.norm_squared();
    RatVector image = apply_markov(E, X, v);
    const Rat after = image.norm_squared();
    const double q = std::sqrt(Rat(after / before).get_d());
    result.quotients.push_back(q);
    result.best_quotient = std::max(result.best_quotient, q);

    // Keep the next start vector inside the ball so supports stay finite;
    // the recorded quotient above is unaffected by this truncation.
    std::vector<std::pair<ElementId, Rat>> kept;
    Rat mass = 0;
    for (std::size_t i = 0; i < image.ids.size(); ++i)
      if (b.index_of(image.ids[i]) != CayleyBall::npos) {
        kept.emplace_back(image.ids[i], image.values[i]);
        mass += abs(image.values[i]);
      }
    if (kept.empty() || sgn(mass) == 0) break;
    v = make_rat_vector(std::move(kept));
    v.scale(1 / mass);
  }
  return result;
}

RayleighSampleReport sample_rayleigh(SemigroupEngine& E, const GeneratorChoice& X,
                                     const CayleyBall& b, std::size_t samples,
                                     std::size_t max_support, std::uint64_t seed) {
  if (b.size() == 0) throw UsageError("sample_rayleigh: empty ball");
  if (max_support == 0) throw UsageError("sample_rayleigh: max_support must be >= 1");
  RayleighSampleReport report;
  const std::uint64_t pool = b.size();
  const std::uint64_t cap = std::min<std::uint64_t>(max_support, pool);
  for (std::size_t i = 0; i < samples; ++i) {
    SplitMix64 rng(SplitMix64::derive(seed, i));
    const std::uint64_t m = 1 + rng.below(cap);
    std::vector<std::pair<ElementId, Rat>> entries;
    for (std::uint64_t e = 0; e < m; ++e) {
      const ElementId id = b.element(static_cast<std::size_t>(rng.below(pool)));
      const long mag = 1 + static_cast<long>(rng.below(5));
      entries.emplace_back(id, Rat(rng.below(2) ? -mag : mag));
    }
    RatVector v = make_rat_vector(std::move(entries));
    if (v.support() == 0) continue;  // duplicates cancelled out
    const double q = rayleigh_quotient(E, X, v);
    ++report.samples;
    report.quotients.push_back(q);
    report.max_quotient = std::max(report.max_quotient, q);
  }
  return report;
}

SpectralBound spectral_radius_lower_bound(const CogrowthTable& table) {
  const RateEstimate rate = gamma_rate(table);
  SpectralBound bound;
  bound.horizon = table.horizon;
  bound.argmax_n = rate.argmax_n / 2;
  bound.value = rate.value / static_cast<double>(table.num_generators);

  // Independent route through the walk norms; the identity
  // gamma_prime(2n) = |X|^(2n) |chi_1 M^n|^2 makes the two agree.
  double best = -1.0;
  const double log_k = std::log(static_cast<double>(table.num_generators));
  for (std::size_t n = 1; n <= table.horizon; ++n) {
    const Int& g = table.gamma_prime_at(2 * n);
    if (sgn(g) <= 0) continue;
    const double v = 0.5 * log_int(g) / static_cast<double>(n) - log_k;
    best = std::max(best, v);
  }
  if (best > -1.0) {
    const double walk_route = std::exp(best);
    if (std::abs(walk_route - bound.value) > 1e-12 * std::max(1.0, bound.value))
      throw std::logic_error("spectral_radius_lower_bound: route disagreement");
  }
  return bound;
}

}  // namespace cogrowth
