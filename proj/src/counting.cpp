#include "cogrowth/counting.hpp"

#include <algorithm>
#include <cmath>

#include "cogrowth/errors.hpp"

namespace cogrowth {

namespace {
const Int kZero = 0;
}

Int CountVector::total() const {
  Int sum = 0;
  for (const Int& c : counts) sum += c;
  return sum;
}

const Int& CountVector::at(ElementId s) const {
  const auto it = std::lower_bound(ids.begin(), ids.end(), s);
  if (it == ids.end() || *it != s) return kZero;
  return counts[static_cast<std::size_t>(it - ids.begin())];
}

Int inner_product(const CountVector& a, const CountVector& b) {
  Int sum = 0;
  std::size_t i = 0, j = 0;
  while (i < a.ids.size() && j < b.ids.size()) {
    if (a.ids[i] < b.ids[j]) {
      ++i;
    } else if (a.ids[i] > b.ids[j]) {
      ++j;
    } else {
      // sum += a.counts[i] * b.counts[j] without a temporary
      mpz_addmul(sum.get_mpz_t(), a.counts[i].get_mpz_t(), b.counts[j].get_mpz_t());
      ++i;
      ++j;
    }
  }
  return sum;
}

std::vector<CountVector> count_vectors(SemigroupEngine& E, const GeneratorChoice& X,
                                       std::size_t N) {
  if (X.size() == 0) throw UsageError("count_vectors: empty generator choice");
  std::vector<CountVector> out;
  out.reserve(N);

  // Dense accumulator indexed by element id, plus the list of nonzero slots.
  // Entries move out via swap when a vector is harvested, so the
  // accumulator never retains limb allocations between lengths.
  std::vector<Int> acc;
  std::vector<ElementId> touched;

  auto bump = [&](ElementId t, const Int& c) {
    if (t >= acc.size()) {
      std::size_t grown = std::max<std::size_t>(t + 1, E.size());
      grown = std::max(grown, acc.size() + acc.size() / 2);
      acc.resize(grown);
    }
    if (sgn(acc[t]) == 0) touched.push_back(t);
    acc[t] += c;
  };

  auto harvest = [&](std::size_t n) {
    std::sort(touched.begin(), touched.end());
    CountVector v;
    v.n = n;
    v.ids = touched;
    v.counts.resize(touched.size());
    for (std::size_t i = 0; i < touched.size(); ++i) std::swap(v.counts[i], acc[touched[i]]);
    touched.clear();
    out.push_back(std::move(v));
  };

  if (N == 0) return out;

  const Int one = 1;
  for (std::size_t i = 0; i < X.size(); ++i) bump(X.targets[i], one);
  harvest(1);

  for (std::size_t n = 2; n <= N; ++n) {
    const CountVector& prev = out.back();
    for (std::size_t i = 0; i < prev.ids.size(); ++i) {
      const ElementId s = prev.ids[i];
      for (std::size_t g = 0; g < X.size(); ++g)
        bump(E.mul(s, X.targets[g]), prev.counts[i]);
    }
    harvest(n);
  }
  return out;
}

CogrowthTable compute_cogrowth(SemigroupEngine& E, const GeneratorChoice& X,
                               std::size_t N) {
  if (N == 0) throw UsageError("compute_cogrowth: N must be >= 1");
  CogrowthTable t;
  t.horizon = N;
  t.num_generators = X.size();
  t.vectors = count_vectors(E, X, N);

  t.gamma_prime.assign(2 * N, 0);
  for (std::size_t k = 1; k <= N; ++k)
    t.gamma_prime[2 * k - 1] = inner_product(t.vectors[k - 1], t.vectors[k - 1]);

  t.gamma.assign(N + 1, 0);
  for (std::size_t n = 2; n <= N + 1; ++n) {
    Int sum = 0;
    for (std::size_t i = 1; 2 * i < n; ++i)
      sum += 2 * inner_product(t.vectors[i - 1], t.vectors[n - i - 1]);
    if (n % 2 == 0) sum += t.gamma_prime[n - 1];
    t.gamma[n - 1] = std::move(sum);
  }
  return t;
}

std::vector<Int> local_cogrowth(const CogrowthTable& table, ElementId s) {
  std::vector<Int> lambda(table.horizon);
  for (std::size_t n = 1; n <= table.horizon; ++n)
    lambda[n - 1] = table.vector_at(n).at(s);
  return lambda;
}

RateEstimate gamma_rate_prefix(const CogrowthTable& table, std::size_t limit) {
  if (table.horizon == 0 || limit == 0)
    throw UsageError("gamma_rate: horizon must be >= 1");
  if (limit > table.horizon)
    throw UsageError("gamma_rate: prefix exceeds the computed horizon");

  RateEstimate r;
  r.horizon = limit;
  r.certified_lower_bound = true;
  r.window_lo = 2;
  r.window_hi = 2 * limit;
  double best = -1.0;
  for (std::size_t k = 1; k <= limit; ++k) {
    const Int& g = table.gamma_prime[2 * k - 1];
    if (sgn(g) <= 0) continue;
    const double v = log_int(g) / static_cast<double>(2 * k);
    if (v > best) {
      best = v;
      r.argmax_n = 2 * k;
    }
  }
  r.value = r.argmax_n == 0 ? 0.0 : std::exp(best);
  if (table.num_generators == 1) r.value = 1.0;  // gamma = 1 = |X| exactly
  return r;
}

RateEstimate gamma_rate(const CogrowthTable& table) {
  return gamma_rate_prefix(table, table.horizon);
}

RateEstimate local_rate(const CogrowthTable& table, ElementId s) {
  if (table.horizon < 2) throw UsageError("local_rate: horizon must be >= 2");
  RateEstimate r;
  r.horizon = table.horizon;
  r.certified_lower_bound = false;
  r.window_lo = (table.horizon + 1) / 2;
  r.window_hi = table.horizon;
  double best = -1.0;
  for (std::size_t n = r.window_lo; n <= r.window_hi; ++n) {
    const Int& l = table.vector_at(n).at(s);
    if (sgn(l) <= 0) continue;
    const double v = log_int(l) / static_cast<double>(n);
    if (v > best) {
      best = v;
      r.argmax_n = n;
    }
  }
  r.value = r.argmax_n == 0 ? 0.0 : std::exp(best);
  return r;
}

ConvolutionCheck verify_convolution(SemigroupEngine& E, const GeneratorChoice& X,
                                    const CogrowthTable& table,
                                    const std::vector<ElementId>& tracked) {
  ConvolutionCheck check;
  const std::size_t k = X.size();
  std::size_t limit = std::min<std::size_t>(table.horizon + 1, 8);

  // Independent enumeration: evaluate every word of each length afresh
  // rather than reusing the DP merge. words[i-1] lists all k^i results in
  // odometer order; memory is bounded by shrinking the range for wide
  // choices.
  constexpr std::size_t kMaxWords = std::size_t(1) << 24;
  std::vector<std::vector<ElementId>> words;
  std::size_t count = 1;
  for (std::size_t len = 1; len + 1 <= limit; ++len) {
    if (count > kMaxWords / k) {
      limit = len;  // gamma(n) needs word lengths up to n - 1
      check.detail = "enumeration capped at n <= " + std::to_string(limit);
      break;
    }
    count *= k;
    std::vector<ElementId> layer(count);
    for (std::size_t w = 0; w < count; ++w) {
      const ElementId prefix = len == 1 ? kIdentityId : words[len - 2][w / k];
      layer[w] = E.mul(prefix, X.targets[w % k]);
    }
    words.push_back(std::move(layer));
  }

  std::vector<std::unordered_map<ElementId, Int>> hist;
  for (const auto& layer : words) {
    hist.emplace_back();
    for (ElementId s : layer) hist.back()[s] += 1;
  }

  for (std::size_t n = 2; n <= limit; ++n) {
    Int pairs = 0;
    for (std::size_t i = 1; i < n; ++i) {
      const auto& hi = hist[i - 1];
      const auto& hj = hist[n - i - 1];
      const auto& small = hi.size() <= hj.size() ? hi : hj;
      const auto& large = hi.size() <= hj.size() ? hj : hi;
      for (const auto& [s, c] : small) {
        const auto it = large.find(s);
        if (it != large.end()) pairs += c * it->second;
      }
    }
    if (pairs != table.gamma_at(n)) {
      check.ok = false;
      check.failed_n = n;
      check.detail = "gamma(" + std::to_string(n) + ") = " +
                     table.gamma_at(n).get_str() + " but enumeration found " +
                     pairs.get_str();
      return check;
    }
  }

  for (ElementId s : tracked) {
    for (std::size_t n = 1; 2 * n <= table.horizon + 1; ++n) {
      const Int& l = table.vector_at(n).at(s);
      if (table.gamma_at(2 * n) < l * l) {
        check.ok = false;
        check.failed_n = 2 * n;
        check.detail = "gamma(2n) < lambda_s(n)^2 at n = " + std::to_string(n);
        return check;
      }
    }
  }
  return check;
}

}  // namespace cogrowth
