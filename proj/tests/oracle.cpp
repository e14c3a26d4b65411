#include "oracle.hpp"

#include <algorithm>
#include <set>

#include "cogrowth/errors.hpp"

namespace oracle {

namespace {

using cogrowth::eval_word;
using cogrowth::GenIndex;
using cogrowth::Word;

// Calls fn(word) for every length-n index tuple, in odometer order.
template <typename Fn>
void for_each_word(std::size_t k, std::size_t n, Fn&& fn) {
  Word w(n, 0);
  for (;;) {
    fn(w);
    std::size_t i = n;
    while (i > 0) {
      if (++w[i - 1] < k) break;
      w[i - 1] = 0;
      --i;
    }
    if (i == 0) return;
  }
}

}  // namespace

std::map<ElementId, Int> histogram(SemigroupEngine& E, const GeneratorChoice& X,
                                   std::size_t n) {
  std::map<ElementId, Int> h;
  for_each_word(X.size(), n, [&](const Word& w) { h[eval_word(E, X, w)] += 1; });
  return h;
}

Int pair_count(SemigroupEngine& E, const GeneratorChoice& X, std::size_t n) {
  Int total = 0;
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    const std::size_t j = n - i;
    std::vector<ElementId> left;
    for_each_word(X.size(), i, [&](const Word& w) { left.push_back(eval_word(E, X, w)); });
    for_each_word(X.size(), j, [&](const Word& w) {
      const ElementId v = eval_word(E, X, w);
      for (ElementId u : left)
        if (u == v) total += 1;
    });
  }
  return total;
}

Int coincidence_count(SemigroupEngine& E, const GeneratorChoice& X, std::size_t k) {
  Int total = 0;
  std::vector<ElementId> all;
  for_each_word(X.size(), k, [&](const Word& w) { all.push_back(eval_word(E, X, w)); });
  for (ElementId u : all)
    for (ElementId v : all)
      if (u == v) total += 1;
  return total;
}

WordClosure::WordClosure(const std::vector<std::string>& alphabet,
                         const std::vector<cogrowth::RewriteRule>& rules,
                         std::size_t max_len, bool monoid) {
  if (monoid) words_.push_back("");
  std::vector<std::string> frontier = {""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const std::string& w : frontier)
      for (const std::string& a : alphabet) {
        next.push_back(w + a);
        words_.push_back(w + a);
      }
    frontier = std::move(next);
  }
  for (std::size_t i = 0; i < words_.size(); ++i) index_[words_[i]] = i;
  parent_.resize(words_.size());
  for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = i;

  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[a] = b;
  };
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::string& w = words_[i];
    for (const auto& rule : rules) {
      if (rule.lhs.size() > w.size()) continue;
      for (std::size_t pos = 0; pos + rule.lhs.size() <= w.size(); ++pos) {
        if (w.compare(pos, rule.lhs.size(), rule.lhs) != 0) continue;
        const std::string w2 =
            w.substr(0, pos) + rule.rhs + w.substr(pos + rule.lhs.size());
        if (w2.empty() && !monoid) continue;
        unite(i, index_.at(w2));
      }
    }
  }
}

std::size_t WordClosure::find(std::size_t i) const {
  while (parent_[i] != i) {
    parent_[i] = parent_[parent_[i]];
    i = parent_[i];
  }
  return i;
}

std::size_t WordClosure::index_of(const std::string& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw cogrowth::Error("word outside the closure: " + w);
  return it->second;
}

bool WordClosure::same(const std::string& u, const std::string& v) const {
  return find(index_of(u)) == find(index_of(v));
}

NaiveStructure naive_structure(const std::vector<std::vector<std::size_t>>& rows) {
  const std::size_t m = rows.size();
  auto mul = [&](std::size_t x, std::size_t y) { return rows[x][y] - 1; };

  // Principal two-sided ideal of x: closure of {x} under products with S on
  // both sides.
  auto ideal = [&](std::size_t x) {
    std::set<std::size_t> J = {x};
    for (bool grew = true; grew;) {
      grew = false;
      std::set<std::size_t> add;
      for (std::size_t y : J)
        for (std::size_t s = 0; s < m; ++s) {
          add.insert(mul(s, y));
          add.insert(mul(y, s));
        }
      for (std::size_t y : add)
        if (J.insert(y).second) grew = true;
    }
    return J;
  };

  std::vector<std::set<std::size_t>> J(m);
  for (std::size_t x = 0; x < m; ++x) J[x] = ideal(x);

  NaiveStructure out;
  std::vector<bool> placed(m, false);
  for (std::size_t x = 0; x < m; ++x) {
    if (placed[x]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t y = x; y < m; ++y)
      if (!placed[y] && J[x].count(y) && J[y].count(x)) {
        cls.push_back(y);
        placed[y] = true;
      }
    out.j_classes.push_back(std::move(cls));
  }

  std::set<std::size_t> kernel = J[0];
  for (std::size_t x = 1; x < m; ++x) {
    std::set<std::size_t> next;
    std::set_intersection(kernel.begin(), kernel.end(), J[x].begin(), J[x].end(),
                          std::inserter(next, next.begin()));
    kernel = std::move(next);
  }
  out.minimal_ideal.assign(kernel.begin(), kernel.end());
  out.is_simple = kernel.size() == m;

  // Principal right ideals xS^1 pairwise intersect?
  std::vector<std::set<std::size_t>> R(m);
  for (std::size_t x = 0; x < m; ++x) {
    R[x].insert(x);
    for (std::size_t s = 0; s < m; ++s) R[x].insert(mul(x, s));
  }
  out.left_reversible = true;
  for (std::size_t x = 0; x < m && out.left_reversible; ++x)
    for (std::size_t y = x + 1; y < m; ++y) {
      bool meet = false;
      for (std::size_t z : R[x])
        if (R[y].count(z)) meet = true;
      if (!meet) {
        out.left_reversible = false;
        break;
      }
    }

  out.klawe = true;
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        if (mul(s, x) != mul(s, y)) continue;
        bool equalized = x == y;
        for (std::size_t t = 0; t < m && !equalized; ++t)
          equalized = mul(x, t) == mul(y, t);
        if (!equalized) out.klawe = false;
      }

  out.right_cancellative = true;
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t t1 = 0; t1 < m; ++t1)
      for (std::size_t t2 = t1 + 1; t2 < m; ++t2)
        if (mul(t1, x) == mul(t2, x)) out.right_cancellative = false;
  return out;
}

Int binom(unsigned long n, unsigned long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

Int catalan(unsigned long k) { return binom(2 * k, k) / Int(k + 1); }

}  // namespace oracle
