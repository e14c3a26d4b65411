#include "cogrowth/rewriting.hpp"

#include <algorithm>
#include <cassert>

#include "cogrowth/errors.hpp"

namespace cogrowth {

namespace {
std::string show(const std::string& w) { return w.empty() ? "1" : w; }
}  // namespace

RewriteSystem::RewriteSystem(std::vector<std::string> alphabet,
                             std::vector<RewriteRule> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  if (alphabet_.empty()) throw UsageError("rewriting: empty alphabet");
  std::fill(std::begin(rank_of_), std::end(rank_of_), -1);
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    const std::string& a = alphabet_[i];
    if (a.size() != 1)
      throw UsageError("rewriting: alphabet symbols must be single characters, got '" +
                       a + "'");
    unsigned char c = static_cast<unsigned char>(a[0]);
    if (rank_of_[c] != -1)
      throw UsageError("rewriting: duplicate alphabet symbol '" + a + "'");
    rank_of_[c] = static_cast<int>(i);
  }
  for (const RewriteRule& r : rules_) {
    if (r.lhs.empty()) throw UsageError("rewriting: rule with empty left-hand side");
    for (char ch : r.lhs + r.rhs)
      if (rank_of_[static_cast<unsigned char>(ch)] == -1)
        throw UsageError(std::string("rewriting: rule uses letter '") + ch +
                         "' outside the alphabet");
    if (!shortlex_less(r.rhs, r.lhs))
      throw UsageError("rewriting: rule '" + show(r.lhs) + " -> " + show(r.rhs) +
                       "' is not shortlex-reducing");
    if (r.rhs.empty()) has_identity_rule_ = true;
  }
  check_confluence();
}

bool RewriteSystem::shortlex_less(const std::string& a, const std::string& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int ra = rank_of_[static_cast<unsigned char>(a[i])];
    int rb = rank_of_[static_cast<unsigned char>(b[i])];
    if (ra != rb) return ra < rb;
  }
  return false;
}

std::string RewriteSystem::reduce(std::string word) const {
  std::string out;
  out.reserve(word.size());
  // Unread input, reversed so the next letter is at the back.
  std::string pending(word.rbegin(), word.rend());
  while (!pending.empty()) {
    out.push_back(pending.back());
    pending.pop_back();
    // out was irreducible before the append, so any redex is a suffix.
    for (const RewriteRule& r : rules_) {
      if (r.lhs.size() <= out.size() &&
          out.compare(out.size() - r.lhs.size(), r.lhs.size(), r.lhs) == 0) {
        out.resize(out.size() - r.lhs.size());
        pending.append(r.rhs.rbegin(), r.rhs.rend());
        break;
      }
    }
  }
  return out;
}

void RewriteSystem::check_confluence() const {
  auto fail = [&](const std::string& source, const std::string& a, const std::string& b) {
    throw ConfluenceError("rewriting: critical pair from '" + show(source) +
                              "' does not resolve: '" + show(a) + "' vs '" + show(b) + "'",
                          a, b);
  };
  const std::size_t m = rules_.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::string& l1 = rules_[i].lhs;
      const std::string& l2 = rules_[j].lhs;
      // Overlaps: a proper suffix of l1 equals a proper prefix of l2.
      for (std::size_t o = 1; o < l1.size() && o < l2.size(); ++o) {
        if (l1.compare(l1.size() - o, o, l2, 0, o) != 0) continue;
        const std::string source = l1 + l2.substr(o);
        const std::string left = reduce(rules_[i].rhs + l2.substr(o));
        const std::string right = reduce(l1.substr(0, l1.size() - o) + rules_[j].rhs);
        if (left != right) fail(source, left, right);
      }
      // Containments: l2 occurs as a factor of l1 (excluding a rule atop itself).
      if (l2.size() > l1.size()) continue;
      for (std::size_t p = 0; p + l2.size() <= l1.size(); ++p) {
        if (i == j && p == 0 && l2.size() == l1.size()) continue;
        if (l1.compare(p, l2.size(), l2) != 0) continue;
        const std::string left = reduce(rules_[i].rhs);
        const std::string right =
            reduce(l1.substr(0, p) + rules_[j].rhs + l1.substr(p + l2.size()));
        if (left != right) fail(l1, left, right);
      }
    }
  }
}

RewritingEngine::RewritingEngine(RewriteSystem system, bool monoid, std::size_t cap,
                                 EngineKind kind)
    : system_(std::move(system)), monoid_(monoid), cap_(cap), kind_(kind) {
  if (!monoid_ && system_.has_identity_rule())
    throw UsageError("rewriting: a rule with empty right-hand side requires monoid = true");
  if (cap_ == 0) throw UsageError("rewriting: element cap must be positive");
  forms_.emplace_back();
  index_.emplace("", kIdentityId);
}

ElementId RewritingEngine::mul(ElementId s, ElementId t) {
  return intern_word(forms_.at(s) + forms_.at(t));
}

ElementId RewritingEngine::intern_word(const std::string& word) {
  return intern_form(system_.reduce(word));
}

ElementId RewritingEngine::intern_form(std::string form) {
  auto it = index_.find(form);
  if (it != index_.end()) return it->second;
  // Without an identity rule no nonempty word reduces to "", so the
  // basepoint of a non-monoid engine is never rediscovered here.
  assert(monoid_ || !form.empty());
  if (forms_.size() >= cap_)
    throw ResourceError("rewriting: element cap of " + std::to_string(cap_) +
                        " exceeded");
  ElementId id = static_cast<ElementId>(forms_.size());
  index_.emplace(form, id);
  forms_.push_back(std::move(form));
  return id;
}

std::string RewritingEngine::canonical(ElementId s) const {
  const std::string& f = forms_.at(s);
  return f.empty() ? "1" : f;
}

std::optional<bool> RewritingEngine::right_indegree_bounded() const {
  // The bicyclic normal forms c^i b^j have at most two preimages under
  // right multiplication by a fixed generator; general systems are unknown.
  if (kind_ == EngineKind::bicyclic) return true;
  return std::nullopt;
}

std::shared_ptr<RewritingEngine> make_bicyclic(std::size_t cap) {
  RewriteSystem rs({"b", "c"}, {{"bc", ""}});
  return std::make_shared<RewritingEngine>(std::move(rs), true, cap,
                                           EngineKind::bicyclic);
}

}  // namespace cogrowth
