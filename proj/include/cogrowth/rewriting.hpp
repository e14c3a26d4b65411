#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "cogrowth/engine.hpp"

namespace cogrowth {

struct RewriteRule {
  std::string lhs;
  std::string rhs;
};

/// A finite string rewriting system over single-character letters, required
/// to be shortlex-reducing and locally confluent. Both properties are
/// checked at construction: every rule must have rhs strictly below lhs in
/// the shortlex order induced by the alphabet sequence, and every critical
/// pair (overlaps and contained factors) must reduce to a common normal
/// form. Termination then follows from the well-ordering, confluence from
/// Newman's lemma, so reduce() computes canonical forms.
class RewriteSystem {
public:
  RewriteSystem(std::vector<std::string> alphabet, std::vector<RewriteRule> rules);

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

  bool shortlex_less(const std::string& a, const std::string& b) const;

  /// Leftmost-innermost reduction to the unique normal form. Linear scan
  /// with a pending stack: a new redex created by a replacement can only
  /// end inside the replaced suffix, so reprocessing the substituted
  /// letters is sufficient.
  std::string reduce(std::string word) const;

  /// True if some rule's rhs is empty, i.e. a nonempty word equals the
  /// identity in the presented monoid.
  bool has_identity_rule() const { return has_identity_rule_; }

private:
  void check_confluence() const;

  std::vector<std::string> alphabet_;
  std::vector<RewriteRule> rules_;
  int rank_of_[256];  // letter -> alphabet position, -1 when absent
  bool has_identity_rule_ = false;
};

/// Engine over the normal forms of a confluent shortlex-reducing system.
/// Canonical form of an element is its unique irreducible word; products
/// concatenate and reduce. When `monoid` is false the system must have no
/// empty rhs, so the empty word (the basepoint, id 0) stays unreachable.
class RewritingEngine final : public SemigroupEngine {
public:
  RewritingEngine(RewriteSystem system, bool monoid, std::size_t cap,
                  EngineKind kind = EngineKind::rewriting);

  EngineKind kind() const override { return kind_; }
  bool is_monoid() const override { return monoid_; }
  ElementId mul(ElementId s, ElementId t) override;
  std::string canonical(ElementId s) const override;
  std::size_t size() const override { return forms_.size(); }
  std::size_t cap() const override { return cap_; }
  std::optional<bool> right_indegree_bounded() const override;

  const RewriteSystem& system() const { return system_; }

  /// Interns the normal form of an arbitrary word over the alphabet.
  ElementId intern_word(const std::string& word);

private:
  ElementId intern_form(std::string form);

  RewriteSystem system_;
  bool monoid_;
  std::size_t cap_;
  EngineKind kind_;
  std::vector<std::string> forms_;  // id -> normal form; forms_[0] is ""
  std::unordered_map<std::string, ElementId> index_;
};

/// {b, c | bc -> 1}: the bicyclic monoid, normal forms c^i b^j.
std::shared_ptr<RewritingEngine> make_bicyclic(std::size_t cap);

}  // namespace cogrowth
