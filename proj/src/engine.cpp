#include "cogrowth/engine.hpp"

#include <cmath>

#include "cogrowth/errors.hpp"

namespace cogrowth {

std::string to_string(EngineKind kind) {
  switch (kind) {
    case EngineKind::finite_table: return "finite_table";
    case EngineKind::rewriting: return "rewriting";
    case EngineKind::free_semigroup: return "free";
    case EngineKind::free_commutative: return "free_commutative";
    case EngineKind::bicyclic: return "bicyclic";
    case EngineKind::integer_lattice: return "integer_lattice";
  }
  return "unknown";
}

ElementId eval_word(SemigroupEngine& E, const GeneratorChoice& X, const Word& w) {
  if (w.empty() && !E.is_monoid())
    throw DomainError("empty word has no value in a semigroup without identity");
  ElementId acc = kIdentityId;
  for (GenIndex g : w) {
    if (g >= X.size()) throw UsageError("word refers to a generator outside the choice");
    acc = E.mul(acc, X.targets[g]);
  }
  return acc;
}

namespace {

/// Same interner as the wrapped engine, multiplication reversed.
class OppositeEngine final : public SemigroupEngine {
public:
  explicit OppositeEngine(EnginePtr inner) : inner_(std::move(inner)) {}

  EngineKind kind() const override { return inner_->kind(); }
  bool is_monoid() const override { return inner_->is_monoid(); }
  ElementId mul(ElementId s, ElementId t) override { return inner_->mul(t, s); }
  std::string canonical(ElementId s) const override { return inner_->canonical(s); }
  std::size_t size() const override { return inner_->size(); }
  std::size_t cap() const override { return inner_->cap(); }
  std::optional<bool> right_indegree_bounded() const override {
    // Right indegree in the opposite is left indegree in the original,
    // which this interface does not track.
    return std::nullopt;
  }
  const TableEngine* as_table() const override { return nullptr; }

private:
  EnginePtr inner_;
};

/// Declares the wrapped engine's virtual basepoint to be a real identity.
class WithIdentityEngine final : public SemigroupEngine {
public:
  explicit WithIdentityEngine(EnginePtr inner) : inner_(std::move(inner)) {}

  EngineKind kind() const override { return inner_->kind(); }
  bool is_monoid() const override { return true; }
  ElementId mul(ElementId s, ElementId t) override { return inner_->mul(s, t); }
  std::string canonical(ElementId s) const override { return inner_->canonical(s); }
  std::size_t size() const override { return inner_->size(); }
  std::size_t cap() const override { return inner_->cap(); }
  std::optional<bool> right_indegree_bounded() const override {
    return inner_->right_indegree_bounded();
  }

private:
  EnginePtr inner_;
};

}  // namespace

EnginePtr make_opposite(EnginePtr inner) {
  return std::make_shared<OppositeEngine>(std::move(inner));
}

std::pair<EnginePtr, GeneratorChoice> adjoin_identity(EnginePtr engine,
                                                      const GeneratorChoice& X,
                                                      const std::string& symbol) {
  for (const std::string& s : X.symbols)
    if (s == symbol)
      throw UsageError("identity symbol '" + symbol + "' already used by the choice");
  GeneratorChoice Y = X;
  Y.symbols.push_back(symbol);
  Y.targets.push_back(kIdentityId);
  Y.definitions.push_back({});
  EnginePtr E = engine->is_monoid()
                    ? std::move(engine)
                    : std::make_shared<WithIdentityEngine>(std::move(engine));
  return {std::move(E), std::move(Y)};
}

GeneratorChoice power_generators(SemigroupEngine& E, const GeneratorChoice& X,
                                 std::size_t p) {
  if (p == 0) throw UsageError("power_generators: p must be positive");
  if (!E.is_monoid())
    throw DomainError("power_generators requires a monoid engine; adjoin an identity first");
  if (X.size() == 0) throw UsageError("power_generators: empty generator choice");
  if (X.definitions.size() != X.size())
    throw UsageError("power_generators: choice is missing definition words");

  double log_count = static_cast<double>(p) * std::log(static_cast<double>(X.size()));
  if (log_count > std::log(1e6))
    throw ResourceError("power_generators: |X|^p exceeds 1000000 symbols");

  GeneratorChoice Y;
  std::vector<GenIndex> tuple(p, 0);
  for (;;) {
    Word w(tuple.begin(), tuple.end());
    Y.symbols.push_back(format_word(X, w));
    Y.targets.push_back(eval_word(E, X, w));
    // Definitions stay in terms of the engine's default letters.
    Word def;
    for (GenIndex g : tuple)
      def.insert(def.end(), X.definitions[g].begin(), X.definitions[g].end());
    Y.definitions.push_back(std::move(def));
    // Odometer increment; the last position varies fastest.
    std::size_t i = p;
    while (i > 0) {
      if (++tuple[i - 1] < X.size()) break;
      tuple[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return Y;
}

}  // namespace cogrowth
