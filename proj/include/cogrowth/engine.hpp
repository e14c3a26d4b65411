#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "cogrowth/word.hpp"

namespace cogrowth {

class TableEngine;

enum class EngineKind {
  finite_table,
  rewriting,
  free_semigroup,
  free_commutative,
  bicyclic,
  integer_lattice,
};

std::string to_string(EngineKind kind);

/// Multiplication oracle with element interning. Elements are handled as
/// dense ids assigned in first-use order, so a fixed call sequence always
/// produces the same ids. Engines are not thread safe: mul() interns.
///
/// Invariants every engine maintains:
///   - id 0 is the identity of S^1 and is interned at construction;
///   - when !is_monoid(), no product of elements of S equals id 0;
///   - mul(0, s) == mul(s, 0) == s;
///   - canonical(0) is "1" unless the engine has a more natural display
///     (table identities keep their element name, lattice points their
///     coordinate tuple);
///   - exceeding cap() raises ResourceError before the id is assigned.
class SemigroupEngine {
public:
  virtual ~SemigroupEngine() = default;

  virtual EngineKind kind() const = 0;
  virtual bool is_monoid() const = 0;

  /// Interns and returns the product. May assign a fresh id.
  virtual ElementId mul(ElementId s, ElementId t) = 0;

  /// Canonical form of an interned element, e.g. a shortlex normal form.
  virtual std::string canonical(ElementId s) const = 0;

  /// Number of ids interned so far (including id 0).
  virtual std::size_t size() const = 0;

  virtual std::size_t cap() const = 0;

  /// Whether every element has finitely bounded right indegree in any
  /// Cayley graph over this engine, when that is known analytically.
  virtual std::optional<bool> right_indegree_bounded() const { return std::nullopt; }

  /// Downcast hook for algorithms that need the full multiplication table.
  virtual const TableEngine* as_table() const { return nullptr; }
};

using EnginePtr = std::shared_ptr<SemigroupEngine>;

/// Product of the word's letters, left to right. The empty word evaluates to
/// the identity and requires a monoid engine (DomainError otherwise).
ElementId eval_word(SemigroupEngine& E, const GeneratorChoice& X, const Word& w);

/// Wrapper presenting the opposite semigroup: products reverse. Shares the
/// inner engine's interner, so ids and canonical forms carry over and every
/// generator choice for the inner engine stays valid.
EnginePtr make_opposite(EnginePtr inner);

/// Wrapper that adjoins an identity to a non-monoid engine (S^1). Element
/// ids are unchanged; id 0 simply becomes a real element. Returns the new
/// engine and the choice extended by a fresh symbol for the identity.
/// Monoid input is returned unchanged (the identity is already present,
/// but the symbol is still appended so the choice covers it).
std::pair<EnginePtr, GeneratorChoice> adjoin_identity(EnginePtr engine,
                                                      const GeneratorChoice& X,
                                                      const std::string& symbol = "e");

/// The generating multiset X^p of all |X|^p words of length exactly p over
/// X, in odometer order of index tuples. Requires a monoid engine (pad with
/// an adjoined identity first to cover shorter products); p >= 1. Each
/// symbol is the word's spelling over X. Families above 10^6 symbols raise
/// ResourceError.
GeneratorChoice power_generators(SemigroupEngine& E, const GeneratorChoice& X,
                                 std::size_t p);

}  // namespace cogrowth
