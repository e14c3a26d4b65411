#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cogrowth {

/// Dense handle for an interned semigroup element. Id 0 is always the
/// identity of S^1: the engine's identity when it is a monoid, otherwise a
/// virtual basepoint that no product ever returns to.
using ElementId = std::uint32_t;

inline constexpr ElementId kIdentityId = 0;

/// Index into a generator choice.
using GenIndex = std::uint32_t;

/// A word over a generator choice, possibly empty.
using Word = std::vector<GenIndex>;

/// A finite generating multiset: display symbols, the interned element each
/// symbol maps to, and each symbol's defining word over the engine's default
/// letters (used for serialization and for rebuilding under `opposite`).
/// Repeated targets are allowed; counting always respects multiplicity.
struct GeneratorChoice {
  std::vector<std::string> symbols;
  std::vector<ElementId> targets;
  std::vector<Word> definitions;

  std::size_t size() const { return symbols.size(); }
};

/// Tokenizes `text` over the choice's symbols, greedy longest match first.
/// The single token "1" denotes the empty word. Throws UsageError on any
/// character sequence that matches no symbol.
Word parse_word(const GeneratorChoice& X, const std::string& text);

/// Inverse of parse_word; the empty word renders as "1".
std::string format_word(const GeneratorChoice& X, const Word& w);

}  // namespace cogrowth
