#pragma once

#include <string>
#include <vector>

#include "cogrowth/engine.hpp"
#include "cogrowth/families.hpp"
#include "cogrowth/rewriting.hpp"

namespace cogrowth {

/// Parsed form of the line-oriented semigroup description:
///
///   kind = finite_table|rewriting|free|free_commutative|bicyclic|integer_lattice
///   monoid = true|false
///   finite_table:     order = m, then m lines "row = i1 i2 ... im" (1-based)
///   rewriting:        alphabet = a b c, then "rule = lhs -> rhs" lines ("1" = empty)
///   integer_lattice:  dim = d, then "gen = name (x1,...,xd)" lines
///   free families:    rank = k
///   optional:         gens = sym1:word1 sym2:word2 ...   (words over defaults)
///
/// Blank lines and lines starting with '#' are ignored on input and never
/// emitted, so parse -> serialize -> parse is the identity on the engine.
struct SemigroupSpec {
  EngineKind kind = EngineKind::free_semigroup;
  bool monoid = false;  // resolved value, also serialized

  std::size_t order = 0;
  std::vector<std::vector<std::size_t>> rows;

  std::vector<std::string> alphabet;
  std::vector<RewriteRule> rules;

  std::size_t dim = 0;
  std::vector<LatticeGenerator> lattice_gens;

  std::size_t rank = 0;

  struct GenOverride {
    std::string symbol;
    std::string word;
  };
  std::vector<GenOverride> gens;
};

/// Parses and validates; the monoid field comes back resolved (family
/// defaults applied, finite tables detected). Contradictory or malformed
/// input raises UsageError.
SemigroupSpec parse_spec(const std::string& text);

SemigroupSpec parse_spec_file(const std::string& path);

/// Bit-exact canonical rendering: fields in declaration order, single
/// spaces, "\n" endings.
std::string serialize_spec(const SemigroupSpec& spec);

struct BuiltSemigroup {
  EnginePtr engine;
  GeneratorChoice choice;
  SemigroupSpec spec;
};

/// Instantiates the engine and generator choice. With `opposite` the engine
/// multiplies in reverse order while symbols keep their targets.
BuiltSemigroup build_semigroup(const SemigroupSpec& spec, std::size_t cap,
                               bool opposite = false);

/// Convenience specs for the built-in families, as the CLI family flags
/// produce them.
SemigroupSpec free_spec(std::size_t rank, bool monoid);
SemigroupSpec free_commutative_spec(std::size_t rank, bool monoid);
SemigroupSpec bicyclic_spec();
SemigroupSpec lattice_spec(std::size_t dim, std::vector<LatticeGenerator> gens);
SemigroupSpec table_spec(std::vector<std::vector<std::size_t>> rows);

}  // namespace cogrowth
