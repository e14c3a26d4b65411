#pragma once

#include <optional>
#include <vector>

#include "cogrowth/engine.hpp"

namespace cogrowth {

/// Decidable structure of a finite semigroup, computed from its full table.
/// All indices are 0-based element indices into the table.
struct FiniteStructureReport {
  std::size_t order = 0;

  /// Partition into J-classes (mutual membership of principal two-sided
  /// ideals); classes ordered by smallest member, members ascending.
  std::vector<std::vector<std::size_t>> j_classes;
  std::vector<std::size_t> class_of;

  /// j_leq[a][b]: class a lies below or equal to class b in the J-order,
  /// i.e. the members of a belong to the ideal generated by members of b.
  std::vector<std::vector<bool>> j_leq;

  /// The kernel: for a finite semigroup the unique minimum J-class.
  std::vector<std::size_t> minimal_ideal;

  bool is_simple = false;           // exactly one J-class
  bool left_reversible = false;     // all principal right ideals intersect
  bool klawe = false;               // sx = sy implies some t with xt = yt
  bool right_cancellative = false;  // every column injective

  /// When not right cancellative: x, t1, t2 with t1 x = t2 x, t1 != t2.
  struct Collision {
    std::size_t x, t1, t2;
  };
  std::optional<Collision> right_cancellation_witness;
};

/// Requires a finite_table engine (DomainError otherwise).
FiniteStructureReport finite_structure(const SemigroupEngine& E);

}  // namespace cogrowth
