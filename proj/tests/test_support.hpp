// Shared fixtures: the semigroups the counting/operator/simulation tests run
// against, built from their canonical spec strings.
#pragma once

#include <string>
#include <vector>

#include "cogrowth/spec_format.hpp"

namespace testsupport {

using cogrowth::BuiltSemigroup;
using cogrowth::SemigroupSpec;

struct Named {
  std::string name;
  BuiltSemigroup built;
};

inline SemigroupSpec acbc_spec() {
  return cogrowth::parse_spec(
      "kind = rewriting\nmonoid = false\nalphabet = a b c\nrule = bc -> ac\n");
}

inline SemigroupSpec asym_lattice_spec() {
  // Z with the asymmetric multiset {+1, +1, -1}.
  return cogrowth::lattice_spec(
      1, {{"a", {cogrowth::Int(1)}}, {"c", {cogrowth::Int(1)}},
          {"b", {cogrowth::Int(-1)}}});
}

/// One of each engine kind, plus both lattice generator shapes.
inline std::vector<Named> engines_under_test(std::size_t cap) {
  using namespace cogrowth;
  std::vector<Named> out;
  out.push_back({"free2", build_semigroup(free_spec(2, false), cap)});
  out.push_back({"free3", build_semigroup(free_spec(3, false), cap)});
  out.push_back({"freecomm2", build_semigroup(free_commutative_spec(2, true), cap)});
  out.push_back({"bicyclic", build_semigroup(bicyclic_spec(), cap)});
  out.push_back({"lattice_sym", build_semigroup(lattice_spec(1, {}), cap)});
  out.push_back({"lattice_asym", build_semigroup(asym_lattice_spec(), cap)});
  out.push_back({"acbc", build_semigroup(acbc_spec(), cap)});
  out.push_back({"c3", build_semigroup(table_spec({{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}), cap)});
  out.push_back({"rightzero", build_semigroup(table_spec({{1, 2}, {1, 2}}), cap)});
  return out;
}

}  // namespace testsupport
