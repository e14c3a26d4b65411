#include <doctest.h>

#include <string>
#include <vector>

#include "cogrowth/errors.hpp"
#include "cogrowth/spec_format.hpp"

using namespace cogrowth;

TEST_SUITE("spec_format") {

TEST_CASE("serialize then parse then serialize is the identity") {
  const std::vector<SemigroupSpec> specs = {
      free_spec(2, false),
      free_spec(3, true),
      free_commutative_spec(2, true),
      bicyclic_spec(),
      lattice_spec(1, {}),
      lattice_spec(2, {{"u", {Int(1), Int(1)}}, {"v", {Int(-1), Int(0)}}}),
      table_spec({{1, 2}, {2, 1}}),
  };
  for (const SemigroupSpec& spec : specs) {
    const std::string once = serialize_spec(spec);
    const std::string twice = serialize_spec(parse_spec(once));
    CAPTURE(once);
    CHECK(once == twice);
  }
}

TEST_CASE("comments and blank lines are ignored") {
  const SemigroupSpec spec =
      parse_spec("# header\n\nkind = free\n# rank comes next\nrank = 2\n\n");
  CHECK(spec.kind == EngineKind::free_semigroup);
  CHECK(spec.rank == 2);
  CHECK(!spec.monoid);  // free defaults to the semigroup
}

TEST_CASE("kind must come first and keys cannot repeat") {
  CHECK_THROWS_AS(parse_spec("rank = 2\nkind = free\n"), UsageError);
  CHECK_THROWS_AS(parse_spec("kind = free\nrank = 2\nrank = 2\n"), UsageError);
  CHECK_THROWS_AS(parse_spec("kind = free\nkind = free\nrank = 2\n"), UsageError);
}

TEST_CASE("monoid resolution per family") {
  CHECK(parse_spec("kind = free_commutative\nrank = 2\n").monoid);
  CHECK(!parse_spec("kind = free\nrank = 2\n").monoid);
  CHECK(parse_spec("kind = bicyclic\n").monoid);
  // forced-monoid families reject monoid = false
  CHECK_THROWS_AS(parse_spec("kind = bicyclic\nmonoid = false\n"), UsageError);
  CHECK_THROWS_AS(parse_spec("kind = integer_lattice\nmonoid = false\ndim = 1\n"),
                  UsageError);
  // a table with an identity must not claim monoid = false
  CHECK_THROWS_AS(
      parse_spec("kind = finite_table\nmonoid = false\norder = 2\nrow = 1 2\nrow = 2 1\n"),
      UsageError);
}

TEST_CASE("rewriting specs with an empty rhs need explicit monoid = true") {
  CHECK_THROWS_AS(parse_spec("kind = rewriting\nalphabet = b c\nrule = bc -> 1\n"),
                  UsageError);
  const SemigroupSpec spec =
      parse_spec("kind = rewriting\nmonoid = true\nalphabet = b c\nrule = bc -> 1\n");
  CHECK(spec.monoid);
  CHECK(spec.rules.size() == 1);
  CHECK(spec.rules[0].rhs.empty());
}

TEST_CASE("malformed rule and row lines are rejected") {
  CHECK_THROWS_AS(parse_spec("kind = rewriting\nalphabet = a b\nrule = ab => a\n"),
                  UsageError);
  CHECK_THROWS_AS(
      parse_spec("kind = finite_table\norder = 2\nrow = 1 2\nrow = 1\n"), UsageError);
  CHECK_THROWS_AS(parse_spec("kind = finite_table\norder = 2\nrow = 1 2\n"),
                  UsageError);
}

TEST_CASE("lattice gen lines build the stated vectors") {
  const SemigroupSpec spec =
      parse_spec("kind = integer_lattice\ndim = 2\ngen = u (1,1)\ngen = v (-1,0)\n");
  REQUIRE(spec.lattice_gens.size() == 2);
  CHECK(spec.lattice_gens[0].coords == std::vector<Int>{Int(1), Int(1)});
  BuiltSemigroup built = build_semigroup(spec, 1000);
  CHECK(built.choice.symbols == std::vector<std::string>{"u", "v"});
  CHECK(built.engine->canonical(built.choice.targets[0]) == "(1,1)");
}

TEST_CASE("gens override rebuilds the choice over default letters") {
  const SemigroupSpec spec =
      parse_spec("kind = free\nmonoid = false\nrank = 2\ngens = x:ab y:ba\n");
  BuiltSemigroup built = build_semigroup(spec, 100000);
  CHECK(built.choice.symbols == std::vector<std::string>{"x", "y"});
  CHECK(built.engine->canonical(built.choice.targets[0]) == "ab");
  CHECK(built.engine->canonical(built.choice.targets[1]) == "ba");
  // round trip survives the override
  CHECK(serialize_spec(parse_spec(serialize_spec(spec))) == serialize_spec(spec));
}

TEST_CASE("duplicate override symbols are rejected") {
  CHECK_THROWS_AS(
      build_semigroup(parse_spec("kind = free\nrank = 2\ngens = x:ab x:ba\n"), 1000),
      UsageError);
}

TEST_CASE("opposite builds share ids and reverse products") {
  BuiltSemigroup op = build_semigroup(free_spec(2, false), 1000, true);
  const ElementId ab = op.engine->mul(op.choice.targets[0], op.choice.targets[1]);
  CHECK(op.engine->canonical(ab) == "ba");
}

TEST_CASE("missing spec files are usage errors") {
  CHECK_THROWS_AS(parse_spec_file("/nonexistent/missing.spec"), UsageError);
}

}  // TEST_SUITE
