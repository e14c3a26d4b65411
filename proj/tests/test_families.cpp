#include <doctest.h>

#include <string>
#include <vector>

#include "cogrowth/errors.hpp"
#include "cogrowth/families.hpp"

using namespace cogrowth;

TEST_SUITE("families") {

TEST_CASE("free engine ids are heap numbers") {
  FreeEngine E(2, false, 1000000);
  const ElementId a = E.letter_id(0), b = E.letter_id(1);
  CHECK(a == 1);
  CHECK(b == 2);
  CHECK(E.mul(a, b) == 4);  // 1*2 + 1 + 1
  CHECK(E.canonical(E.mul(a, b)) == "ab");
  CHECK(E.canonical(kIdentityId) == "1");
  CHECK(E.size() == 5);  // high water after interning ab
}

TEST_CASE("rank-1 words far beyond the old fixed decode buffer") {
  FreeEngine E(1, true, 1000);
  ElementId w = kIdentityId;
  for (int i = 0; i < 200; ++i) w = E.mul(w, E.letter_id(0));
  CHECK(w == 200);  // rank 1: id equals word length
  CHECK(E.mul(100, 100) == 200);
  CHECK(E.canonical(3) == "aaa");
}

TEST_CASE("free engine cap raises before assigning the id") {
  FreeEngine E(2, false, 100);
  ElementId w = E.letter_id(0);
  auto grow = [&] {
    for (int i = 0; i < 64; ++i) w = E.mul(w, E.letter_id(0));
  };
  CHECK_THROWS_AS(grow(), ResourceError);
  CHECK(E.size() <= 100);
}

TEST_CASE("free family rejects bad ranks") {
  CHECK_THROWS_AS(make_free(0, false, 1000), UsageError);
  CHECK_THROWS_AS(make_free(27, false, 1000), UsageError);
}

TEST_CASE("free commutative letters commute and canonicals sort") {
  Family F = make_free_commutative(2, false, 1000);
  SemigroupEngine& E = *F.engine;
  const ElementId a = F.choice.targets[0], b = F.choice.targets[1];
  CHECK(E.mul(a, b) == E.mul(b, a));
  CHECK(E.canonical(E.mul(E.mul(a, a), b)) == "aab");
  CHECK(E.canonical(kIdentityId) == "1");
}

TEST_CASE("integer lattice adds coordinates exactly") {
  Family Z = make_integer_lattice(1, {}, 1000);
  CHECK(Z.choice.symbols == std::vector<std::string>{"a", "b"});
  SemigroupEngine& E = *Z.engine;
  CHECK(E.is_monoid());
  CHECK(E.mul(Z.choice.targets[0], Z.choice.targets[1]) == kIdentityId);
  CHECK(E.canonical(Z.choice.targets[0]) == "(1)");
  CHECK(E.canonical(kIdentityId) == "(0)");
}

TEST_CASE("lattice dimension 2 defaults pair plus and minus units") {
  Family Z = make_integer_lattice(2, {}, 1000);
  REQUIRE(Z.choice.symbols ==
          std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(Z.engine->canonical(Z.choice.targets[0]) == "(1,0)");
  CHECK(Z.engine->canonical(Z.choice.targets[3]) == "(0,-1)");
}

TEST_CASE("lattice generator validation") {
  CHECK_THROWS_AS(make_integer_lattice(1, {{"z", {Int(0)}}}, 1000), UsageError);
  CHECK_THROWS_AS(make_integer_lattice(2, {{"u", {Int(1)}}}, 1000), UsageError);
}

TEST_CASE("table engine verifies associativity naming a failing triple") {
  try {
    TableEngine({{2, 2}, {1, 1}}, 100);
    FAIL("expected UsageError");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("not associative") != std::string::npos);
    CHECK(std::string(e.what()).find("(1,1,1)") != std::string::npos);
  }
}

TEST_CASE("table engine validates shape and entries") {
  CHECK_THROWS_AS(TableEngine({{1, 2}}, 100), UsageError);
  CHECK_THROWS_AS(TableEngine({{1, 3}, {1, 2}}, 100), UsageError);
  CHECK_THROWS_AS(TableEngine({}, 100), UsageError);
}

TEST_CASE("table identity detection controls the id-0 binding") {
  TableEngine C2({{1, 2}, {2, 1}}, 100);
  CHECK(C2.is_monoid());
  CHECK(C2.identity_index() == std::optional<std::size_t>(0));
  CHECK(C2.canonical(kIdentityId) == "e1");

  TableEngine LZ({{1, 1}, {2, 2}}, 100);  // left zero: no identity
  CHECK(!LZ.is_monoid());
  CHECK(LZ.canonical(kIdentityId) == "1");  // virtual basepoint
  const ElementId e1 = LZ.intern_element(0);
  CHECK(LZ.canonical(e1) == "e1");
  CHECK(LZ.mul(kIdentityId, e1) == e1);
  CHECK(LZ.mul(e1, kIdentityId) == e1);
}

TEST_CASE("make_finite_table chooses every element as a generator") {
  Family T = make_finite_table({{1, 2}, {2, 1}}, 100);
  CHECK(T.choice.symbols == std::vector<std::string>{"e1", "e2"});
  CHECK(T.engine->canonical(T.choice.targets[1]) == "e2");
}

}  // TEST_SUITE
