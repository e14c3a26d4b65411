#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cogrowth/cayley.hpp"
#include "cogrowth/errors.hpp"
#include "cogrowth/families.hpp"
#include "cogrowth/spec_format.hpp"

using namespace cogrowth;

TEST_SUITE("cayley") {

TEST_CASE("ball sizes match closed forms") {
  Family f = make_free(2, false, 1000000);
  CHECK(ball(*f.engine, f.choice, 3).size() == 15);  // 1 + 2 + 4 + 8

  Family bi = make_bicyclic_family(1000000);
  CHECK(ball(*bi.engine, bi.choice, 2).size() == 6);  // 1, b, c, bb, cb, cc

  Family fc = make_free_commutative(2, true, 1000000);
  for (std::size_t r = 1; r <= 5; ++r)
    CHECK(ball(*fc.engine, fc.choice, r).size() == (r + 1) * (r + 2) / 2);

  Family z = make_integer_lattice(1, {}, 1000000);
  CHECK(ball(*z.engine, z.choice, 4).size() == 9);  // -4..4
}

TEST_CASE("elements are listed by layer then first-discovery order") {
  Family f = make_free(2, false, 1000);
  const CayleyBall b = ball(*f.engine, f.choice, 2);
  std::vector<std::string> forms;
  for (std::size_t i = 0; i < b.size(); ++i)
    forms.push_back(f.engine->canonical(b.element(i)));
  CHECK(forms ==
        std::vector<std::string>{"1", "a", "b", "aa", "ab", "ba", "bb"});
  CHECK(b.layer_of(0) == 0);
  CHECK(b.layer_of(2) == 1);
  CHECK(b.layer_of(3) == 2);
  CHECK(b.layer_range(1) == std::pair<std::size_t, std::size_t>(1, 3));
  CHECK(b.interior() == 3);  // radius-2 ball: layers 0 and 1 have edges
  CHECK(b.num_generators() == 2);
}

TEST_CASE("edges agree with engine products and index_of inverts element") {
  Family bi = make_bicyclic_family(10000);
  const CayleyBall b = ball(*bi.engine, bi.choice, 3);
  for (std::size_t i = 0; i < b.interior(); ++i)
    for (GenIndex g = 0; g < b.num_generators(); ++g) {
      const ElementId prod = bi.engine->mul(b.element(i), bi.choice.targets[g]);
      CHECK(b.element(b.step(i, g)) == prod);
    }
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.index_of(b.element(i)) == i);
  CHECK(b.index_of(99999) == CayleyBall::npos);
}

TEST_CASE("cap exhaustion reports the layer reached") {
  Family f = make_free(2, false, 40);
  try {
    ball(*f.engine, f.choice, 6);
    FAIL("expected ResourceError");
  } catch (const ResourceError& e) {
    REQUIRE(e.layer_reached.has_value());
    CHECK(*e.layer_reached >= 1);
    CHECK(*e.layer_reached <= 6);
  }
}

TEST_CASE("right indegree: free stays 1, ac = bc reaches 2, bicyclic at most 2") {
  Family f = make_free(2, false, 1000000);
  for (std::size_t d : right_indegree_stats(ball(*f.engine, f.choice, 4)))
    CHECK(d == 1);

  BuiltSemigroup acbc = build_semigroup(
      parse_spec("kind = rewriting\nalphabet = a b c\nrule = bc -> ac\n"), 1000000);
  const std::vector<std::size_t> stats =
      right_indegree_stats(ball(*acbc.engine, acbc.choice, 4));
  REQUIRE(stats.size() == 3);
  CHECK(stats[0] == 1);  // under a
  CHECK(stats[1] == 1);  // under b
  CHECK(stats[2] == 2);  // ac is hit from both a and b

  Family bi = make_bicyclic_family(1000000);
  const std::vector<std::size_t> bstats =
      right_indegree_stats(ball(*bi.engine, bi.choice, 5));
  CHECK(bstats[0] == 1);  // under b: appending b to c^i b^j is injective
  CHECK(bstats[1] == 2);  // under c: 1 comes from b, c from cb
}

TEST_CASE("folner defect: finite semigroups reach zero") {
  Family T = make_finite_table({{1, 2}, {2, 1}}, 100);
  std::vector<ElementId> F = T.choice.targets;
  CHECK(folner_defect(*T.engine, F, T.choice.targets, true) == Rat(0));
  CHECK(folner_defect(*T.engine, F, T.choice.targets, false) == Rat(0));
}

TEST_CASE("folner defect: lattice balls shrink like 1/(2m+1)") {
  Family z = make_integer_lattice(1, {}, 100000);
  for (std::size_t m : {2, 5, 9}) {
    const CayleyBall b = ball(*z.engine, z.choice, m);
    std::vector<ElementId> F;
    for (std::size_t i = 0; i < b.size(); ++i) F.push_back(b.element(i));
    CHECK(folner_defect(*z.engine, F, z.choice.targets, true) ==
          Rat(1, 2 * static_cast<unsigned long>(m) + 1));
    CHECK(folner_defect(*z.engine, F, z.choice.targets, false) ==
          Rat(1, 2 * static_cast<unsigned long>(m) + 1));
  }
}

TEST_CASE("folner defect: free balls never drop below one half") {
  Family f = make_free(2, false, 1000000);
  for (std::size_t m : {2, 4, 6}) {
    const CayleyBall b = ball(*f.engine, f.choice, m);
    std::vector<ElementId> F;
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b.element(i) != kIdentityId) F.push_back(b.element(i));  // basepoint is not in S
    CHECK(folner_defect(*f.engine, F, f.choice.targets, true) >= Rat(1, 2));
  }
}

TEST_CASE("folner defect rejects an empty set") {
  Family z = make_integer_lattice(1, {}, 1000);
  CHECK_THROWS_AS(folner_defect(*z.engine, {}, z.choice.targets, true), UsageError);
}

TEST_CASE("csv export quotes canonical forms containing commas") {
  Family z2 = make_integer_lattice(2, {}, 1000);
  const CayleyBall b = ball(*z2.engine, z2.choice, 1);
  std::ostringstream out;
  export_ball_csv(b, *z2.engine, out);
  const std::string csv = out.str();
  CHECK(csv.rfind("element_id,layer,canonical_form\n", 0) == 0);
  CHECK(csv.find("\"(0,0)\"") != std::string::npos);
  CHECK(csv.find("\nsrc_id,gen_index,dst_id\n") != std::string::npos);
}

TEST_CASE("csv export leaves comma-free forms unquoted") {
  Family f = make_free(2, false, 1000);
  std::ostringstream out;
  export_ball_csv(ball(*f.engine, f.choice, 1), *f.engine, out);
  CHECK(out.str().find("\"") == std::string::npos);
}

TEST_CASE("rebuilding a ball reproduces elements and edges exactly") {
  Family bi = make_bicyclic_family(100000);
  const CayleyBall b1 = ball(*bi.engine, bi.choice, 5);
  const CayleyBall b2 = ball(*bi.engine, bi.choice, 5);
  REQUIRE(b1.size() == b2.size());
  for (std::size_t i = 0; i < b1.size(); ++i) {
    CHECK(b1.element(i) == b2.element(i));
    CHECK(b1.layer_of(i) == b2.layer_of(i));
  }
  for (std::size_t i = 0; i < b1.interior(); ++i)
    for (GenIndex g = 0; g < 2; ++g) CHECK(b1.step(i, g) == b2.step(i, g));
}

TEST_CASE("layers partition the ball and respect the branching bound") {
  Family fc = make_free_commutative(2, true, 100000);
  const CayleyBall b = ball(*fc.engine, fc.choice, 6);
  std::size_t total = 0;
  Int bound = 1;
  for (std::size_t r = 0; r <= 6; ++r) {
    const auto [lo, hi] = b.layer_range(r);
    CHECK(lo == total);  // contiguous, disjoint
    for (std::size_t i = lo; i < hi; ++i) CHECK(b.layer_of(i) == r);
    CHECK(Int(static_cast<unsigned long>(hi - lo)) <= bound);
    total = hi;
    bound *= 2;
  }
  CHECK(total == b.size());
}

TEST_CASE("right-cancellative monoid tables have unit indegrees") {
  // Over S^1. Monoid matters: a cancellative non-monoid still collides with
  // the adjoined basepoint at any idempotent (1.x = x = x.x).
  for (const auto& rows :
       {std::vector<std::vector<std::size_t>>{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}},
        std::vector<std::vector<std::size_t>>{
            {1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}}}) {
    Family T = make_finite_table(rows, 1000);
    const CayleyBall b = ball(*T.engine, T.choice, 3);
    for (std::size_t d : right_indegree_stats(b)) CHECK(d <= 1);
  }
}

}  // TEST_SUITE
