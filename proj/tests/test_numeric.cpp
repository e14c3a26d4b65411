#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "cogrowth/numeric.hpp"

using namespace cogrowth;

TEST_SUITE("numeric") {

TEST_CASE("binomial satisfies the Pascal recurrence") {
  for (unsigned long n = 1; n <= 20; ++n)
    for (unsigned long k = 1; k < n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(20, 10) == 184756);
  CHECK(binomial(28, 14) == 40116600);
}

TEST_CASE("int_pow") {
  CHECK(int_pow(Int(3), 0) == 1);
  CHECK(int_pow(Int(3), 5) == 243);
  CHECK(int_pow(Int(10), 30) == Int("1000000000000000000000000000000"));
}

TEST_CASE("log_int stays accurate beyond double range") {
  CHECK(log_int(Int(1)) == 0.0);
  const Int big = int_pow(Int(2), 4000);  // ~10^1204, not a double
  CHECK(log_int(big) == doctest::Approx(4000 * std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("log_rat and nth_root") {
  CHECK(log_rat(Rat(1, 4)) == doctest::Approx(-std::log(4.0)).epsilon(1e-14));
  CHECK(nth_root(Int(8), 3) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(nth_root(Int(1), 9) == doctest::Approx(1.0));
  CHECK(nth_root(int_pow(Int(7), 30), 30) == doctest::Approx(7.0).epsilon(1e-14));
}

TEST_CASE("decimal rendering is exact") {
  CHECK(to_decimal(Int("123456789012345678901234567890")) ==
        "123456789012345678901234567890");
  Rat q(6, 4);
  q.canonicalize();
  CHECK(to_decimal(q) == "3/2");
}

TEST_CASE("SplitMix64 streams are deterministic and seed sensitive") {
  SplitMix64 a(42), b(42), c(43);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 64; ++i) {
    const std::uint64_t x = a.next(), y = b.next(), z = c.next();
    all_equal = all_equal && (x == y);
    any_diff = any_diff || (x != z);
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("below stays in range and is roughly uniform") {
  SplitMix64 g(7);
  std::array<int, 3> buckets{};
  for (int i = 0; i < 30000; ++i) {
    const std::uint64_t r = g.below(3);
    REQUIRE(r < 3);
    ++buckets[static_cast<std::size_t>(r)];
  }
  for (int b : buckets) CHECK(b > 9500);  // expected 10000, sd ~82
}

TEST_CASE("derived substreams are reproducible and distinct") {
  CHECK(SplitMix64::derive(1, 0) == SplitMix64::derive(1, 0));
  CHECK(SplitMix64::derive(1, 0) != SplitMix64::derive(1, 1));
  CHECK(SplitMix64::derive(1, 0) != SplitMix64::derive(2, 0));
}

}  // TEST_SUITE
