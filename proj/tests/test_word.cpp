#include <doctest.h>

#include "cogrowth/errors.hpp"
#include "cogrowth/word.hpp"

using namespace cogrowth;

namespace {

GeneratorChoice overlapping_choice() {
  GeneratorChoice X;
  X.symbols = {"a", "b", "ab"};
  X.targets = {1, 2, 3};
  X.definitions = {{0}, {1}, {2}};
  return X;
}

}  // namespace

TEST_SUITE("word") {

TEST_CASE("tokenization is greedy longest match") {
  const GeneratorChoice X = overlapping_choice();
  CHECK(parse_word(X, "ab") == Word{2});
  CHECK(parse_word(X, "aab") == Word{0, 2});
  CHECK(parse_word(X, "ba") == Word{1, 0});
  CHECK(parse_word(X, "aba") == Word{2, 0});
}

TEST_CASE("the token 1 denotes the empty word") {
  const GeneratorChoice X = overlapping_choice();
  CHECK(parse_word(X, "1").empty());
  CHECK(format_word(X, {}) == "1");
}

TEST_CASE("format and parse are inverse on symbol sequences") {
  const GeneratorChoice X = overlapping_choice();
  const Word w = {2, 1, 0};
  CHECK(format_word(X, w) == "abba");
  // "abba" re-tokenizes greedily to ab,b,a — same targets, same word here
  CHECK(parse_word(X, format_word(X, w)) == w);
}

TEST_CASE("unknown characters are usage errors") {
  const GeneratorChoice X = overlapping_choice();
  CHECK_THROWS_AS(parse_word(X, "axb"), UsageError);
  CHECK_THROWS_AS(parse_word(X, "C"), UsageError);
}

}  // TEST_SUITE
