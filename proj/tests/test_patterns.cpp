#include <random>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "signbal/patterns.hpp"

using signbal::PatternSet;
using signbal::Permutation;
using signbal::Symmetry;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<std::size_t> one_based(std::vector<std::size_t> v) {
  for (auto& x : v) ++x;
  return v;
}

}  // namespace

TEST_CASE("pattern sets are canonical") {
  const auto r = PatternSet::parse("2143, 1324,1324");
  CHECK(r.size() == 2);
  CHECK(r.to_string() == "1324,2143");
  CHECK(PatternSet::parse("321,12").to_string() == "12,321");
  CHECK(PatternSet::parse("").empty());
  CHECK(r.contains(P("2143")));
  CHECK_FALSE(r.contains(P("1234")));
  CHECK_THROWS_WITH_AS(PatternSet::parse("1325"),
                       "1325 is not a permutation word (value 5 exceeds length 4)",
                       std::invalid_argument);
  CHECK(PatternSet::parse("1,2,3,4,5,6,7,8,10,9;21").to_string() == "21;1,2,3,4,5,6,7,8,10,9");
}

TEST_CASE("standardize") {
  const std::vector<int> w{7, 2, 9, 4};
  CHECK(signbal::standardize(w) == P("3142"));
  CHECK(signbal::standardize(std::vector<int>{}) == Permutation());
  CHECK_THROWS_AS(signbal::standardize(std::vector<int>{3, 3}), std::invalid_argument);
}

TEST_CASE("occurrences") {
  const auto w = signbal::find_occurrence(P("24153"), P("132"));
  REQUIRE(w);
  CHECK(w->indices == std::vector<std::size_t>{1, 2, 5});
  CHECK(signbal::standardize(std::vector<int>{2, 5, 3}) == P("132"));
  CHECK_FALSE(signbal::find_occurrence(P("53412"), P("132")));
  CHECK(signbal::find_occurrence(P("3142"), P("3142"))->indices == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(signbal::find_occurrence(P("3142"), Permutation())->indices.empty());
  CHECK(signbal::count_occurrences(P("24153"), P("132")) == 3);
  CHECK_FALSE(signbal::find_occurrence(P("12345"), P("21")));
  CHECK(signbal::contains_pattern(P("3412"), P("3412")));
  CHECK(signbal::contains_pattern(P("21"), Permutation()));
  CHECK_FALSE(signbal::contains_pattern(P("21"), P("321")));
  CHECK(signbal::avoids_all(P("2143"), PatternSet::parse("123,321")));
  CHECK_FALSE(signbal::avoids_all(P("2143"), PatternSet::parse("213")));
  CHECK(signbal::avoids_all(P("21"), PatternSet{}));
}

TEST_CASE("extends_containment") {
  const auto r = PatternSet::parse("132");
  CHECK(signbal::extends_containment(std::vector<int>{5, 9, 7}, r));
  CHECK_FALSE(signbal::extends_containment(std::vector<int>{5, 7, 9}, r));
  CHECK(signbal::extends_containment(std::vector<int>{1, 3, 2, 4}, r, false));
  CHECK_FALSE(signbal::extends_containment(std::vector<int>{1, 3, 2, 4}, r, true));
  CHECK(signbal::extends_containment(std::vector<int>{1}, PatternSet{Permutation()}));
}

TEST_CASE("matcher agrees with subset oracle, exhaustive n <= 6") {
  const auto patterns = oracle::all_words(3);
  const auto more = oracle::all_words(4);
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const auto& h : oracle::all_words(n)) {
      const auto host = Permutation::from_word(h);
      for (const auto* set : {&patterns, &more}) {
        for (const auto& pw : *set) {
          const auto pat = Permutation::from_word(pw);
          const auto expect = oracle::first_occurrence(h, pw);
          const auto got = signbal::find_occurrence(host, pat);
          REQUIRE(got.has_value() == !expect.empty());
          if (got) REQUIRE(got->indices == one_based(expect));
          REQUIRE(signbal::count_occurrences(host, pat) == oracle::occurrences(h, pw));
        }
      }
    }
  }
}

TEST_CASE("matcher agrees with subset oracle, random hosts") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto h = oracle::random_word(7 + trial % 6, rng);
    const auto pw = oracle::random_word(2 + trial % 4, rng);
    const auto got = signbal::find_occurrence(Permutation::from_word(h), Permutation::from_word(pw));
    const auto expect = oracle::first_occurrence(h, pw);
    REQUIRE(got.has_value() == !expect.empty());
    if (got) REQUIRE(got->indices == one_based(expect));
  }
}

TEST_CASE("symmetry maps on sets") {
  const auto r = PatternSet::parse("1234,3214");
  CHECK(signbal::transform_set(r, Symmetry::Reverse) == PatternSet::parse("4321,4123"));
  CHECK(signbal::transform_set(r, Symmetry::Complement) == PatternSet::parse("4321,2341"));
  CHECK(signbal::transform_set(r, Symmetry::Inverse) == r);
  CHECK(signbal::apply(Symmetry::Inverse, P("2341")) == P("4123"));
  CHECK(signbal::to_string(Symmetry::Complement) == "complement");
}

TEST_CASE("containment commutes with the symmetries") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto host = Permutation::from_word(oracle::random_word(8, rng));
    const auto pat = Permutation::from_word(oracle::random_word(4, rng));
    const bool c = signbal::contains_pattern(host, pat);
    for (auto s : {Symmetry::Reverse, Symmetry::Complement, Symmetry::Inverse})
      REQUIRE(signbal::contains_pattern(signbal::apply(s, host), signbal::apply(s, pat)) == c);
  }
}
