#include <doctest.h>

#include "oracles.hpp"
#include "wordpow/combinatorics.hpp"
#include "wordpow/word.hpp"

using namespace wordpow;

namespace {

const Alphabet kAB = Alphabet::from_chars("ab");

Word w(std::string_view text, const Alphabet& sigma = kAB) { return Word::parse(text, sigma); }

}  // namespace

TEST_CASE("alphabet parsing and lookup") {
  const Alphabet a = Alphabet::parse("x1,x2,y");
  CHECK(a.size() == 3);
  CHECK(a.letter("x2") == 1);
  CHECK_FALSE(a.contains("x3"));
  CHECK(a.str() == "x1,x2,y");
  CHECK_THROWS_AS(Alphabet::parse("a,a"), DomainError);
  CHECK_THROWS_AS(Alphabet::parse("a,,b"), DomainError);
  CHECK_THROWS_AS(a.letter("z"), DomainError);
  CHECK(Alphabet::from_chars("ab").subset_of(Alphabet::from_chars("cba")));
  CHECK_THROWS_AS(kAB.concat(Alphabet::from_chars("bc")), DomainError);
  CHECK(kAB.concat(Alphabet::parse("_x")).str() == "a,b,_x");
}

TEST_CASE("word parsing uses the longest matching letter name") {
  const Alphabet sigma = Alphabet::parse("x1,x10,x");
  const Word u = Word::parse("x10x1x", sigma);
  REQUIRE(u.size() == 3);
  CHECK(u[0] == 1);
  CHECK(u[1] == 0);
  CHECK(u[2] == 2);
  CHECK(Word::parse("x1 x x10", sigma).str() == "x1xx10");
  CHECK_THROWS_AS(Word::parse("abc", kAB), ParseError);
  CHECK(Word::parse("", kAB).empty());
}

TEST_CASE("word arithmetic") {
  const Word u = w("ab");
  CHECK((u + w("a")).str() == "aba");
  CHECK(u.pow(3).str() == "ababab");
  CHECK(u.pow(0).empty());
  CHECK(w("abba").slice(1, 2).str() == "bb");
  CHECK(w("aab").count(0) == 2);
  CHECK(w("aab").letter_counts() == std::vector<std::size_t>{2, 1});
  CHECK(w("bb").used_letters() == std::vector<Letter>{1});
  CHECK(w("ab").rebased(Alphabet::from_chars("cba")).str() == "ab");
  CHECK_THROWS_AS(w("ab").rebased(Alphabet::from_chars("a")), DomainError);
  CHECK_THROWS_AS(u + Word::parse("a", Alphabet::from_chars("a")), DomainError);
}

TEST_CASE("primitive roots") {
  auto check_root = [](std::string_view text, std::string_view r, std::size_t k) {
    const auto pr = primitive_root(w(text));
    CHECK(pr.root.str() == r);
    CHECK(pr.exponent == k);
  };
  check_root("abab", "ab", 2);
  check_root("aab", "aab", 1);
  check_root("aaa", "a", 3);
  CHECK_THROWS_AS(primitive_root(w("")), DomainError);

  CHECK(is_primitive(w("aabb")));
  CHECK_FALSE(is_primitive(w("abab")));
  CHECK(is_primitive(w("a")));
  CHECK_FALSE(is_primitive(w("")));
}

TEST_CASE("primitive roots agree with divisor search on all binary words up to length 12") {
  for (const auto& s : oracle::words_up_to("ab", 12)) {
    if (s.empty()) continue;
    const auto pr = primitive_root(w(s));
    const std::string r = oracle::root(s);
    REQUIRE(pr.root.str() == r);
    REQUIRE(pr.exponent == s.size() / r.size());
    REQUIRE(is_primitive(w(s)) == oracle::primitive(s));
  }
}

TEST_CASE("conjugacy") {
  CHECK(are_conjugate(w("aab"), w("aba")));
  CHECK_FALSE(are_conjugate(w("aab"), w("abb")));
  CHECK(are_conjugate(w(""), w("")));
  CHECK_FALSE(are_conjugate(w("ab"), w("ab", Alphabet::from_chars("abc"))));

  const auto all = oracle::words_up_to("ab", 6);
  for (const auto& u : all) {
    for (const auto& v : all) {
      if (u.size() != v.size()) continue;
      REQUIRE(are_conjugate(w(u), w(v)) == oracle::conjugate(u, v));
    }
  }
}

TEST_CASE("internal factors") {
  CHECK(is_internal_factor(w("ab"), w("aabb")));
  CHECK_FALSE(is_internal_factor(w("ab"), w("abab")));
  CHECK_FALSE(is_internal_factor(w("aba"), w("abab")));

  const auto small = oracle::words_up_to("ab", 3);
  const auto big = oracle::words_up_to("ab", 7);
  for (const auto& u : small) {
    for (const auto& v : big) REQUIRE(is_internal_factor(w(u), w(v)) == oracle::internal_factor(u, v));
  }
}

TEST_CASE("common root from periodic prefixes") {
  const auto r = fine_wilf_root(w("abab"), w("ab"));
  REQUIRE(r);
  CHECK(r->str() == "ab");
  CHECK_FALSE(fine_wilf_root(w("ab"), w("ba")));
  CHECK_THROWS_AS(fine_wilf_root(w(""), w("ab")), DomainError);

  const auto expect = oracle::fine_wilf("aabaa", "aabaaaab");
  const auto got = fine_wilf_root(w("aabaa"), w("aabaaaab"));
  CHECK(got.has_value() == expect.has_value());

  const auto all = oracle::words_up_to("ab", 6);
  for (const auto& u : all) {
    if (u.empty()) continue;
    for (const auto& v : all) {
      if (v.empty()) continue;
      const auto o = oracle::fine_wilf(u, v);
      const auto g = fine_wilf_root(w(u), w(v));
      REQUIRE(o.has_value() == g.has_value());
      // Fine and Wilf: agreement up to the threshold means u and v commute.
      REQUIRE(o.has_value() == (u + v == v + u));
      if (g) REQUIRE(g->str() == *o);
    }
  }
}
