#include <catch_amalgamated.hpp>

#include <random>

#include "corpus.hpp"
#include "wml/parser.hpp"
#include "wml/words.hpp"

using namespace wml;
using wml::testing::all_reduced_words;
using wml::testing::random_word;

namespace {

Word w2(std::initializer_list<int> v) { return Word::from_signed(v, 2); }

}  // namespace

TEST_CASE("parse_word evaluates commutators, powers and inverses", "[words][parser]") {
  CHECK(word_from_text("[x,y]", 2) == w2({1, 2, -1, -2}));
  CHECK(word_from_text("xX", 1).is_identity());
  CHECK(word_from_text("[x,y]^3", 2) == w2({1, 2, -1, -2}).pow(3));
  CHECK(word_from_text("[x,y]^3", 2).size() == 12);
  CHECK(word_from_text("x^-1", 1) == Word::from_signed({-1}, 1));
  CHECK(word_from_text("(xy)^-2", 2) == w2({-2, -1, -2, -1}));
  CHECK(word_from_text("x1 x2 X1 X2", 2) == word_from_text("xyXY", 2));
  CHECK(word_from_text("[x2,x1]", 2) == w2({2, 1, -2, -1}));
  CHECK(word_from_text("", 2).is_identity());
  CHECK(word_from_text("1", 2).is_identity());
  CHECK(word_from_text("[[x,y],z]", 3).size() == 10);
  CHECK(word_from_text("a", 4) == Word::from_signed({4}, 4));
  CHECK(word_from_text("x12", 12) == Word::from_signed({12}, 12));
}

TEST_CASE("parse_word reports syntax errors with a position", "[words][parser]") {
  try {
    parse_word("[x,y", 2);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_word("x^", 1), ParseError);
  CHECK_THROWS_AS(parse_word("x)", 1), ParseError);
  CHECK_THROWS_AS(parse_word("x#", 1), ParseError);
  CHECK_THROWS_AS(parse_word("x1000", 2), ParseError);
  CHECK_THROWS_AS(parse_word("x0", 2), ParseError);
}

TEST_CASE("generator index above the rank is rejected", "[words][parser]") {
  CHECK_THROWS(word_from_text("z", 2));
  CHECK_THROWS(word_from_text("x3", 2));
  CHECK_THROWS(Word::from_signed({3}, 2));
  CHECK_NOTHROW(word_from_text("z", 3));
}

TEST_CASE("printing and parsing round trip on reduced words", "[words][parser][property]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    Word w = random_word(rng, 4, 14);
    CHECK(word_from_text(to_string(w), 4) == w);
    CHECK(word_from_text(to_pretty_string(w), 4) == w);
  }
  CHECK(to_string(w2({1, 2, -1, -2})) == "x1x2X1X2");
  CHECK(to_pretty_string(w2({1, 2, -1, -2})) == "xyXY");
  CHECK(to_string(Word(2)) == "1");
}

TEST_CASE("free reduction is eager and idempotent", "[words][property]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    Word u = random_word(rng, 3, 10), v = random_word(rng, 3, 10);
    Word uv = u * v;
    CHECK(uv.size() <= u.size() + v.size());
    CHECK(Word(uv.letters(), 3) == uv);
    for (std::size_t i = 1; i < uv.size(); ++i) CHECK_FALSE(uv[i - 1].cancels(uv[i]));
    CHECK((u * u.inverse()).is_identity());
  }
}

TEST_CASE("cyclic_reduce examples", "[words]") {
  auto r = cyclic_reduce(w2({1, 2, -1}));
  CHECK(r.core == w2({2}));
  CHECK(r.conjugator == w2({1}));
  auto c = cyclic_reduce(w2({1, 2, -1, -2}));
  CHECK(c.core == w2({1, 2, -1, -2}));
  CHECK(c.conjugator.is_identity());
  auto e = cyclic_reduce(Word(2));
  CHECK(e.core.is_identity());
  CHECK(e.conjugator.is_identity());
}

TEST_CASE("cyclic_reduce gives a shortest conjugate", "[words][property]") {
  std::vector<Word> conjugators{Word(2)};
  for (std::size_t len = 1; len <= 3; ++len)
    for (const Word& c : all_reduced_words(2, len)) conjugators.push_back(c);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    Word w = random_word(rng, 2, 8);
    auto cr = cyclic_reduce(w);
    CHECK(cr.conjugator * cr.core * cr.conjugator.inverse() == w);
    CHECK(cr.core.is_cyclically_reduced());
    CHECK(cr.core.is_identity() == w.is_identity());
    for (const Word& c : conjugators) CHECK((c * w * c.inverse()).size() >= cr.core.size());
  }
}

TEST_CASE("is_balanced", "[words]") {
  CHECK(is_balanced({w2({1, 2, -1, -2})}).balanced);
  auto b = is_balanced({w2({1})});
  CHECK_FALSE(b.balanced);
  CHECK(b.totals[0] == 1);
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    Word w = random_word(rng, 3, 9);
    CHECK(is_balanced({w, w.inverse()}).balanced);
  }
}

TEST_CASE("is_proper_power examples", "[words]") {
  auto a = is_proper_power(Word::from_signed({1, 1}, 1));
  CHECK(a.proper);
  CHECK(a.root == Word::from_signed({1}, 1));
  CHECK(a.exponent == 2);
  Word c = w2({1, 2, -1, -2});
  auto b = is_proper_power(c.pow(3));
  CHECK(b.proper);
  CHECK(b.root == c);
  CHECK(b.exponent == 3);
  auto d = is_proper_power(c);
  CHECK_FALSE(d.proper);
  CHECK(d.root == c);
  CHECK(d.exponent == 1);
  // conjugated power
  auto e = is_proper_power(w2({2, 1, 1, -2}));
  CHECK(e.proper);
  CHECK(e.root.pow(e.exponent) == w2({2, 1, 1, -2}));
}

TEST_CASE("is_proper_power agrees with brute force up to length 8", "[words][property]") {
  for (std::size_t len = 1; len <= 8; ++len)
    for (const Word& w : all_reduced_words(2, len)) {
      const Word core = cyclic_reduce(w).core;
      long best = 1;
      for (std::size_t p = 1; p < core.size(); ++p) {
        if (core.size() % p != 0) continue;
        Word u(std::vector<Letter>(core.begin(), core.begin() + static_cast<long>(p)), 2);
        if (u.pow(static_cast<long>(core.size() / p)) == core) best = std::max(best, static_cast<long>(core.size() / p));
      }
      auto pp = is_proper_power(w);
      REQUIRE(pp.proper == (best >= 2));
      CHECK(pp.exponent == best);
      CHECK(pp.root.pow(pp.exponent) == w);
    }
}

TEST_CASE("standard surface word and cyclic normal form", "[words]") {
  CHECK(standard_surface_word(1) == w2({1, 2, -1, -2}));
  CHECK(standard_surface_word(2) == Word::from_signed({1, 2, -1, -2, 3, 4, -3, -4}, 4));
  Word w = w2({2, -1, -2, 1});
  CHECK(cyclic_normal_form(w) == cyclic_normal_form(w.rotated(1)));
  CHECK(in_commutator_subgroup(w));
  CHECK_FALSE(in_commutator_subgroup(w2({1, 1, 2, 2})));
}
