#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "corpus.hpp"
#include "wml/parser.hpp"
#include "wml/whitehead.hpp"

using namespace wml;

namespace {

Word parse(const char* s, int k = 2) { return word_from_text(s, k); }

long abelian_gcd(const Word& w) {
  long g = 0;
  for (long v : w.exponent_sums()) g = std::gcd(g, std::labs(v));
  return g;
}

// The inverse of (A, a) is (A - a + a^-1, a^-1).
WhiteheadAuto inverse_of(const WhiteheadAuto& a) {
  Letter m = a.multiplier_letter();
  std::uint64_t s = a.subset();
  s &= ~(std::uint64_t{1} << WhiteheadAuto::slot(m));
  s |= std::uint64_t{1} << WhiteheadAuto::slot(m.inverse());
  return WhiteheadAuto::multiplier(s, m.inverse());
}

Word random_image(const Word& w, int k, std::mt19937_64& rng, int steps) {
  const auto mults = multiplier_automorphisms(k);
  const auto perms = permutation_automorphisms(k);
  Word out = w;
  for (int i = 0; i < steps; ++i) {
    out = mults[rng() % mults.size()].apply(out);
    out = perms[rng() % perms.size()].apply(out);
  }
  return out;
}

}  // namespace

TEST_CASE("primitivity examples", "[whitehead]") {
  CHECK(is_primitive(parse("x"), 2));
  CHECK(is_primitive(parse("xy"), 2));
  CHECK(is_primitive(parse("x^2y"), 2));
  CHECK(is_primitive(parse("xyxyX"), 2));
  CHECK_FALSE(is_primitive(parse("x^2"), 2));
  CHECK_FALSE(is_primitive(parse("[x,y]"), 2));
  CHECK_FALSE(is_primitive(parse("x^2y^2"), 2));
  CHECK_FALSE(is_primitive(Word(2), 2));
  CHECK(minimize(parse("[x,y]"), 2).word.size() == 4);
  CHECK(minimize(parse("x^2y^2"), 2).word.size() == 4);
  CHECK(minimize(parse("xy^3xy^3XY^3"), 2).word.size() <= 11);
}

TEST_CASE("proper free factor examples", "[whitehead]") {
  CHECK(in_proper_free_factor(parse("x^2"), 2));
  CHECK(in_proper_free_factor(parse("xy xy"), 2));
  CHECK(in_proper_free_factor(parse("[x,y]", 3), 3));
  CHECK_FALSE(in_proper_free_factor(parse("[x,y]"), 2));
  CHECK_FALSE(in_proper_free_factor(parse("x^2y^2"), 2));
  CHECK_FALSE(in_proper_free_factor(parse("[x,y][x,z]", 3), 3));
  CHECK_FALSE(in_proper_free_factor(parse("x", 1), 1));
}

TEST_CASE("orbit equivalence examples", "[whitehead]") {
  CHECK(orbit_equivalent(parse("[x,y]"), parse("[y,x]"), 2));
  CHECK(orbit_equivalent(parse("[x,y]"), parse("[xy,y]"), 2));
  CHECK(orbit_equivalent(parse("x^2y^2"), parse("xyxY"), 2));
  CHECK_FALSE(orbit_equivalent(parse("x^2y^2"), parse("[x,y]"), 2));
  CHECK_FALSE(orbit_equivalent(parse("x^2"), parse("x^3"), 2));
  CHECK(orbit_equivalent(parse("x"), parse("x^2y"), 2));
}

TEST_CASE("multiplier automorphisms invert", "[whitehead][property]") {
  std::mt19937_64 rng(23);
  for (int k : {2, 3}) {
    const auto mults = multiplier_automorphisms(k);
    CHECK(mults.size() == static_cast<std::size_t>(2 * k * ((1 << (2 * k - 2)) - 2)));
    CHECK(permutation_automorphisms(k).size() == static_cast<std::size_t>(k == 2 ? 8 : 48));
    for (const auto& a : mults) {
      Word w = testing::random_word(rng, k, 10);
      CHECK(inverse_of(a).apply(a.apply(w)) == w);
      CHECK(a.apply(w.inverse()) == a.apply(w).inverse());
    }
  }
}

TEST_CASE("minimization trace strictly shortens", "[whitehead][property]") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    Word w = random_image(testing::random_cyclic_word(rng, 2, 2, 6), 2, rng, 3);
    Minimization m = minimize(w, 2);
    Word cur = cyclic_reduce(w).core;
    for (const auto& a : m.trace) {
      Word next = cyclic_reduce(a.apply(cur)).core;
      CHECK(next.size() < cur.size());
      cur = next;
    }
    CHECK(cur == m.word);
    CHECK(m.word.is_cyclically_reduced());
  }
}

TEST_CASE("orbit invariants are preserved by automorphisms", "[whitehead][property]") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Word w = testing::random_cyclic_word(rng, 2, 1, 6);
    Word img = random_image(w, 2, rng, 4);
    CHECK(abelian_gcd(img) == abelian_gcd(w));
    CHECK(minimize(img, 2).word.size() == minimize(w, 2).word.size());
    CHECK(is_primitive(img, 2) == is_primitive(w, 2));
    CHECK(in_proper_free_factor(img, 2) == in_proper_free_factor(w, 2));
    CHECK(orbit_equivalent(w, img, 2));
    CHECK(orbit_equivalent(img, w, 2));
    CHECK(orbit_equivalent(w, w.rotated(1), 2));
    if (is_primitive(w, 2)) CHECK(abelian_gcd(w) == 1);
  }
  for (int trial = 0; trial < 30; ++trial) {
    Word p = random_image(parse("x"), 2, rng, 5);
    CHECK(is_primitive(p, 2));
    CHECK(in_proper_free_factor(p, 2));
  }
}

TEST_CASE("a word need not share an orbit with its inverse", "[whitehead]") {
  // confirmed by bounded breadth-first search over the orbit
  CHECK_FALSE(orbit_equivalent(parse("XXyxyy"), parse("XXyxyy").inverse(), 2));
  CHECK(orbit_equivalent(parse("[x,y]"), parse("[x,y]").inverse(), 2));
}

TEST_CASE("orbit exploration honors its cap", "[whitehead]") {
  WhiteheadOptions tiny;
  tiny.orbit_cap = 1;
  CHECK_THROWS_AS(in_proper_free_factor(parse("x^2y^2"), 2, tiny), ResourceLimit);
  CHECK_NOTHROW(in_proper_free_factor(parse("x^2y^2"), 2));
}
