#include <catch_amalgamated.hpp>

#include <random>

#include "wml/rational_function.hpp"

using namespace wml;

namespace {

Polynomial poly(std::vector<long> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return Polynomial(std::move(v));
}

RationalFunction rf(std::vector<long> num, std::vector<long> den) { return {poly(num), poly(den)}; }

}  // namespace

TEST_CASE("polynomial arithmetic and gcd", "[rational]") {
  Polynomial a = poly({-1, 0, 1});  // n^2 - 1
  Polynomial b = poly({1, 1});      // n + 1
  CHECK(a.divided_exactly(b) == poly({-1, 1}));
  CHECK_THROWS(a.divided_exactly(poly({2, 1})));
  CHECK(Polynomial::gcd(a, poly({1, 2, 1})) == b);
  CHECK(Polynomial::gcd(poly({2, 4}), poly({6, 12})) == poly({2, 4}));
  CHECK(Polynomial::gcd(poly({0, 2}), poly({3})) == poly({1}));
  CHECK((a * b).degree() == 3);
  CHECK(a.to_string() == "n^2 - 1");
  CHECK(poly({96, 0, -56, 0, 98}).to_string() == "98n^4 - 56n^2 + 96");
  CHECK(poly({0, -1}).to_string() == "-n");
}

TEST_CASE("rational functions have a unique canonical form", "[rational]") {
  CHECK(rf({0, 2}, {0, 0, 4}) == rf({1}, {0, 2}));
  CHECK(rf({0, 2}, {0, 0, 4}).denominator_poly() == poly({0, 2}));
  CHECK(rf({1}, {0, -1}) == rf({-1}, {0, 1}));
  CHECK(rf({-1, 0, 1}, {1, 1}) == RationalFunction(poly({-1, 1})));
  RationalFunction lhs = RationalFunction(1) / RationalFunction(poly({-1, 1})) -
                         RationalFunction(1) / RationalFunction(poly({1, 1}));
  CHECK(lhs == rf({2}, {-1, 0, 1}));
  CHECK((RationalFunction::n() * RationalFunction::n_pow(-1)) == RationalFunction(1));
  CHECK((lhs - lhs).is_zero());
  CHECK((lhs - lhs).denominator_poly() == poly({1}));
  CHECK_THROWS(RationalFunction(1) / RationalFunction());
}

TEST_CASE("canonical form is stable under random rescaling", "[rational][property]") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> coef(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial p = poly({coef(rng), coef(rng), coef(rng)});
    Polynomial q = poly({coef(rng), coef(rng), 1});
    Polynomial s = poly({coef(rng), coef(rng) == 0 ? 1 : 3});
    if (p.is_zero() || q.is_zero()) continue;
    RationalFunction f(p, q), g(p * s * Polynomial(-7), q * s * Polynomial(-7));
    CHECK(f == g);
    CHECK(f.serialize() == g.serialize());
    CHECK(f.denominator_poly().coefficients().back() > 0);
    CHECK(RationalFunction::deserialize(f.serialize()) == f);
  }
}

TEST_CASE("text and serialized forms", "[rational]") {
  CHECK(RationalFunction::n_pow(-1).to_string() == "1/n");
  CHECK(rf({0, 0, 1}, {-1, 0, 1}).to_string() == "n^2/(n^2 - 1)");
  CHECK(rf({2}, {0, 1}).to_string() == "2/n");
  CHECK(rf({1}, {0, 2}).to_string() == "1/(2n)");
  CHECK(RationalFunction(2).to_string() == "2");
  CHECK(RationalFunction().to_string() == "0");
  CHECK(RationalFunction::n_pow(-1).serialize() == "[1] / [0,1]");
  CHECK(RationalFunction().serialize() == "[] / [1]");
  CHECK(RationalFunction::deserialize("[] / [1]").is_zero());
}

TEST_CASE("evaluation", "[rational]") {
  RationalFunction f = rf({0, 0, 1}, {-1, 0, 1});
  CHECK(f.evaluate(BigRational(3)) == BigRational(9, 8));
  CHECK_THROWS(f.evaluate(BigRational(1)));
  CHECK(f.evaluate_double(10) == Catch::Approx(100.0 / 99.0));
}

TEST_CASE("laurent expansion examples", "[rational][laurent]") {
  LaurentSeries a = laurent(RationalFunction::n_pow(-1), 3);
  CHECK(a.leading_exponent == -1);
  CHECK(a.coeffs == std::vector<BigRational>{1, 0, 0, 0});
  LaurentSeries b = laurent(rf({1}, {-1, 0, 1}), 4);
  CHECK(b.leading_exponent == -2);
  CHECK(b.coeffs == std::vector<BigRational>{1, 0, 1, 0, 1});
  CHECK(b.coefficient(-6) == 1);
  CHECK(b.coefficient(0) == 0);
  CHECK_THROWS(b.coefficient(-7));
  CHECK(b.serialize() == "(-2, [1, 0, 1, 0, 1])");
  CHECK(b.to_string() == "n^-2 + n^-4 + n^-6 + O(n^-7)");
  CHECK(laurent(rf({-3, 2}, {0, 1}), 2).to_string() == "2 - 3*n^-1 + O(n^-3)");
  CHECK(laurent(RationalFunction(), 2).zero);
  CHECK(laurent(rf({1, 0, 2}, {0, 3}), 1).coeffs == std::vector<BigRational>{BigRational(2, 3), 0});
  CHECK(rf({1}, {-1, 0, 1}).order() == -2);
  CHECK_FALSE(RationalFunction().order().has_value());
}

TEST_CASE("laurent coefficients reproduce the function at large n", "[rational][laurent][property]") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> coef(-9, 9);
  const BigRational N(1000000);
  for (int trial = 0; trial < 100; ++trial) {
    RationalFunction f(poly({coef(rng), coef(rng), coef(rng), 1}), poly({coef(rng), coef(rng), coef(rng), coef(rng), 2}));
    const int depth = 4;
    LaurentSeries s = laurent(f, depth + 1);
    BigRational partial = 0, power = 1;
    // N^{e0}
    for (int i = 0; i < std::abs(s.leading_exponent); ++i) power *= N;
    if (s.leading_exponent < 0) power = 1 / power;
    for (int i = 0; i <= depth; ++i) {
      partial += s.coeffs[static_cast<std::size_t>(i)] * power;
      power /= N;
    }
    // (f(N) - partial) / N^{e0-depth-1} must approach the next coefficient.
    BigRational scaled = (f.evaluate(N) - partial) / power;
    double next = static_cast<double>(s.coeffs.back());
    CHECK(static_cast<double>(scaled) == Catch::Approx(next).margin(1e-3 * (1 + std::abs(next)) ));
  }
}
