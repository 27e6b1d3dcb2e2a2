#include <catch_amalgamated.hpp>

#include <random>

#include "wml/montecarlo.hpp"
#include "wml/parser.hpp"

using namespace wml;

namespace {

Word parse2(const char* s) { return word_from_text(s, 2); }

bool within(const Estimate& e, double expected, double sigmas = 4.0) {
  const double tol = sigmas * e.standard_error + 1e-12;
  return std::abs(e.mean.real() - expected) <= tol && std::abs(e.mean.imag()) <= tol;
}

}  // namespace

TEST_CASE("haar samples are unitary", "[montecarlo]") {
  std::mt19937_64 rng(1);
  for (int n : {1, 2, 5, 12, 30}) {
    UnitarySample u = sample_haar(n, rng);
    CHECK(u.matrix.rows() == n);
    CHECK(unitarity_defect(u.matrix) <= kUnitarityTolerance);
  }
  CHECK_THROWS(sample_haar(0, rng));
  // U(1) samples are uniform phases: first moment vanishes, modulus is one
  std::complex<double> sum = 0;
  const int count = 20000;
  for (int i = 0; i < count; ++i) {
    std::complex<double> z = sample_haar(1, rng).matrix(0, 0);
    CHECK(std::abs(std::abs(z) - 1.0) < 1e-12);
    sum += z;
  }
  CHECK(std::abs(sum / static_cast<double>(count)) < 4.0 / std::sqrt(count));
}

TEST_CASE("estimates are reproducible from the seed", "[montecarlo]") {
  const Word w = parse2("[x,y]");
  Estimate a = estimate_moment(w, {1, -1}, 3, 2500, 99);
  Estimate b = estimate_moment(w, {1, -1}, 3, 2500, 99);
  Estimate c = estimate_moment(w, {1, -1}, 3, 2500, 100);
  CHECK(a.mean == b.mean);
  CHECK(a.standard_error == b.standard_error);
  CHECK(a.mean != c.mean);
  CHECK(a.samples == 2500);
  CHECK(a.max_unitarity_defect <= kUnitarityTolerance);
  CHECK_THROWS(estimate_moment(w, {1}, 0, 10, 1));
  CHECK_THROWS(estimate_moment(w, {1}, 2, 1, 1));
}

TEST_CASE("estimates agree with exact moments", "[montecarlo][property]") {
  const Word x = Word::from_signed({1}, 1);
  CHECK(within(estimate_moment(x, {1}, 4, 20000, 5), 0.0));
  CHECK(within(estimate_moment(x, {1, -1}, 4, 20000, 6), 1.0));
  CHECK(within(estimate_moment(x, {2, -2}, 4, 20000, 7), 2.0));
  CHECK(within(estimate_moment(parse2("x^2y^2"), {1}, 3, 20000, 8), 0.0));
  struct Case {
    const char* word;
    TraceMonomial t;
    int n;
  };
  for (const auto& c : {Case{"[x,y]", {1}, 2}, Case{"[x,y]", {1, -1}, 3}, Case{"[x,y^2]", {1, -1}, 4},
                        Case{"[x,y]", {2, -2}, 4}}) {
    const Word w = parse2(c.word);
    const double exact = static_cast<double>(moment(w, c.t).at(c.n));
    Estimate e = estimate_moment(w, c.t, c.n, 20000, 1234);
    INFO(c.word << " " << c.t.to_string() << " n=" << c.n << " exact " << exact << " mean " << e.mean.real()
                << " se " << e.standard_error);
    CHECK(within(e, exact));
  }
}
