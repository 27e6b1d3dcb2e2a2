#pragma once

// Predicted large-n expansions of word-measure moments and their comparison
// with exact values.

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wml/invariants.hpp"
#include "wml/rational_function.hpp"
#include "wml/weingarten.hpp"

namespace wml {

/// <T,1> + (<T,xi_1> + <T,xi_-1>) |CommCrit(w)| n^{1-pi} + O(n^{-pi}).
struct ExpansionPrediction {
  BigInt constant;
  std::optional<int> exponent;  // 1 - pi; absent when pi is infinite
  BigInt coefficient = 0;
  std::optional<int> remainder_bound;  // -pi; absent when the moment is exactly constant
};

inline ExpansionPrediction expansion_prediction(const Word& w, const TraceMonomial& t, const InvariantReport& inv) {
  if (is_proper_power(w).proper) throw std::invalid_argument("expansion_prediction: w is a proper power");
  if (w.is_identity()) throw std::invalid_argument("expansion_prediction: w is the identity");
  if (inv.pi.is_undecided() || !inv.comm_crit.decided)
    throw ResourceLimit("expansion_prediction: invariants undecided");
  ExpansionPrediction p;
  p.constant = stable_inner_product(t, TraceMonomial{});
  if (inv.pi.is_infinite()) return p;
  const int pi = static_cast<int>(inv.pi.value);
  p.exponent = 1 - pi;
  p.coefficient = (stable_inner_product(t, TraceMonomial{1}) + stable_inner_product(t, TraceMonomial{-1})) *
                  BigInt(inv.comm_crit.count());
  p.remainder_bound = -pi;
  return p;
}

struct TheoremCheck {
  std::string name;
  bool applicable = true;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  Word word;
  TraceMonomial t;
  Moment exact;
  LaurentSeries expansion;
  std::optional<ExpansionPrediction> prediction;
  Extended pi;
  std::size_t comm_crit_count = 0;
  std::vector<TheoremCheck> checks;
  double seconds_invariants = 0, seconds_moment = 0;
};

inline std::string order_text(const RationalFunction& f) {
  auto o = f.order();
  return o ? std::to_string(*o) : std::string("-inf");
}

/// Order of f is at most e (the zero function has order -infinity).
inline bool order_at_most(const RationalFunction& f, int e) {
  auto o = f.order();
  return !o || *o <= e;
}

/// Weaker bound, main expansion and the xi_1 xi_-1 bound, as applicable.
inline std::vector<TheoremCheck> check_theorems(const Word& w, const TraceMonomial& t, const RationalFunction& exact,
                                                const InvariantReport& inv) {
  std::vector<TheoremCheck> out;
  const RationalFunction base = RationalFunction(stable_inner_product(t, TraceMonomial{}));
  const RationalFunction rest = exact - base;

  TheoremCheck weak{"weaker_bound", true, false, ""};
  if (inv.pi.is_finite()) {
    const int bound = 1 - static_cast<int>(inv.pi.value);
    weak.pass = order_at_most(rest, bound);
    weak.detail = "order(E - <T,1>) = " + order_text(rest) + " <= " + std::to_string(bound);
  } else if (inv.pi.is_infinite()) {
    weak.pass = rest.is_zero();
    weak.detail = "pi infinite: E - <T,1> = " + rest.to_string();
  } else {
    weak.applicable = false;
    weak.detail = "pi undecided";
  }
  out.push_back(weak);

  TheoremCheck main{"main_expansion", true, false, ""};
  if (is_proper_power(w).proper || w.is_identity()) {
    main.applicable = false;
    main.detail = "w is a proper power";
  } else if (inv.pi.is_undecided() || !inv.comm_crit.decided) {
    main.applicable = false;
    main.detail = "invariants undecided";
  } else {
    ExpansionPrediction p = expansion_prediction(w, t, inv);
    RationalFunction remainder = rest;
    if (p.exponent) remainder = remainder - RationalFunction(p.coefficient) * RationalFunction::n_pow(*p.exponent);
    if (p.remainder_bound) {
      main.pass = order_at_most(remainder, *p.remainder_bound);
      main.detail = "coefficient " + p.coefficient.str() + " at n^" + std::to_string(*p.exponent) +
                    ", order(remainder) = " + order_text(remainder) + " <= " + std::to_string(*p.remainder_bound);
    } else {
      main.pass = remainder.is_zero();
      main.detail = "pi infinite: remainder = " + remainder.to_string();
    }
  }
  out.push_back(main);

  TraceMonomial sorted = t;
  std::sort(sorted.exponents.begin(), sorted.exponents.end());
  if (sorted.exponents == std::vector<int>{-1, 1}) {
    TheoremCheck xi{"xi1_xi-1_bound", true, false, ""};
    const RationalFunction d = exact - RationalFunction(1);
    if (inv.pi.is_finite()) {
      const int bound = 2 * (1 - static_cast<int>(inv.pi.value));
      xi.pass = order_at_most(d, bound);
      xi.detail = "order(E - 1) = " + order_text(d) + " <= " + std::to_string(bound);
    } else if (inv.pi.is_infinite()) {
      xi.pass = d.is_zero();
      xi.detail = "pi infinite: E - 1 = " + d.to_string();
    } else {
      xi.applicable = false;
      xi.detail = "pi undecided";
    }
    out.push_back(xi);
  }
  return out;
}

inline VerifyReport verify(const Word& w, const TraceMonomial& t, int r, const InvariantOptions& iopt = {},
                           const MomentOptions& mopt = {}) {
  using clock = std::chrono::steady_clock;
  VerifyReport rep;
  rep.word = w.with_rank(r);
  rep.t = t;
  auto t0 = clock::now();
  InvariantReport inv = compute_invariants(rep.word, r, iopt);
  auto t1 = clock::now();
  rep.exact = moment(rep.word, t, mopt);
  auto t2 = clock::now();
  rep.seconds_invariants = std::chrono::duration<double>(t1 - t0).count();
  rep.seconds_moment = std::chrono::duration<double>(t2 - t1).count();
  rep.pi = inv.pi;
  rep.comm_crit_count = inv.comm_crit.count();
  const int depth = inv.pi.is_finite() ? static_cast<int>(inv.pi.value) + 2 : 4;
  rep.expansion = laurent(rep.exact.value, depth);
  if (!is_proper_power(rep.word).proper && !rep.word.is_identity() && !inv.pi.is_undecided() && inv.comm_crit.decided)
    rep.prediction = expansion_prediction(rep.word, t, inv);
  rep.checks = check_theorems(rep.word, t, rep.exact.value, inv);
  return rep;
}

}  // namespace wml
