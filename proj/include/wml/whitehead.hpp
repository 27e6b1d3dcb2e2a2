#pragma once

// Whitehead automorphisms of F_k and the orbit questions built on them:
// cyclic-length minimization (peak reduction), primitivity, containment in a
// proper free factor and Aut(F_k)-orbit equivalence of conjugacy classes.
//
// All lengths are cyclic lengths; every question here is conjugacy-invariant.

#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "wml/limits.hpp"
#include "wml/words.hpp"

namespace wml {

class WhiteheadAuto {
 public:
  enum class Kind { Permutation, Multiplier };

  /// x_g -> x_{target[g-1]}^{sign[g-1]}
  static WhiteheadAuto permutation(std::vector<int> target, std::vector<int> sign) {
    WhiteheadAuto a;
    a.kind_ = Kind::Permutation;
    a.target_ = std::move(target);
    a.sign_ = std::move(sign);
    return a;
  }

  /// The pair (A, a): a letter l outside {a, a^-1} maps to
  /// [l^-1 in A ? a^-1 : 1] l [l in A ? a : 1]; a is fixed.
  /// `subset` is a bitmask over letter slots (see slot()); it must contain a
  /// and not a^-1.
  static WhiteheadAuto multiplier(std::uint64_t subset, Letter a) {
    WhiteheadAuto w;
    w.kind_ = Kind::Multiplier;
    w.subset_ = subset;
    w.multiplier_ = a;
    return w;
  }

  static constexpr int slot(Letter l) { return 2 * (l.generator() - 1) + (l.sign() > 0 ? 0 : 1); }

  Kind kind() const { return kind_; }
  Letter multiplier_letter() const { return multiplier_; }
  std::uint64_t subset() const { return subset_; }

  bool in_subset(Letter l) const { return (subset_ >> slot(l)) & 1U; }

  Word apply(const Word& w) const {
    Word out(w.rank());
    if (kind_ == Kind::Permutation) {
      for (Letter l : w) {
        auto g = static_cast<std::size_t>(l.generator() - 1);
        out.push_back(Letter(target_[g], sign_[g] * l.sign()));
      }
      return out;
    }
    for (Letter l : w) {
      if (l.generator() == multiplier_.generator()) {
        out.push_back(l);
        continue;
      }
      if (in_subset(l.inverse())) out.push_back(multiplier_.inverse());
      out.push_back(l);
      if (in_subset(l)) out.push_back(multiplier_);
    }
    return out;
  }

  WhiteheadAuto inverse() const {
    if (kind_ == Kind::Multiplier) {
      // (A, a)^{-1} = (A - a + a^-1, a^-1)
      std::uint64_t s = subset_;
      s &= ~(std::uint64_t{1} << slot(multiplier_));
      s |= std::uint64_t{1} << slot(multiplier_.inverse());
      return multiplier(s, multiplier_.inverse());
    }
    std::vector<int> t(target_.size()), s(sign_.size());
    for (std::size_t g = 0; g < target_.size(); ++g) {
      auto img = static_cast<std::size_t>(target_[g] - 1);
      t[img] = static_cast<int>(g) + 1;
      s[img] = sign_[g];
    }
    return permutation(t, s);
  }

  std::string describe() const {
    if (kind_ == Kind::Permutation) {
      std::string s = "perm(";
      for (std::size_t g = 0; g < target_.size(); ++g)
        s += (g ? "," : "") + std::string(sign_[g] > 0 ? "x" : "X") + std::to_string(target_[g]);
      return s + ")";
    }
    std::string s = "mult(a=" + std::string(multiplier_.sign() > 0 ? "x" : "X") +
                    std::to_string(multiplier_.generator()) + ",A={";
    bool first = true;
    for (int b = 0; b < 64; ++b)
      if ((subset_ >> b) & 1U) {
        s += (first ? "" : ",") + std::string(b % 2 ? "X" : "x") + std::to_string(b / 2 + 1);
        first = false;
      }
    return s + "})";
  }

 private:
  Kind kind_ = Kind::Permutation;
  std::vector<int> target_, sign_;
  std::uint64_t subset_ = 0;
  Letter multiplier_;
};

/// Every multiplier-type automorphism of F_k that is not the identity or an
/// inner automorphism: 2k choices of a, nonempty proper subsets of the other
/// 2k-2 letters.
inline std::vector<WhiteheadAuto> multiplier_automorphisms(int k) {
  if (k < 1 || k > 31) throw std::invalid_argument("whitehead: rank must be in 1..31");
  std::vector<WhiteheadAuto> out;
  for (int g = 1; g <= k; ++g)
    for (int sgn : {1, -1}) {
      Letter a(g, sgn);
      std::vector<int> others;
      for (int s = 0; s < 2 * k; ++s)
        if (s / 2 != g - 1) others.push_back(s);
      const std::uint64_t full = (std::uint64_t{1} << others.size()) - 1;
      for (std::uint64_t m = 1; m < full; ++m) {
        std::uint64_t subset = std::uint64_t{1} << WhiteheadAuto::slot(a);
        for (std::size_t i = 0; i < others.size(); ++i)
          if ((m >> i) & 1U) subset |= std::uint64_t{1} << others[i];
        out.push_back(WhiteheadAuto::multiplier(subset, a));
      }
    }
  return out;
}

/// The k! 2^k signed permutations of the basis.
inline std::vector<WhiteheadAuto> permutation_automorphisms(int k) {
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 1);
  std::vector<WhiteheadAuto> out;
  do {
    for (unsigned m = 0; m < (1U << k); ++m) {
      std::vector<int> s(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = (m >> i) & 1U ? -1 : 1;
      out.push_back(WhiteheadAuto::permutation(p, s));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

struct WhiteheadOptions {
  std::size_t orbit_cap = 1'000'000;
};

struct Minimization {
  Word word;  // cyclically reduced, of minimal cyclic length in the orbit
  std::vector<WhiteheadAuto> trace;
};

namespace detail {

inline Word cyclic_core(const Word& w, int k) { return cyclic_reduce(w.with_rank(k)).core; }

/// Canonical representative of a conjugacy class modulo signed permutations.
inline Word permutation_canonical(const Word& cyclic, const std::vector<WhiteheadAuto>& perms) {
  Word best = least_rotation(cyclic);
  for (const auto& p : perms) {
    Word c = least_rotation(p.apply(cyclic));
    if (c.letters() < best.letters()) best = std::move(c);
  }
  return best;
}

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ULL;
    for (Letter l : w) h = (h ^ static_cast<std::size_t>(l.value() + 1024)) * 1099511628211ULL;
    return h;
  }
};

inline bool omits_generator(const Word& w, int k) {
  std::vector<bool> used(static_cast<std::size_t>(k), false);
  for (Letter l : w) used[static_cast<std::size_t>(l.generator() - 1)] = true;
  return std::find(used.begin(), used.end(), false) != used.end();
}

/// Breadth-first search of the minimal level of the orbit of `start` (which
/// must already be minimal) under length-preserving Whitehead automorphisms,
/// with classes taken modulo rotation and signed permutations. Stops early
/// when `stop` returns true for a visited class.
template <typename Stop>
bool explore_minimal_level(const Word& start, int k, const WhiteheadOptions& opt, Stop stop) {
  const auto perms = permutation_automorphisms(k);
  const auto mults = multiplier_automorphisms(k);
  const std::size_t len = start.size();
  std::unordered_set<Word, WordHash> seen;
  std::deque<Word> queue;
  Word s = permutation_canonical(start, perms);
  seen.insert(s);
  queue.push_back(s);
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    if (stop(cur)) return true;
    for (const auto& a : mults) {
      Word img = cyclic_reduce(a.apply(cur)).core;
      if (img.size() != len) continue;
      Word c = permutation_canonical(img, perms);
      if (seen.insert(c).second) {
        if (seen.size() > opt.orbit_cap)
          throw ResourceLimit("whitehead: minimal level exceeds " + std::to_string(opt.orbit_cap) + " classes");
        queue.push_back(std::move(c));
      }
    }
  }
  return false;
}

}  // namespace detail

/// Applies any cyclic-length-reducing multiplier automorphism until none
/// exists. By Whitehead's theorem the result has minimal cyclic length in
/// its Aut(F_k)-orbit.
inline Minimization minimize(const Word& w, int k) {
  Minimization m{detail::cyclic_core(w, k), {}};
  if (m.word.size() <= 1) return m;
  const auto mults = multiplier_automorphisms(k);
  for (bool improved = true; improved && m.word.size() > 1;) {
    improved = false;
    for (const auto& a : mults) {
      Word img = cyclic_reduce(a.apply(m.word)).core;
      if (img.size() < m.word.size()) {
        m.word = std::move(img);
        m.trace.push_back(a);
        improved = true;
        break;
      }
    }
  }
  return m;
}

inline bool is_primitive(const Word& w, int k) {
  if (w.is_identity()) return false;
  return minimize(w, k).word.size() == 1;
}

/// Whether some conjugate of w lies in a proper free factor of F_k: some
/// class in the minimal level of the orbit omits a generator. Throws
/// ResourceLimit when the level exceeds the cap.
inline bool in_proper_free_factor(const Word& w, int k, const WhiteheadOptions& opt = {}) {
  if (w.is_identity()) return true;
  Word m = minimize(w, k).word;
  if (detail::omits_generator(m, k)) return true;
  if (k == 1) return false;
  return detail::explore_minimal_level(m, k, opt, [k](const Word& c) { return detail::omits_generator(c, k); });
}

/// Whether the conjugacy classes of u and v lie in one Aut(F_k)-orbit.
inline bool orbit_equivalent(const Word& u, const Word& v, int k, const WhiteheadOptions& opt = {}) {
  Word mu = minimize(u, k).word;
  Word mv = minimize(v, k).word;
  if (mu.size() != mv.size()) return false;
  if (mu.size() <= 1) return true;  // trivial, or both primitive
  const auto perms = permutation_automorphisms(k);
  const Word target = detail::permutation_canonical(mv, perms);
  return detail::explore_minimal_level(mu, k, opt, [&](const Word& c) { return c == target; });
}

}  // namespace wml
