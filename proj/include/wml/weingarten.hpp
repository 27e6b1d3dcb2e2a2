#pragma once

// Exact Haar-unitary integration of products of traces of words.
//
// Generators are integrated out one at a time. For a generator x with p
// occurrences of each sign, the Weingarten formula sums over (sigma, tau) in
// S_p x S_p; each pair rewires the index slots into new cyclic words in the
// remaining generators, weighted by Wg(sigma tau^-1). Subproblems are memoized
// on their canonical multiset of cyclic words. When one generator remains and
// the pair sum is large, the closed character formula for power sums is used.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "wml/limits.hpp"
#include "wml/rational_function.hpp"
#include "wml/symmetric.hpp"
#include "wml/words.hpp"

namespace wml {

/// T = xi_{m_1} ... xi_{m_l} with every m_i nonzero.
struct TraceMonomial {
  std::vector<int> exponents;

  TraceMonomial() = default;
  TraceMonomial(std::initializer_list<int> e) : TraceMonomial(std::vector<int>(e)) {}
  explicit TraceMonomial(std::vector<int> e) : exponents(std::move(e)) {
    if (std::find(exponents.begin(), exponents.end(), 0) != exponents.end())
      throw std::invalid_argument("trace monomial: exponent 0 is not allowed");
  }

  /// Conjugate monomial (negated exponents).
  TraceMonomial conjugate() const {
    std::vector<int> e = exponents;
    for (int& m : e) m = -m;
    return TraceMonomial(std::move(e));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < exponents.size(); ++i) s += (i ? "," : "") + std::to_string(exponents[i]);
    return s + ")";
  }
};

/// Exact value together with the smallest n for which it is the integral.
struct Moment {
  RationalFunction value;
  int n_min = 1;

  BigRational at(long n) const {
    if (n < n_min) throw std::domain_error("moment evaluated below its validity threshold n_min");
    return value.evaluate(BigRational(n));
  }
};

struct MomentOptions {
  std::uint64_t term_cap = 100'000'000;  // total permutation pairs visited
  // The last generator switches to the character formula when (p!)^2 exceeds this.
  std::uint64_t pair_sum_limit = 1'000'000;
};

/// Wg(sigma, n) for sigma of the given cycle type; memoized per thread.
inline RationalFunction wg(const Partition& cycle_type_of_sigma) {
  thread_local std::map<Partition, RationalFunction> memo;
  Partition mu = make_partition(cycle_type_of_sigma);
  if (auto it = memo.find(mu); it != memo.end()) return it->second;
  const int p = partition_size(mu);
  if (p < 1) throw std::invalid_argument("wg: empty cycle type");
  RationalFunction sum;
  for (const Partition& l : partitions(p)) {
    BigInt f = standard_tableaux_count(l);
    BigInt chi = sp_character(l, mu);
    if (chi == 0) continue;
    sum += RationalFunction(f * f * chi) / schur_dim(l);
  }
  BigInt pf = factorial(p);
  RationalFunction result = sum / RationalFunction(pf * pf);
  memo.emplace(mu, result);
  return result;
}

namespace detail {

inline std::vector<std::vector<int>> all_permutations(int p) {
  std::vector<int> v(static_cast<std::size_t>(p));
  std::iota(v.begin(), v.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline std::vector<int> inverse_permutation(const std::vector<int>& s) {
  std::vector<int> inv(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) inv[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
  return inv;
}

inline std::uint64_t pair_count(int p) {
  std::uint64_t f = 1;
  for (int i = 2; i <= p; ++i) f *= static_cast<std::uint64_t>(i);
  return f * f;
}

// Index slots of a word list: one per letter, with cyclic successor.
struct SlotLayout {
  std::vector<int> letter;  // signed generator per slot
  std::vector<std::size_t> next;

  explicit SlotLayout(const std::vector<Word>& words) {
    for (const Word& w : words) {
      const std::size_t base = letter.size();
      for (std::size_t t = 0; t < w.size(); ++t) {
        letter.push_back(w[t].value());
        next.push_back(base + (t + 1) % w.size());
      }
    }
  }
  std::size_t size() const { return letter.size(); }
};

// Canonical multiset of nontrivial cyclic words plus a power of n.
struct TraceProduct {
  int n_power = 0;
  std::vector<Word> words;

  void add(const Word& w) {
    Word c = cyclic_normal_form(w);
    if (c.is_identity())
      ++n_power;
    else
      words.push_back(std::move(c));
  }
  void finish() { std::sort(words.begin(), words.end()); }
};

inline std::string product_key(const std::vector<Word>& words) {
  std::string k;
  for (const Word& w : words) {
    for (Letter l : w) k += std::to_string(l.value()) + ',';
    k += ';';
  }
  return k;
}

class Integrator {
 public:
  explicit Integrator(int rank, MomentOptions opt) : rank_(rank), opt_(opt) {}

  RationalFunction evaluate(const TraceProduct& t) {
    return RationalFunction::n_pow(t.n_power) * evaluate_words(t.words);
  }

 private:
  RationalFunction evaluate_words(const std::vector<Word>& words) {
    if (words.empty()) return 1;
    const std::string key = product_key(words);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    RationalFunction value = compute(words);
    memo_.emplace(key, value);
    return value;
  }

  RationalFunction compute(const std::vector<Word>& words) {
    if (!is_balanced(with_common_rank(words)).balanced) return 0;
    std::map<int, int> positives;
    for (const Word& w : words)
      for (Letter l : w)
        if (l.sign() > 0) ++positives[l.generator()];
    int gen = 0, p = 0;
    for (auto [g, count] : positives)
      if (gen == 0 || count < p) gen = g, p = count;
    if (positives.size() == 1 && pair_count(p) > opt_.pair_sum_limit) return power_sum_integral(words);
    return eliminate(words, gen, p);
  }

  std::vector<Word> with_common_rank(const std::vector<Word>& words) const {
    std::vector<Word> out;
    for (const Word& w : words) out.push_back(w.with_rank(rank_));
    return out;
  }

  // E[prod tr(U^a_i) prod conj tr(U^b_j)] = sum_lambda chi(alpha) chi(beta).
  RationalFunction power_sum_integral(const std::vector<Word>& words) const {
    std::vector<int> alpha, beta;
    for (const Word& w : words) {
      const int k = static_cast<int>(w.size());
      (w[0].sign() > 0 ? alpha : beta).push_back(k);
    }
    const int m = std::accumulate(alpha.begin(), alpha.end(), 0);
    BigInt total = 0;
    for (const Partition& l : partitions(m)) total += BigInt(sp_character(l, alpha)) * sp_character(l, beta);
    return RationalFunction(total);
  }

  RationalFunction eliminate(const std::vector<Word>& words, int gen, int p) {
    work_ += pair_count(p);
    if (work_ > opt_.term_cap)
      throw ResourceLimit("word_moment: more than " + std::to_string(opt_.term_cap) + " permutation pairs");
    SlotLayout slots(words);
    std::vector<std::size_t> pos, neg;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (std::abs(slots.letter[s]) != gen) continue;
      (slots.letter[s] > 0 ? pos : neg).push_back(s);
    }
    const auto perms = all_permutations(p);
    std::vector<std::vector<int>> inverses;
    for (const auto& s : perms) inverses.push_back(inverse_permutation(s));
    std::map<std::tuple<Partition, int, std::string>, std::pair<std::int64_t, std::vector<Word>>> tally;
    std::vector<std::size_t> jump(slots.size());
    std::vector<char> seen(slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (std::abs(slots.letter[s]) != gen) jump[s] = slots.next[s];
    for (const auto& sigma : perms) {
      for (std::size_t a = 0; a < pos.size(); ++a)
        jump[pos[a]] = slots.next[neg[static_cast<std::size_t>(sigma[a])]];
      for (const auto& tau_inv : inverses) {
        for (std::size_t b = 0; b < neg.size(); ++b)
          jump[neg[b]] = slots.next[pos[static_cast<std::size_t>(tau_inv[b])]];
        TraceProduct out;
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t start = 0; start < slots.size(); ++start) {
          if (seen[start]) continue;
          Word cyc(rank_);
          for (std::size_t s = start; !seen[s]; s = jump[s]) {
            seen[s] = 1;
            if (std::abs(slots.letter[s]) != gen) cyc.push_back(Letter::from_signed(slots.letter[s]));
          }
          out.add(cyc);
        }
        out.finish();
        std::vector<int> rho(static_cast<std::size_t>(p));
        for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = sigma[static_cast<std::size_t>(tau_inv[i])];
        auto key = std::make_tuple(cycle_type(rho), out.n_power, product_key(out.words));
        auto [it, fresh] = tally.try_emplace(std::move(key), 0, std::vector<Word>{});
        if (fresh) it->second.second = std::move(out.words);
        ++it->second.first;
      }
    }
    RationalFunction total;
    for (const auto& [key, entry] : tally) {
      RationalFunction inner = evaluate_words(entry.second);
      if (inner.is_zero()) continue;
      total += RationalFunction(BigInt(entry.first)) * wg(std::get<0>(key)) *
               RationalFunction::n_pow(std::get<1>(key)) * inner;
    }
    return total;
  }

  int rank_;
  MomentOptions opt_;
  std::uint64_t work_ = 0;
  std::map<std::string, RationalFunction> memo_;
};

inline int common_rank(const std::vector<Word>& words) {
  int r = 1;
  for (const Word& w : words) r = std::max({r, w.rank(), w.support_rank()});
  return r;
}

inline int validity_threshold(const std::vector<Word>& words) {
  auto totals = std::map<int, int>{};
  for (const Word& w : words)
    for (Letter l : w)
      if (l.sign() > 0) ++totals[l.generator()];
  int n_min = 1;
  for (auto [g, c] : totals) n_min = std::max(n_min, c);
  return n_min;
}

}  // namespace detail

/// E[tr w_1 ... tr w_l] over independent Haar unitaries, exactly.
inline Moment word_moment(const std::vector<Word>& words, const MomentOptions& opt = {}) {
  const int rank = detail::common_rank(words);
  detail::TraceProduct t;
  for (const Word& w : words) t.add(w.with_rank(rank));
  t.finish();
  detail::Integrator integ(rank, opt);
  return {integ.evaluate(t), detail::validity_threshold(words)};
}

/// The literal product over generators of permutation-pair sums. Exponential;
/// kept as an independent check on word_moment.
inline Moment word_moment_direct(const std::vector<Word>& words, std::uint64_t term_cap = 100'000'000) {
  const int n_min = detail::validity_threshold(words);
  const int rank = detail::common_rank(words);
  std::vector<Word> ws;
  for (const Word& w : words) ws.push_back(w.with_rank(rank));
  if (!is_balanced(ws).balanced) return {RationalFunction(), n_min};
  detail::SlotLayout slots(ws);
  std::map<int, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> occ;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    auto& [pos, neg] = occ[std::abs(slots.letter[s])];
    (slots.letter[s] > 0 ? pos : neg).push_back(s);
  }
  struct Gen {
    std::vector<std::size_t> pos, neg;
    std::vector<std::vector<int>> perms, inv;
  };
  std::vector<Gen> gens;
  long double terms = 1;
  for (auto& [g, pn] : occ) {
    Gen gen{pn.first, pn.second, detail::all_permutations(static_cast<int>(pn.first.size())), {}};
    for (const auto& s : gen.perms) gen.inv.push_back(detail::inverse_permutation(s));
    terms *= static_cast<long double>(gen.perms.size()) * static_cast<long double>(gen.perms.size());
    gens.push_back(std::move(gen));
  }
  if (terms > static_cast<long double>(term_cap))
    throw ResourceLimit("word_moment_direct: term count above cap");

  // Trivial words carry factors of n independent of the pair choices.
  int free_loops = 0;
  for (const Word& w : ws) free_loops += w.is_identity() ? 1 : 0;

  std::map<std::pair<std::vector<Partition>, int>, std::int64_t> tally;
  std::vector<std::size_t> idx(gens.size() * 2, 0), jump(slots.size());
  std::vector<char> seen(slots.size());
  while (true) {
    std::vector<Partition> types;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const auto& sigma = gens[k].perms[idx[2 * k]];
      const auto& tau_inv = gens[k].inv[idx[2 * k + 1]];
      for (std::size_t a = 0; a < gens[k].pos.size(); ++a)
        jump[gens[k].pos[a]] = slots.next[gens[k].neg[static_cast<std::size_t>(sigma[a])]];
      for (std::size_t b = 0; b < gens[k].neg.size(); ++b)
        jump[gens[k].neg[b]] = slots.next[gens[k].pos[static_cast<std::size_t>(tau_inv[b])]];
      std::vector<int> rho(sigma.size());
      for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = sigma[static_cast<std::size_t>(tau_inv[i])];
      types.push_back(cycle_type(rho));
    }
    std::fill(seen.begin(), seen.end(), 0);
    int loops = free_loops;
    for (std::size_t start = 0; start < slots.size(); ++start) {
      if (seen[start]) continue;
      ++loops;
      for (std::size_t s = start; !seen[s]; s = jump[s]) seen[s] = 1;
    }
    ++tally[{std::move(types), loops}];
    std::size_t d = 0;
    for (; d < idx.size(); ++d) {
      if (++idx[d] < gens[d / 2].perms.size()) break;
      idx[d] = 0;
    }
    if (d == idx.size()) break;
  }
  RationalFunction total;
  for (const auto& [key, count] : tally) {
    RationalFunction term = RationalFunction(BigInt(count)) * RationalFunction::n_pow(key.second);
    for (const Partition& ct : key.first) term *= wg(ct);
    total += term;
  }
  return {total, n_min};
}

/// E_w[xi_{m_1} ... xi_{m_l}] = word_moment(w^{m_1}, ..., w^{m_l}).
inline Moment moment(const Word& w, const TraceMonomial& t, const MomentOptions& opt = {}) {
  std::vector<Word> words;
  for (int m : t.exponents) words.push_back(w.pow(m));
  return word_moment(words, opt);
}

/// Large-n limit of <T1, T2>: prod_p delta(a_p, b_p) a_p! p^{a_p}, where a_p
/// and b_p count the exponents +p and -p in T1 joined with the conjugate of T2.
inline BigInt stable_inner_product(const TraceMonomial& t1, const TraceMonomial& t2) {
  std::map<int, int> a, b;
  auto tally = [&](int m) { (m > 0 ? a[m] : b[-m]) += 1; };
  for (int m : t1.exponents) tally(m);
  for (int m : t2.exponents) tally(-m);
  BigInt result = 1;
  for (auto [p, count] : a) {
    if (b[p] != count) return 0;
    result *= factorial(count);
    for (int i = 0; i < count; ++i) result *= p;
  }
  for (auto [p, count] : b)
    if (count != 0 && a[p] != count) return 0;
  return result;
}

}  // namespace wml
