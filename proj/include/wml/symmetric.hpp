#pragma once

// Partitions, hook lengths, Murnaghan-Nakayama characters of S_p, and the
// dimension polynomials s_lambda(1^n).

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wml/rational_function.hpp"

namespace wml {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

inline int partition_size(const Partition& l) { return std::accumulate(l.begin(), l.end(), 0); }

inline Partition make_partition(std::vector<int> parts) {
  std::erase_if(parts, [](int v) { return v == 0; });
  if (std::any_of(parts.begin(), parts.end(), [](int v) { return v < 0; }))
    throw std::invalid_argument("partition: negative part");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return parts;
}

/// All partitions of p, in reverse lexicographic order starting at (p).
inline std::vector<Partition> partitions(int p) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      cur.push_back(k);
      self(self, remaining - k, k);
      cur.pop_back();
    }
  };
  rec(rec, p, p);
  return out;
}

inline Partition conjugate(const Partition& l) {
  Partition c(l.empty() ? 0 : static_cast<std::size_t>(l.front()), 0);
  for (int part : l)
    for (int j = 0; j < part; ++j) ++c[static_cast<std::size_t>(j)];
  return c;
}

/// hook(i,j) = arm + leg + 1, row-major.
inline std::vector<std::vector<int>> hook_lengths(const Partition& l) {
  Partition c = conjugate(l);
  std::vector<std::vector<int>> h(l.size());
  for (std::size_t i = 0; i < l.size(); ++i)
    for (int j = 0; j < l[i]; ++j)
      h[i].push_back(l[i] - j - 1 + c[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1 + 1);
  return h;
}

inline BigInt factorial(int p) {
  BigInt f = 1;
  for (int i = 2; i <= p; ++i) f *= i;
  return f;
}

/// f^lambda = p! / prod hooks.
inline BigInt standard_tableaux_count(const Partition& l) {
  BigInt prod = 1;
  for (const auto& row : hook_lengths(l))
    for (int h : row) prod *= h;
  return factorial(partition_size(l)) / prod;
}

/// prod over cells of (n + j - i) / hook(i,j).
inline RationalFunction schur_dim(const Partition& l) {
  Polynomial num(1);
  BigInt hooks = 1;
  auto h = hook_lengths(l);
  for (std::size_t i = 0; i < l.size(); ++i)
    for (int j = 0; j < l[i]; ++j) {
      num *= Polynomial::linear(j - static_cast<int>(i));
      hooks *= h[i][static_cast<std::size_t>(j)];
    }
  return {num, Polynomial(hooks)};
}

namespace detail {

// Beta-set form: bead positions lambda_i + len - i, strictly decreasing.
inline std::vector<int> beta_set(const Partition& l) {
  std::vector<int> b(l.size());
  const int len = static_cast<int>(l.size());
  for (int i = 0; i < len; ++i) b[static_cast<std::size_t>(i)] = l[static_cast<std::size_t>(i)] + len - 1 - i;
  return b;
}

inline Partition from_beta(std::vector<int> b) {
  std::sort(b.begin(), b.end(), std::greater<>());
  const int len = static_cast<int>(b.size());
  Partition l;
  for (int i = 0; i < len; ++i) {
    int part = b[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (part > 0) l.push_back(part);
  }
  return l;
}

using CharacterMemo = std::map<std::pair<Partition, std::vector<int>>, std::int64_t>;

// Removes rim hooks of size mu.back() recursively; mu consumed from the back.
inline std::int64_t mn_character(const Partition& l, std::vector<int>& mu, CharacterMemo& memo) {
  if (mu.empty()) return l.empty() ? 1 : 0;
  auto key = std::make_pair(l, mu);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = mu.back();
  mu.pop_back();
  std::vector<int> beta = beta_set(l);
  std::int64_t total = 0;
  for (std::size_t k = 0; k < beta.size(); ++k) {
    const int from = beta[k], to = from - r;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    int between = 0;
    for (int b : beta) between += (b > to && b < from) ? 1 : 0;
    std::vector<int> moved = beta;
    moved[k] = to;
    std::int64_t sub = mn_character(from_beta(moved), mu, memo);
    total += (between % 2 == 0) ? sub : -sub;
  }
  mu.push_back(r);
  memo.emplace(std::move(key), total);
  return total;
}

inline CharacterMemo& character_memo() {
  thread_local CharacterMemo memo;
  return memo;
}

}  // namespace detail

/// chi^lambda(mu) by the Murnaghan-Nakayama rule. The memo is per thread.
inline std::int64_t sp_character(const Partition& lambda, const std::vector<int>& cycle_type) {
  std::vector<int> mu = make_partition(cycle_type);
  if (partition_size(lambda) != partition_size(mu))
    throw std::invalid_argument("sp_character: sizes differ");
  // Largest parts removed first keeps the recursion shallow.
  std::reverse(mu.begin(), mu.end());
  return detail::mn_character(lambda, mu, detail::character_memo());
}

/// Cycle type of a permutation given in one-line form, as a partition.
inline Partition cycle_type(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  Partition ct;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = 1;
      ++len;
    }
    ct.push_back(len);
  }
  return make_partition(std::move(ct));
}

}  // namespace wml
