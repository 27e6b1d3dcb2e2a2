#pragma once

// Free-group words over a fixed ambient rank: letters, eager free reduction,
// cyclic reduction, balance and proper-power detection.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wml {

/// A signed basis letter x_g^{+1} or x_g^{-1}, stored as +g / -g.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int generator, int sign) : value_(sign > 0 ? generator : -generator) {}

  static constexpr Letter from_signed(int value) {
    Letter l;
    l.value_ = value;
    return l;
  }

  constexpr int generator() const { return value_ > 0 ? value_ : -value_; }
  constexpr int sign() const { return value_ > 0 ? 1 : -1; }
  constexpr int value() const { return value_; }
  constexpr Letter inverse() const { return from_signed(-value_); }
  constexpr bool cancels(Letter other) const { return value_ == -other.value_; }

  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;

 private:
  int value_ = 1;
};

/// Freely reduced element of F_r. The empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(int rank) : rank_(rank) {}

  Word(std::vector<Letter> letters, int rank) : rank_(rank) {
    for (Letter l : letters) push_back(l);
  }

  /// Builds from signed generator indices, e.g. {1, 2, -1, -2} for [x,y].
  static Word from_signed(std::initializer_list<int> values, int rank) {
    return from_signed(std::vector<int>(values), rank);
  }
  static Word from_signed(const std::vector<int>& values, int rank) {
    Word w(rank);
    for (int v : values) {
      if (v == 0) throw std::invalid_argument("letter index 0 is not a generator");
      w.push_back(Letter::from_signed(v));
    }
    return w;
  }

  int rank() const { return rank_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool is_identity() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// Appends with free cancellation against the last letter.
  void push_back(Letter l) {
    if (l.generator() > rank_)
      throw std::out_of_range("generator x" + std::to_string(l.generator()) +
                              " exceeds rank " + std::to_string(rank_));
    if (!letters_.empty() && letters_.back().cancels(l))
      letters_.pop_back();
    else
      letters_.push_back(l);
  }

  Word inverse() const {
    Word w(rank_);
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
    return w;
  }

  Word with_rank(int rank) const {
    Word w(rank);
    for (Letter l : letters_) w.push_back(l);
    return w;
  }

  friend Word operator*(const Word& a, const Word& b) {
    Word w = a;
    w.rank_ = std::max(a.rank_, b.rank_);
    for (Letter l : b.letters_) w.push_back(l);
    return w;
  }

  Word pow(long k) const {
    Word base = k < 0 ? inverse() : *this;
    Word out(rank_);
    for (long i = 0; i < std::labs(k); ++i) out = out * base;
    return out;
  }

  /// Cyclic shift to the left by k positions (k taken mod length).
  Word rotated(std::size_t k) const {
    if (letters_.empty()) return *this;
    std::vector<Letter> v(letters_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = letters_[(i + k) % v.size()];
    Word w(rank_);
    w.letters_ = std::move(v);
    return w;
  }

  bool is_cyclically_reduced() const {
    return letters_.size() < 2 || !letters_.front().cancels(letters_.back());
  }

  /// Per-generator exponent sums, indexed 0..rank-1.
  std::vector<long> exponent_sums() const {
    std::vector<long> s(static_cast<std::size_t>(rank_), 0);
    for (Letter l : letters_) s[static_cast<std::size_t>(l.generator() - 1)] += l.sign();
    return s;
  }

  /// Largest generator index that actually occurs.
  int support_rank() const {
    int m = 0;
    for (Letter l : letters_) m = std::max(m, l.generator());
    return m;
  }

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend auto operator<=>(const Word& a, const Word& b) {
    if (a.letters_.size() != b.letters_.size()) return a.letters_.size() <=> b.letters_.size();
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  int rank_ = 0;
};

inline Word commutator(const Word& u, const Word& v) { return u * v * u.inverse() * v.inverse(); }

/// [a1,b1][a2,b2]...[ag,bg] over generators a_i = x_{2i-1}, b_i = x_{2i}.
inline Word standard_surface_word(int genus) {
  Word w(2 * genus);
  for (int i = 0; i < genus; ++i) {
    Word a = Word::from_signed({2 * i + 1}, 2 * genus);
    Word b = Word::from_signed({2 * i + 2}, 2 * genus);
    w = w * commutator(a, b);
  }
  return w;
}

struct CyclicReduction {
  Word core;
  Word conjugator;
};

/// w = conjugator * core * conjugator^{-1}, core cyclically reduced.
inline CyclicReduction cyclic_reduce(const Word& w) {
  const auto& l = w.letters();
  std::size_t i = 0, j = l.size();
  while (j - i >= 2 && l[i].cancels(l[j - 1])) {
    ++i;
    --j;
  }
  Word core(w.rank()), conj(w.rank());
  for (std::size_t k = 0; k < i; ++k) conj.push_back(l[k]);
  for (std::size_t k = i; k < j; ++k) core.push_back(l[k]);
  return {core, conj};
}

inline std::size_t cyclic_length(const Word& w) { return cyclic_reduce(w).core.size(); }

/// Lexicographically least rotation of a cyclically reduced word.
inline Word least_rotation(const Word& w) {
  Word best = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    Word r = w.rotated(k);
    if (r.letters() < best.letters()) best = std::move(r);
  }
  return best;
}

/// Representative of the conjugacy class: least rotation of the cyclic core.
inline Word cyclic_normal_form(const Word& w) { return least_rotation(cyclic_reduce(w).core); }

struct BalanceReport {
  bool balanced = true;
  std::vector<long> totals;  // per generator, index 0 = x1
};

inline BalanceReport is_balanced(const std::vector<Word>& words) {
  int rank = 0;
  for (const auto& w : words) rank = std::max(rank, w.rank());
  BalanceReport r;
  r.totals.assign(static_cast<std::size_t>(rank), 0);
  for (const auto& w : words)
    for (Letter l : w) r.totals[static_cast<std::size_t>(l.generator() - 1)] += l.sign();
  r.balanced = std::all_of(r.totals.begin(), r.totals.end(), [](long t) { return t == 0; });
  return r;
}

struct PowerDecomposition {
  bool proper = false;
  Word root;
  long exponent = 1;
};

/// Maximal d >= 2 with w = root^d. Computed on the cyclic core: the least
/// rotation period p of the core gives core = u^{|core|/p}; the conjugator
/// is carried over to the root.
inline PowerDecomposition is_proper_power(const Word& w) {
  if (w.is_identity()) return {false, w, 1};
  auto [core, conj] = cyclic_reduce(w);
  const std::size_t len = core.size();
  for (std::size_t p = 1; p <= len / 2; ++p) {
    if (len % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < len && periodic; ++i) periodic = core[i] == core[i - p];
    if (!periodic) continue;
    Word u(w.rank());
    for (std::size_t i = 0; i < p; ++i) u.push_back(core[i]);
    return {true, conj * u * conj.inverse(), static_cast<long>(len / p)};
  }
  return {false, w, 1};
}

inline std::vector<long> abelianization(const Word& w) { return w.exponent_sums(); }

inline bool in_commutator_subgroup(const Word& w) {
  auto s = w.exponent_sums();
  return std::all_of(s.begin(), s.end(), [](long v) { return v == 0; });
}

}  // namespace wml
