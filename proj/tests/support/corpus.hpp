#pragma once

// Word generators shared by the property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "wml/words.hpp"

namespace wml::testing {

/// Every freely reduced word of length exactly `len` over rank r.
inline std::vector<Word> all_reduced_words(int r, std::size_t len) {
  std::vector<Word> layer{Word(r)};
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<Word> next;
    for (const Word& w : layer)
      for (int g = 1; g <= r; ++g)
        for (int s : {1, -1}) {
          Letter l(g, s);
          if (!w.empty() && w.letters().back().cancels(l)) continue;
          Word v = w;
          v.push_back(l);
          next.push_back(v);
        }
    layer = std::move(next);
  }
  return layer;
}

inline Word random_word(std::mt19937_64& rng, int r, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, r), sign(0, 1);
  Word w(r);
  for (std::size_t n = len(rng); w.size() < n;) w.push_back(Letter(gen(rng), sign(rng) ? 1 : -1));
  return w;
}

inline Word random_cyclic_word(std::mt19937_64& rng, int r, std::size_t min_len, std::size_t max_len) {
  for (;;) {
    Word w = random_word(rng, r, max_len);
    if (w.size() >= min_len && w.is_cyclically_reduced()) return w;
  }
}

}  // namespace wml::testing
