// Lists every matching surface for a pair of boundary words.

#include <iostream>

#include "wml/wml.hpp"

int main() {
  using namespace wml;
  std::vector<Word> words{word_from_text("[x,y]", 2), word_from_text("[y,x]", 2)};
  for (const MatchingSpec& spec : enumerate_matchings(words, 2)) {
    SurfaceComplex s = build_surface(spec);
    std::cout << "k_x=" << spec.subdivision(1) << " k_y=" << spec.subdivision(2) << ":";
    for (std::size_t c = 0; c < s.components.size(); ++c) {
      const auto& comp = s.components[c];
      std::cout << "  [chi " << comp.chi << ", genus " << comp.genus << ", boundaries " << comp.boundaries
                << ", image rank " << image_subgroup(s, static_cast<int>(c)).subgroup_rank() << "]";
    }
    std::cout << '\n';
  }
}
