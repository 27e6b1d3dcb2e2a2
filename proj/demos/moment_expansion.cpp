// Exact moments of a word measure and their large-n expansions.
//
//   demo_moment_expansion "[x,y^2]" 1 -1

#include <iostream>
#include <string>
#include <vector>

#include "wml/wml.hpp"

int main(int argc, char** argv) {
  std::string text = argc > 1 ? argv[1] : "[x,y]";
  std::vector<int> exps;
  for (int i = 2; i < argc; ++i) exps.push_back(std::stoi(argv[i]));
  if (exps.empty()) exps = {1, -1};

  wml::Word w = wml::word_from_text(text, 2);
  wml::TraceMonomial t(exps);
  wml::Moment m = wml::moment(w, t);
  std::cout << "E_w[T] for w = " << wml::to_pretty_string(w) << ", T = " << t.to_string() << '\n'
            << "  exact   " << m.value.to_string() << "   (valid for n >= " << m.n_min << ")\n"
            << "  laurent " << wml::laurent(m.value, 6).to_string() << '\n';
  for (long n : {static_cast<long>(m.n_min), m.n_min + 1L, 10L, 100L})
    if (n >= m.n_min) std::cout << "  n = " << n << ": " << m.at(n).str() << '\n';
}
