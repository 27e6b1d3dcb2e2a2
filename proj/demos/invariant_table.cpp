// Prints pi, cl and |CommCrit| for a handful of words in F_2.

#include <iomanip>
#include <iostream>

#include "wml/wml.hpp"

int main() {
  const char* words[] = {"x", "x^2", "[x,y]", "x^2y^2", "[x,y^2]", "[x,y]^2", "xyxYXY", "[x,y][x,Y]"};
  std::cout << std::left << std::setw(14) << "word" << std::setw(6) << "pi" << std::setw(6) << "cl"
            << "comm_crit\n";
  for (const char* text : words) {
    wml::Word w = wml::word_from_text(text, 2);
    wml::InvariantReport r = wml::compute_invariants(w, 2);
    std::cout << std::setw(14) << text << std::setw(6) << r.pi.to_string() << std::setw(6) << r.cl.cl.to_string()
              << (r.comm_crit.decided ? std::to_string(r.comm_crit.count()) : "undecided") << '\n';
  }
}
