#pragma once

// Word expression grammar:
//
//   expr    := factor*                      (juxtaposition = product)
//   factor  := atom ('^' int)*
//   atom    := gen | '(' expr ')' | '[' expr ',' expr ']' | '1'
//   gen     := [a-z] | [A-Z] | ('x'|'X') digits
//
// Lowercase letters are generators, uppercase their inverses. Single letters
// map to indices through the alphabet "xyzabc...w" (x=1, y=2, z=3, a=4, ...);
// the indexed forms x1..x999 / X1..X999 name generators directly.

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wml/words.hpp"

namespace wml {

inline constexpr std::string_view kSingleLetterAlphabet = "xyzabcdefghijklmnopqrstuvw";

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct WordExpr;
using WordExprPtr = std::shared_ptr<const WordExpr>;

struct WordExpr {
  struct Identity {};
  struct Generator {
    int index;
  };
  struct Inverse {
    WordExprPtr arg;
  };
  struct Power {
    WordExprPtr base;
    long exponent;
  };
  struct Concat {
    std::vector<WordExprPtr> parts;
  };
  struct Commutator {
    WordExprPtr left, right;
  };

  std::variant<Identity, Generator, Inverse, Power, Concat, Commutator> node;
  std::size_t position = 0;

  Word evaluate(int rank) const {
    return std::visit(
        [&](const auto& n) -> Word {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Identity>) {
            return Word(rank);
          } else if constexpr (std::is_same_v<T, Generator>) {
            if (n.index > rank)
              throw ParseError("generator x" + std::to_string(n.index) + " exceeds rank " + std::to_string(rank),
                               position);
            return Word::from_signed({n.index}, rank);
          } else if constexpr (std::is_same_v<T, Inverse>) {
            return n.arg->evaluate(rank).inverse();
          } else if constexpr (std::is_same_v<T, Power>) {
            return n.base->evaluate(rank).pow(n.exponent);
          } else if constexpr (std::is_same_v<T, Concat>) {
            Word w(rank);
            for (const auto& p : n.parts) w = w * p->evaluate(rank);
            return w;
          } else {
            return commutator(n.left->evaluate(rank), n.right->evaluate(rank));
          }
        },
        node);
  }
};

namespace detail {

class Parser {
 public:
  Parser(std::string_view text, int rank) : text_(text), rank_(rank) {}

  WordExprPtr parse() {
    auto e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_factor_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '[' || c == '1';
  }

  static WordExprPtr make(WordExpr::Concat c, std::size_t at) {
    if (c.parts.size() == 1) return c.parts.front();
    return std::make_shared<const WordExpr>(WordExpr{std::move(c), at});
  }

  WordExprPtr expr() {
    std::size_t start = pos_;
    WordExpr::Concat c;
    while (at_factor_start()) c.parts.push_back(factor());
    if (c.parts.empty()) return std::make_shared<const WordExpr>(WordExpr{WordExpr::Identity{}, start});
    return make(std::move(c), start);
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail("expected integer exponent");
    }
    if (pos_ - digits > 9) {
      pos_ = start;
      fail("exponent out of range");
    }
    long v = std::stol(std::string(text_.substr(digits, pos_ - digits)));
    return neg ? -v : v;
  }

  WordExprPtr factor() {
    std::size_t start = pos_;
    WordExprPtr a = atom();
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != '^') break;
      ++pos_;
      long k = integer();
      if (k == -1)
        a = std::make_shared<const WordExpr>(WordExpr{WordExpr::Inverse{a}, start});
      else
        a = std::make_shared<const WordExpr>(WordExpr{WordExpr::Power{a, k}, start});
    }
    return a;
  }

  WordExprPtr generator(int index, bool inverse, std::size_t at) {
    if (index > rank_) {
      pos_ = at;
      fail("generator x" + std::to_string(index) + " exceeds rank " + std::to_string(rank_));
    }
    auto g = std::make_shared<const WordExpr>(WordExpr{WordExpr::Generator{index}, at});
    if (!inverse) return g;
    return std::make_shared<const WordExpr>(WordExpr{WordExpr::Inverse{g}, at});
  }

  WordExprPtr atom() {
    skip_ws();
    std::size_t start = pos_;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expr();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (c == '[') {
      ++pos_;
      auto l = expr();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ',') fail("expected ',' in commutator");
      ++pos_;
      auto r = expr();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ']') fail("expected ']'");
      ++pos_;
      return std::make_shared<const WordExpr>(WordExpr{WordExpr::Commutator{l, r}, start});
    }
    if (c == '1') {
      ++pos_;
      return std::make_shared<const WordExpr>(WordExpr{WordExpr::Identity{}, start});
    }
    const bool upper = std::isupper(static_cast<unsigned char>(c));
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    ++pos_;
    if (lower == 'x' && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t d = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ - d > 3 || text_[d] == '0') {
        pos_ = start;
        fail("generator index must be in 1..999");
      }
      return generator(std::stoi(std::string(text_.substr(d, pos_ - d))), upper, start);
    }
    auto idx = kSingleLetterAlphabet.find(lower);
    if (idx == std::string_view::npos) {
      pos_ = start;
      fail(std::string("unexpected '") + c + "'");
    }
    return generator(static_cast<int>(idx) + 1, upper, start);
  }

  std::string_view text_;
  int rank_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `text`; throws ParseError (with position) on malformed input or
/// when a generator index exceeds `rank`.
inline WordExprPtr parse_word(std::string_view text, int rank) { return detail::Parser(text, rank).parse(); }

/// Parse and evaluate in one step.
inline Word word_from_text(std::string_view text, int rank) { return parse_word(text, rank)->evaluate(rank); }

/// Canonical indexed spelling, e.g. "x1x2X1X2"; the identity prints as "1".
inline std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (Letter l : w) {
    s += l.sign() > 0 ? 'x' : 'X';
    s += std::to_string(l.generator());
  }
  return s;
}

/// Single-letter spelling ("xyXY") when every generator has a letter.
inline std::string to_pretty_string(const Word& w) {
  if (w.empty()) return "1";
  if (w.support_rank() > static_cast<int>(kSingleLetterAlphabet.size())) return to_string(w);
  std::string s;
  for (Letter l : w) {
    char c = kSingleLetterAlphabet[static_cast<std::size_t>(l.generator() - 1)];
    s += l.sign() > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return s;
}

}  // namespace wml
