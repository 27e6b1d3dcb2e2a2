#pragma once

// Exact univariate arithmetic in the symbol n: integer polynomials, rational
// functions in canonical form, and Laurent expansions in 1/n.

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wml {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Polynomial in n with integer coefficients, ascending degree, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c) : Polynomial(BigInt(c)) {}  // NOLINT(google-explicit-constructor)
  Polynomial(BigInt c) {                         // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  explicit Polynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { normalize(); }

  static Polynomial variable() { return Polynomial(std::vector<BigInt>{0, 1}); }
  /// n + c
  static Polynomial linear(long c) { return Polynomial(std::vector<BigInt>{BigInt(c), 1}); }
  static Polynomial monomial(BigInt c, std::size_t degree) {
    std::vector<BigInt> v(degree + 1, 0);
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
  const BigInt& leading() const { return coeffs_.back(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::size_t term_count() const {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; }));
  }

  BigInt content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) g = gcd(g, c);
    return g;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Exact division by an integer dividing every coefficient.
  Polynomial divided_exactly(const BigInt& d) const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) {
      if (c % d != 0) throw std::logic_error("polynomial: inexact scalar division");
      c /= d;
    }
    return r;
  }

  /// Exact division in Z[n]; throws if b does not divide *this.
  Polynomial divided_exactly(const Polynomial& b) const {
    if (b.is_zero()) throw std::domain_error("polynomial: division by zero");
    std::vector<BigInt> rem = coeffs_;
    if (degree() < b.degree()) {
      if (is_zero()) return {};
      throw std::logic_error("polynomial: inexact division");
    }
    std::vector<BigInt> q(static_cast<std::size_t>(degree() - b.degree() + 1), 0);
    for (int k = degree() - b.degree(); k >= 0; --k) {
      const BigInt& top = rem[static_cast<std::size_t>(k + b.degree())];
      if (top % b.leading() != 0) throw std::logic_error("polynomial: inexact division");
      BigInt f = top / b.leading();
      q[static_cast<std::size_t>(k)] = f;
      if (f != 0)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= f * b.coeffs_[j];
    }
    if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; }))
      throw std::logic_error("polynomial: inexact division");
    return Polynomial(std::move(q));
  }

  Polynomial primitive_part() const {
    if (is_zero()) return {};
    BigInt c = content();
    if (leading() < 0) c = -c;
    return divided_exactly(c);
  }

  /// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
  static Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
    std::vector<BigInt> r = a.coeffs_;
    const int db = b.degree();
    while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
      const int dr = static_cast<int>(r.size()) - 1;
      BigInt lr = r.back();
      for (auto& c : r) c *= b.leading();
      for (int j = 0; j <= db; ++j)
        r[static_cast<std::size_t>(dr - db + j)] -= lr * b.coeffs_[static_cast<std::size_t>(j)];
      while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return Polynomial(std::move(r));
  }

  /// Primitive gcd in Z[n] (content times primitive PRS), positive leading term.
  static Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.is_zero() ? Polynomial() : b.primitive_part() * Polynomial(b.content());
    if (b.is_zero()) return a.primitive_part() * Polynomial(a.content());
    BigInt c = boost::multiprecision::gcd(a.content(), b.content());
    Polynomial p = a.primitive_part(), q = b.primitive_part();
    if (p.degree() < q.degree()) std::swap(p, q);
    while (!q.is_zero()) {
      Polynomial r = pseudo_remainder(p, q);
      p = std::move(q);
      q = r.is_zero() ? r : r.primitive_part();
    }
    return p.primitive_part() * Polynomial(c);
  }

  BigRational evaluate(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + BigRational(*it);
    return acc;
  }

  /// Descending-degree text, e.g. "2n^3 - n + 4".
  std::string to_string(const std::string& var = "n") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      BigInt a = abs(c);
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      first = false;
      if (k == 0 || a != 1) os << a;
      if (k >= 1) os << var;
      if (k >= 2) os << '^' << k;
    }
    return os.str();
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  static BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

  std::vector<BigInt> coeffs_;
};

/// Element of Q(n) stored as num/den with num, den in Z[n] coprime, the
/// contents of num and den coprime, and lc(den) > 0. This form is unique.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}                 // NOLINT(google-explicit-constructor)
  RationalFunction(BigInt c) : num_(std::move(c)), den_(1) {}    // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }
  static RationalFunction from_rational(const BigRational& q) {
    return {Polynomial(numerator(q)), Polynomial(denominator(q))};
  }

  static RationalFunction n() { return RationalFunction(Polynomial::variable()); }
  static RationalFunction n_pow(int k) {
    if (k >= 0) return RationalFunction(Polynomial::monomial(1, static_cast<std::size_t>(k)));
    return RationalFunction(Polynomial(1), Polynomial::monomial(1, static_cast<std::size_t>(-k)));
  }

  const Polynomial& numerator_poly() const { return num_; }
  const Polynomial& denominator_poly() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  /// Exponent of the leading term n^e of the large-n expansion; nullopt for 0.
  std::optional<int> order() const {
    if (is_zero()) return std::nullopt;
    return num_.degree() - den_.degree();
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("rational function: division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  BigRational evaluate(const BigRational& x) const {
    BigRational d = den_.evaluate(x);
    if (d == 0) throw std::domain_error("rational function: pole at evaluation point");
    return num_.evaluate(x) / d;
  }
  double evaluate_double(long x) const { return static_cast<double>(evaluate(BigRational(x))); }

  /// "1/n", "n^2/(n^2 - 1)", "2".
  std::string to_string() const {
    auto wrap = [](const Polynomial& p) {
      bool bare = p.term_count() == 1 && (p.degree() == 0 || p.leading() == 1);
      return bare ? p.to_string() : "(" + p.to_string() + ")";
    };
    if (den_ == Polynomial(1)) return num_.to_string();
    std::string top = num_.term_count() == 1 ? num_.to_string() : "(" + num_.to_string() + ")";
    return top + "/" + wrap(den_);
  }

  /// "[c0,c1,...] / [d0,d1,...]", ascending degree.
  std::string serialize() const {
    auto list = [](const Polynomial& p) {
      std::string s = "[";
      for (std::size_t i = 0; i < p.coefficients().size(); ++i)
        s += (i ? "," : "") + p.coefficients()[i].str();
      return s + "]";
    };
    return list(num_) + " / " + list(den_);
  }

  static RationalFunction deserialize(const std::string& text) {
    auto slash = text.find(" / ");
    if (slash == std::string::npos) throw std::invalid_argument("rational function: missing ' / '");
    auto parse = [](std::string s) {
      s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '[' || c == ']' || c == ' '; }), s.end());
      std::vector<BigInt> v;
      std::stringstream ss(s);
      std::string tok;
      while (std::getline(ss, tok, ',')) v.emplace_back(tok);
      return Polynomial(std::move(v));
    };
    return {parse(text.substr(0, slash)), parse(text.substr(slash + 3))};
  }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  void canonicalize() {
    if (den_.is_zero()) throw std::domain_error("rational function: zero denominator");
    if (num_.is_zero()) {
      den_ = Polynomial(1);
      return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
      Polynomial gp = g.primitive_part();
      num_ = num_.divided_exactly(gp);
      den_ = den_.divided_exactly(gp);
    }
    BigInt c = boost::multiprecision::gcd(num_.content(), den_.content());
    if (den_.leading() < 0) c = -c;
    if (c != 1) {
      num_ = num_.divided_exactly(c);
      den_ = den_.divided_exactly(c);
    }
  }

  Polynomial num_;
  Polynomial den_;
};

/// Truncated expansion sum_{i=0}^{depth} coeffs[i] n^(leading - i).
struct LaurentSeries {
  bool zero = false;
  int leading_exponent = 0;
  std::vector<BigRational> coeffs;

  /// Coefficient of n^e, for e within the computed window; 0 above it.
  BigRational coefficient(int e) const {
    if (zero || e > leading_exponent) return 0;
    auto i = static_cast<std::size_t>(leading_exponent - e);
    if (i >= coeffs.size()) throw std::out_of_range("laurent: exponent below computed depth");
    return coeffs[i];
  }
  int lowest_exponent() const { return leading_exponent - static_cast<int>(coeffs.size()) + 1; }

  /// "(e0, [c0, c1, ...])"
  std::string serialize() const {
    if (zero) return "(zero, [])";
    std::string s = "(" + std::to_string(leading_exponent) + ", [";
    for (std::size_t i = 0; i < coeffs.size(); ++i) s += (i ? ", " : "") + coeffs[i].str();
    return s + "])";
  }

  std::string to_string() const {
    if (zero) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      int e = leading_exponent - static_cast<int>(i);
      const BigRational& c = coeffs[i];
      const bool negative = c < 0;
      const BigRational mag = negative ? BigRational(-c) : c;
      std::string term;
      if (e == 0)
        term = mag.str();
      else
        term = (mag == 1 ? std::string() : mag.str() + "*") + "n^" + std::to_string(e);
      if (s.empty())
        s = (negative ? "-" : "") + term;
      else
        s += (negative ? " - " : " + ") + term;
    }
    return (s.empty() ? "0" : s) + " + O(n^" + std::to_string(lowest_exponent() - 1) + ")";
  }
};

/// Expansion of f in powers of 1/n: `depth` further terms after the leading
/// one, by power-series division in m = 1/n.
inline LaurentSeries laurent(const RationalFunction& f, int depth) {
  LaurentSeries s;
  if (f.is_zero()) {
    s.zero = true;
    return s;
  }
  const auto& N = f.numerator_poly().coefficients();
  const auto& D = f.denominator_poly().coefficients();
  const int a = f.numerator_poly().degree(), b = f.denominator_poly().degree();
  s.leading_exponent = a - b;
  auto nt = [&](int i) { return i <= a ? BigRational(N[static_cast<std::size_t>(a - i)]) : BigRational(0); };
  auto dt = [&](int i) { return i <= b ? BigRational(D[static_cast<std::size_t>(b - i)]) : BigRational(0); };
  for (int i = 0; i <= depth; ++i) {
    BigRational acc = nt(i);
    for (int j = 1; j <= i; ++j) acc -= dt(j) * s.coeffs[static_cast<std::size_t>(i - j)];
    s.coeffs.push_back(acc / dt(0));
  }
  return s;
}

}  // namespace wml
