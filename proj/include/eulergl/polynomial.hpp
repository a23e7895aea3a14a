// Dense polynomials in the formal variable q over an exact coefficient type
// (Int or Rat).  Canonical form: no trailing zero coefficient, the zero
// polynomial is the empty sequence.

#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eulergl/base.hpp"

namespace eulergl {

template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c) { if (c != 0) coeffs_.emplace_back(c); }
  Polynomial(const T& c) { if (c != T(0)) coeffs_.push_back(c); }
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  /// The monomial q.
  static Polynomial variable() {
    Polynomial r;
    r.coeffs_ = {T(0), T(1)};
    return r;
  }

  static Polynomial monomial(const T& c, size_t k) {
    Polynomial r;
    if (c != T(0)) {
      r.coeffs_.assign(k + 1, T(0));
      r.coeffs_[k] = c;
    }
    return r;
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<T>& coefficients() const { return coeffs_; }

  T coeff(size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : T(0);
  }

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Polynomial r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.trim();
    return r;
  }

  Polynomial& scale(const T& c) {
    if (c == T(0)) { coeffs_.clear(); return *this; }
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  /// q -> q^k.
  Polynomial stretch(size_t k) const {
    if (k == 0) throw domain_error("Polynomial::stretch: k must be >= 1");
    Polynomial r;
    if (is_zero()) return r;
    r.coeffs_.assign((coeffs_.size() - 1) * k + 1, T(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i * k] = coeffs_[i];
    return r;
  }

  /// Horner evaluation at v; U must absorb the coefficient type exactly.
  template <class U>
  U evaluate(const U& v) const {
    U acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + U(coeffs_[i]);
    return acc;
  }

  /// Number of vanishing low-order coefficients (degree of the q-power
  /// dividing the polynomial).  Zero polynomial: 0 by convention.
  size_t trailing_zeros() const {
    size_t k = 0;
    while (k < coeffs_.size() && coeffs_[k] == T(0)) ++k;
    return coeffs_.empty() ? 0 : k;
  }

  /// Exact division by (q - c); empty when the division leaves a remainder.
  std::optional<Polynomial> div_linear_exact(const T& c) const {
    if (is_zero()) return Polynomial{};
    std::vector<T> quot(coeffs_.size() - 1, T(0));
    T rem(0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
      T cur = coeffs_[i] + rem * c;
      if (i == 0) {
        if (cur != T(0)) return std::nullopt;
      } else {
        quot[i - 1] = cur;
        rem = cur;
      }
    }
    return Polynomial(std::move(quot));
  }

  /// Exact division by q^k; empty if a low coefficient is nonzero.
  std::optional<Polynomial> div_qpow_exact(size_t k) const {
    if (is_zero()) return Polynomial{};
    if (trailing_zeros() < k) return std::nullopt;
    return Polynomial(std::vector<T>(coeffs_.begin() + k, coeffs_.end()));
  }

  /// Rendering in descending degree, e.g. "3q^2 + 1", "-q^3 - 2".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = coeffs_.size(); i-- > 0;) {
      const T& c = coeffs_[i];
      if (c == T(0)) continue;
      const bool neg = c < T(0);
      T mag = neg ? T(-c) : c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      const bool unit = (mag == T(1));
      if (!unit || i == 0) out += value_str(mag);
      if (i > 0) {
        if (!unit) out += "*";
        out += "q";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  static std::string value_str(const Int& v) { return v.get_str(); }
  static std::string value_str(const Rat& v) { return v.get_str(); }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using QPolynomial = Polynomial<Int>;
using QRatPolynomial = Polynomial<Rat>;

inline QRatPolynomial to_rational(const QPolynomial& p) {
  std::vector<Rat> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return QRatPolynomial(std::move(c));
}

/// Demote a rational polynomial known to have integer coefficients.
inline QPolynomial to_integral(const QRatPolynomial& p,
                               const char* what = "polynomial coefficient") {
  std::vector<Int> c;
  c.reserve(p.coefficients().size());
  for (size_t i = 0; i < p.coefficients().size(); ++i)
    c.push_back(to_integer_exact(p.coefficients()[i], what, (long)i));
  return QPolynomial(std::move(c));
}

/// Parse expanded integer polynomials in q as the tables print them:
/// "10q^6 - 3q^5 + 6q^4 - q^3 + 3q^2 + 1".  An optional '*' between the
/// coefficient and q is accepted.
inline QPolynomial parse_polynomial(std::string_view s) {
  std::vector<Int> coeffs;
  size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
  skip_ws();
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = (s[i] == '-') ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw domain_error("parse_polynomial: expected '+' or '-' in '" +
                         std::string(s) + "'");
    }
    first = false;
    std::string digits;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) digits += s[i++];
    skip_ws();
    if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
    Int coef = digits.empty() ? Int(1) : Int(digits, 10);
    size_t expo = 0;
    if (i < s.size() && s[i] == 'q') {
      ++i;
      expo = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) e += s[i++];
        if (e.empty()) throw domain_error("parse_polynomial: missing exponent");
        expo = std::stoul(e);
      }
    } else if (digits.empty()) {
      throw domain_error("parse_polynomial: bare sign in '" + std::string(s) +
                         "'");
    }
    if (coeffs.size() < expo + 1) coeffs.resize(expo + 1, Int(0));
    coeffs[expo] += sign * coef;
    skip_ws();
  }
  return QPolynomial(std::move(coeffs));
}

}  // namespace eulergl
