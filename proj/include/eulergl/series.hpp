// Truncated power series in x over a selectable exact coefficient ring:
// Int, Rat, Polynomial<Int> or Polynomial<Rat>.  A series of order N stores
// the coefficients of x^0..x^N; every operation truncates to the smaller
// order of its operands.  exp and log go through the weighted-coefficient
// recursion n*c_n = sum_{j<=n} a_j c_{n-j}, never through floating point.

#pragma once

#include <optional>
#include <vector>

#include "eulergl/base.hpp"
#include "eulergl/polynomial.hpp"

namespace eulergl {

template <class R>
struct ring_traits;

template <>
struct ring_traits<Int> {
  using fraction_type = Rat;
  static constexpr const char* name = "Integer";
  static Rat to_fraction(const Int& v) { return Rat(v); }
  static std::optional<Int> from_fraction(const Rat& v) {
    if (!is_integer(v)) return std::nullopt;
    return v.get_num();
  }
  static std::optional<Int> invert(const Int& v) {
    if (v == 1 || v == -1) return v;
    return std::nullopt;
  }
  static std::string to_string(const Int& v) { return v.get_str(); }
};

template <>
struct ring_traits<Rat> {
  using fraction_type = Rat;
  static constexpr const char* name = "Rational";
  static Rat to_fraction(const Rat& v) { return v; }
  static std::optional<Rat> from_fraction(const Rat& v) { return v; }
  static std::optional<Rat> invert(const Rat& v) {
    if (v == 0) return std::nullopt;
    return Rat(1) / v;
  }
  static void div_uint(Rat& v, unsigned long n) { v /= (long)n; }
  static std::string to_string(const Rat& v) { return v.get_str(); }
};

template <>
struct ring_traits<Polynomial<Int>> {
  using fraction_type = Polynomial<Rat>;
  static constexpr const char* name = "IntegerPolynomial";
  static Polynomial<Rat> to_fraction(const Polynomial<Int>& v) {
    return to_rational(v);
  }
  static std::optional<Polynomial<Int>> from_fraction(const Polynomial<Rat>& v) {
    for (const auto& c : v.coefficients())
      if (!is_integer(c)) return std::nullopt;
    std::vector<Int> out;
    out.reserve(v.coefficients().size());
    for (const auto& c : v.coefficients()) out.push_back(c.get_num());
    return Polynomial<Int>(std::move(out));
  }
  static std::optional<Polynomial<Int>> invert(const Polynomial<Int>& v) {
    if (v.degree() != 0) return std::nullopt;
    if (v.coeff(0) == 1 || v.coeff(0) == -1) return v;
    return std::nullopt;
  }
  static std::string to_string(const Polynomial<Int>& v) { return v.to_string(); }
};

template <>
struct ring_traits<Polynomial<Rat>> {
  using fraction_type = Polynomial<Rat>;
  static constexpr const char* name = "RationalPolynomial";
  static Polynomial<Rat> to_fraction(const Polynomial<Rat>& v) { return v; }
  static std::optional<Polynomial<Rat>> from_fraction(const Polynomial<Rat>& v) {
    return v;
  }
  static std::optional<Polynomial<Rat>> invert(const Polynomial<Rat>& v) {
    if (v.degree() != 0) return std::nullopt;
    return Polynomial<Rat>(Rat(1) / v.coeff(0));
  }
  static void div_uint(Polynomial<Rat>& v, unsigned long n) {
    std::vector<Rat> c = v.coefficients();
    for (auto& x : c) x /= (long)n;
    v = Polynomial<Rat>(std::move(c));
  }
  static std::string to_string(const Polynomial<Rat>& v) { return v.to_string(); }
};

template <class R>
using fraction_t = typename ring_traits<R>::fraction_type;

template <class R>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(size_t order) : c_(order + 1, R(0)) {}
  explicit TruncatedSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw domain_error("TruncatedSeries: empty coefficients");
  }

  static TruncatedSeries one(size_t order) {
    TruncatedSeries s(order);
    s.c_[0] = R(1);
    return s;
  }

  /// 1 - x^k, truncated at `order`.
  static TruncatedSeries one_minus_xk(size_t order, size_t k) {
    TruncatedSeries s = one(order);
    if (k == 0) throw domain_error("one_minus_xk: k must be >= 1");
    if (k <= order) s.c_[k] = R(-1);
    return s;
  }

  size_t order() const { return c_.size() - 1; }
  const R& operator[](size_t n) const { return c_[n]; }
  R& at(size_t n) { return c_[n]; }
  const std::vector<R>& coefficients() const { return c_; }

  bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

  TruncatedSeries truncated(size_t order) const {
    if (order >= this->order()) {
      TruncatedSeries s = *this;
      s.c_.resize(order + 1, R(0));
      return s;
    }
    return TruncatedSeries(std::vector<R>(c_.begin(), c_.begin() + order + 1));
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    size_t n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (size_t i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    size_t n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (size_t i = 0; i <= n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  /// Cauchy product truncated at the smaller order.
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    size_t n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (size_t i = 0; i <= n; ++i) {
      if (a.c_[i] == R(0)) continue;
      for (size_t j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  TruncatedSeries& operator*=(const TruncatedSeries& o) {
    *this = *this * o;
    return *this;
  }

  /// Multiplicative inverse; the constant term must be a unit of the ring.
  TruncatedSeries inverse() const {
    auto u = ring_traits<R>::invert(c_[0]);
    if (!u)
      throw domain_error(std::string("series inverse: constant term is not a "
                                     "unit in ") + ring_traits<R>::name);
    TruncatedSeries r(order());
    r.c_[0] = *u;
    for (size_t n = 1; n <= order(); ++n) {
      R s(0);
      for (size_t j = 1; j <= n; ++j) s += c_[j] * r.c_[n - j];
      r.c_[n] = -(*u * s);
    }
    return r;
  }

  /// Integer power, binary; negative exponents require a unit constant term.
  TruncatedSeries pow(const Int& e) const {
    if (e < 0) return inverse().pow(-e);
    TruncatedSeries base = *this;
    TruncatedSeries acc = one(order());
    Int k = e;
    while (k != 0) {
      if (mpz_odd_p(k.get_mpz_t())) acc *= base;
      k /= 2;
      if (k != 0) base *= base;
    }
    return acc;
  }

  /// x -> x^d, by default at unchanged truncation order.  A larger target
  /// order is legal when the source reaches floor(target/d): the image is
  /// supported on multiples of d, so the gap coefficients are exact zeros.
  TruncatedSeries stretch_x(size_t d,
                            std::optional<size_t> target = std::nullopt) const {
    if (d == 0) throw domain_error("stretch_x: d must be >= 1");
    size_t ord = target.value_or(order());
    if (order() < ord / d)
      throw domain_error("stretch_x: source order too small for the target");
    TruncatedSeries r(ord);
    for (size_t i = 0; i * d <= ord; ++i) r.c_[i * d] = c_[i];
    return r;
  }

  /// x -> c*x, i.e. the coefficient of x^n picks up a factor c^n.
  TruncatedSeries scale_x(const R& c) const {
    TruncatedSeries r = *this;
    R f(1);
    for (size_t i = 1; i <= order(); ++i) {
      f = f * c;
      r.c_[i] = r.c_[i] * f;
    }
    return r;
  }

  template <class F>
  auto map_coeffs(F&& f) const -> TruncatedSeries<decltype(f(R(0)))> {
    std::vector<decltype(f(R(0)))> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(f(v));
    return TruncatedSeries<decltype(f(R(0)))>(std::move(out));
  }

 private:
  std::vector<R> c_;
};

using IntSeries = TruncatedSeries<Int>;
using RatSeries = TruncatedSeries<Rat>;
using PolySeries = TruncatedSeries<Polynomial<Int>>;
using RatPolySeries = TruncatedSeries<Polynomial<Rat>>;

/// q -> q^k applied to every coefficient.
template <class T>
TruncatedSeries<Polynomial<T>> stretch_q(const TruncatedSeries<Polynomial<T>>& s,
                                         size_t k) {
  return s.map_coeffs([k](const Polynomial<T>& p) { return p.stretch(k); });
}

/// Evaluate every polynomial coefficient at v.
inline IntSeries eval_q(const PolySeries& s, const Int& v) {
  return s.map_coeffs([&v](const QPolynomial& p) { return p.evaluate(v); });
}

/// The combined substitution x -> x^d, q -> q^d of the transform product.
inline PolySeries substitute(const PolySeries& s, size_t d) {
  return stretch_q(s, d).stretch_x(d);
}

inline RatSeries to_rational(const IntSeries& s) {
  return s.map_coeffs([](const Int& v) { return Rat(v); });
}

inline RatPolySeries to_rational(const PolySeries& s) {
  return s.map_coeffs([](const QPolynomial& p) { return to_rational(p); });
}

/// exp(sum_{n>=1} a_n x^n / n) over the fraction field of R, via the
/// recursion n*c_n = sum_{1<=j<=n} a_j c_{n-j}, c_0 = 1.  a[i] carries
/// a_{i+1}; the result order is a.size().
template <class R>
TruncatedSeries<fraction_t<R>> exp_weighted_fraction(const std::vector<R>& a) {
  using F = fraction_t<R>;
  const size_t N = a.size();
  TruncatedSeries<F> c(N);
  c.at(0) = F(1);
  for (size_t n = 1; n <= N; ++n) {
    F s(0);
    for (size_t j = 1; j <= n; ++j)
      s += ring_traits<R>::to_fraction(a[j - 1]) * c[n - j];
    ring_traits<F>::div_uint(s, n);
    c.at(n) = s;
  }
  return c;
}

/// Same recursion with every c_n asserted to land back in R.  A fractional
/// coefficient raises invariant_error carrying the offending index.
template <class R>
TruncatedSeries<R> exp_weighted(const std::vector<R>& a) {
  auto c = exp_weighted_fraction(a);
  TruncatedSeries<R> out(a.size());
  for (size_t n = 0; n <= a.size(); ++n) {
    auto v = ring_traits<R>::from_fraction(c[n]);
    if (!v)
      throw invariant_error("exp_weighted: coefficient of x^" +
                                std::to_string(n) + " is not integral: " +
                                ring_traits<fraction_t<R>>::to_string(c[n]),
                            (long)n);
    out.at(n) = *v;
  }
  return out;
}

/// Inverse of exp_weighted: the unique a with exp(sum a_n x^n/n) = C.
/// Exact in any ring (no division): a_n = n*c_n - sum_{j<n} a_j c_{n-j}.
/// Requires constant term 1.
template <class R>
std::vector<R> log_weighted(const TruncatedSeries<R>& c) {
  if (!(c[0] == R(1)))
    throw domain_error("log_weighted: constant term must be 1");
  const size_t N = c.order();
  std::vector<R> a(N, R(0));
  for (size_t n = 1; n <= N; ++n) {
    R s(0);
    for (size_t j = 1; j < n; ++j) s += a[j - 1] * c[n - j];
    a[n - 1] = c[n] * R((long)n) - s;
  }
  return a;
}

enum class ProductSign { inverse, direct };

/// prod_{n>=1} (1-x^n)^{-b_n} (inverse) or prod (1-x^n)^{b_n} (direct),
/// through a_n = sum_{d|n} d b_d feeding the exp recursion.  Integer b
/// always yields integer coefficients; this is asserted.
inline IntSeries product_from_exponents(const std::vector<Int>& b,
                                        ProductSign sign) {
  const size_t N = b.size();
  std::vector<Int> a(N, 0);
  for (size_t n = 1; n <= N; ++n) {
    Int s = 0;
    for (size_t d = 1; d <= n; ++d)
      if (n % d == 0) s += Int((long)d) * b[d - 1];
    a[n - 1] = (sign == ProductSign::inverse) ? s : -s;
  }
  return exp_weighted(a);
}

}  // namespace eulergl
