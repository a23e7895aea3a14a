// The A-transform on polynomial sequences and power series, the multiset
// family M_n it sums over, and the irreducible-polynomial counting
// sequences A(d)(q), Abar(d)(q) and A^p(d)(q) that drive it.

#pragma once

#include <functional>
#include <map>
#include <vector>

#include "eulergl/arith.hpp"
#include "eulergl/series.hpp"

namespace eulergl {

// ---------------------------------------------------------------------------
// Counting sequences.

/// A(d)(q) = (1/d) sum_{e|d} mu(d/e) q^e, the number of monic irreducible
/// degree-d polynomials over F_q.
inline Int count_irreducibles(unsigned long d, const Int& q) {
  if (d == 0) throw domain_error("count_irreducibles: d must be >= 1");
  Int s = 0;
  for (unsigned long e : divisors(d)) s += Int(moebius(d / e)) * pow_int(q, e);
  if (s % (long)d != 0)
    throw invariant_error("count_irreducibles: necklace sum not divisible", d);
  return s / (long)d;
}

inline QRatPolynomial count_irreducibles_formal(unsigned long d) {
  if (d == 0) throw domain_error("count_irreducibles: d must be >= 1");
  QRatPolynomial s;
  for (unsigned long e : divisors(d)) {
    Rat c(moebius(d / e), (long)d);
    c.canonicalize();
    s += QRatPolynomial::monomial(c, e);
  }
  return s;
}

/// Abar differs from A only at d = 1, where the polynomial t is excluded:
/// Abar(1)(q) = q - 1.
inline Int count_irreducibles_bar(unsigned long d, const Int& q) {
  Int a = count_irreducibles(d, q);
  return d == 1 ? a - 1 : a;
}

inline QRatPolynomial count_irreducibles_bar_formal(unsigned long d) {
  QRatPolynomial a = count_irreducibles_formal(d);
  return d == 1 ? a - QRatPolynomial(1) : a;
}

/// A^p(d)(q): monic irreducible degree-d polynomials over F_q whose root has
/// p-power multiplicative order.  For p | q the sequence is 1, 0, 0, ...
/// Otherwise A^p(d)(q) = (1/d) sum over n >= 0 with ord_{p^n} q = d of
/// phi(p^n); the sum terminates because the order is nondecreasing in n.
inline Int count_ppower_irreducibles(unsigned long d, unsigned p,
                                     const Int& q) {
  if (d == 0) throw domain_error("count_ppower_irreducibles: d must be >= 1");
  require_prime(Int(p), "count_ppower_irreducibles");
  if (q < 2) throw domain_error("count_ppower_irreducibles: q must be >= 2");
  if (q % p == 0) return d == 1 ? 1 : 0;
  Int total = 0;
  Int pn = 1;  // p^n
  for (unsigned long n = 0;; ++n) {
    Int o = (n == 0) ? Int(1) : ord_mod(pn, q);
    if (o > (long)d) break;
    if (o == (long)d)
      total += (n == 0) ? Int(1) : pn - pn / p;  // phi(p^n)
    pn *= p;
  }
  if (total % (long)d != 0)
    throw invariant_error("count_ppower_irreducibles: sum not divisible", d);
  return total / (long)d;
}

// ---------------------------------------------------------------------------
// Divisor-sum and Moebius transforms between exponent and log sequences.

/// b_n = (1/n) sum_{d|n} mu(n/d) a_d, exact rationals.
inline std::vector<Rat> moebius_b_from_a(const std::vector<Int>& a) {
  std::vector<Rat> b(a.size());
  for (size_t n = 1; n <= a.size(); ++n) {
    Int s = 0;
    for (size_t d = 1; d <= n; ++d)
      if (n % d == 0) s += Int(moebius(n / d)) * a[d - 1];
    b[n - 1] = Rat(s, Int((long)n));
    b[n - 1].canonicalize();
  }
  return b;
}

/// a_n = sum_{d|n} d b_d.
inline std::vector<Int> divisor_a_from_b(const std::vector<Int>& b) {
  std::vector<Int> a(b.size(), 0);
  for (size_t n = 1; n <= b.size(); ++n)
    for (size_t d = 1; d <= n; ++d)
      if (n % d == 0) a[n - 1] += Int((long)d) * b[d - 1];
  return a;
}

// ---------------------------------------------------------------------------
// The multiset family M_n.

/// One element of M_n: a multiset of (m, d) pairs with multiplicities e,
/// subject to sum e*m*d = n.  Entries are kept sorted by (m, d).
struct TypeMultiset {
  struct Entry {
    unsigned m, d, e;
    bool operator==(const Entry&) const = default;
  };
  std::vector<Entry> entries;
  bool operator==(const TypeMultiset&) const = default;

  unsigned weight() const {
    unsigned w = 0;
    for (const auto& en : entries) w += en.e * en.m * en.d;
    return w;
  }
};

/// All of M_n exactly once, in lexicographic order of the sorted
/// (m, d, e) entry sequences.
inline std::vector<TypeMultiset> enumerate_type_multisets(unsigned n) {
  if (n == 0) throw domain_error("enumerate_type_multisets: n must be >= 1");
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned m = 1; m <= n; ++m)
    for (unsigned d = 1; m * d <= n; ++d) pairs.emplace_back(m, d);
  std::vector<TypeMultiset> out;
  TypeMultiset cur;
  auto rec = [&](auto&& self, size_t idx, unsigned remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (size_t i = idx; i < pairs.size(); ++i) {
      unsigned w = pairs[i].first * pairs[i].second;
      if (w > remaining) continue;
      for (unsigned e = 1; e * w <= remaining; ++e) {
        cur.entries.push_back({pairs[i].first, pairs[i].second, e});
        self(self, i + 1, remaining - e * w);
        cur.entries.pop_back();
      }
    }
  };
  rec(rec, 0, n);
  return out;
}

/// |M_n|, computed both by enumeration and by the Euler factorization
/// prod 1/(1-x^k)^{tau(k)}; the two counts must agree.
inline Int multiset_count(unsigned n) {
  if (n == 0) throw domain_error("multiset_count: n must be >= 1");
  Int by_enum((long)enumerate_type_multisets(n).size());
  std::vector<Int> tau(n);
  for (unsigned k = 1; k <= n; ++k)
    tau[k - 1] = Int((long)divisors(k).size());
  Int by_product = product_from_exponents(tau, ProductSign::inverse)[n];
  if (by_enum != by_product)
    throw invariant_error("multiset_count: enumeration disagrees with the "
                          "Euler factorization at n=" + std::to_string(n), n);
  return by_enum;
}

// ---------------------------------------------------------------------------
// The A-transform.

/// Generalized multinomial with ring-valued upper argument:
/// binom(x; k_1..k_s) = x(x-1)...(x+1-sum k_i) / (k_1! ... k_s!).
/// F must admit exact division by integers (Rat or Polynomial<Rat>).
template <class F>
F multinomial(const F& upper, const std::vector<unsigned>& ks) {
  unsigned long total = 0;
  for (unsigned k : ks) total += k;
  F num(1);
  for (unsigned long i = 0; i < total; ++i) num = num * (upper - F((long)i));
  unsigned long den = 1;
  for (unsigned k : ks)
    for (unsigned long j = 2; j <= k; ++j) den *= j;
  ring_traits<F>::div_uint(num, den);
  return num;
}

/// T_A(a)(n) summed literally over M_n.  A_of(d) supplies A(d) and
/// a_eval(m, d) supplies a(m)(q^d), both in a ring F with exact integer
/// division.  The per-d multinomial takes the multiset of multiplicities
/// of the entries sharing that d.
template <class F>
F a_transform_direct(unsigned n, const std::function<F(unsigned)>& A_of,
                     const std::function<F(unsigned, unsigned)>& a_eval) {
  F total(0);
  for (const auto& lambda : enumerate_type_multisets(n)) {
    std::map<unsigned, std::vector<unsigned>> by_d;
    for (const auto& en : lambda.entries) by_d[en.d].push_back(en.e);
    F term(1);
    for (const auto& [d, es] : by_d) term = term * multinomial(A_of(d), es);
    for (const auto& en : lambda.entries) {
      F f = a_eval(en.m, en.d);
      for (unsigned i = 0; i < en.e; ++i) term = term * f;
    }
    total += term;
  }
  return total;
}

/// T_A(F)(q) = prod_{d>=1} (F(x^d)(q^d))^{A(d)(q)} at a numeric q.
/// F is given with polynomial coefficients so the q^d evaluations are
/// available; A_at_q lists A(d)(q) for d = 1..order.
inline IntSeries a_transform_product(const std::vector<Int>& A_at_q,
                                     const PolySeries& F, const Int& q) {
  const size_t N = F.order();
  if (A_at_q.size() < N)
    throw domain_error("a_transform_product: exponent sequence too short");
  if (!(F[0] == QPolynomial(1)))
    throw domain_error("a_transform_product: constant term must be 1");
  IntSeries acc = IntSeries::one(N);
  for (size_t d = 1; d <= N; ++d) {
    if (A_at_q[d - 1] == 0) continue;
    IntSeries factor = eval_q(F, pow_int(q, d)).stretch_x(d);
    acc *= factor.pow(A_at_q[d - 1]);
  }
  return acc;
}

/// Same product with formal q: exponents are polynomials, so the powers go
/// through exact weighted logs, A_d(q) * log F(x^d)(q^d), and one exp at the
/// end.  The result must land in integer polynomials.
inline PolySeries a_transform_product_formal(
    const std::vector<QRatPolynomial>& A_formal, const PolySeries& F) {
  const size_t N = F.order();
  if (A_formal.size() < N)
    throw domain_error("a_transform_product_formal: exponent sequence too short");
  if (!(F[0] == QPolynomial(1)))
    throw domain_error("a_transform_product_formal: constant term must be 1");
  std::vector<QRatPolynomial> total(N);
  for (size_t d = 1; d <= N; ++d) {
    if (A_formal[d - 1].is_zero()) continue;
    // log of F(x)(q^d) as a weighted sequence; x -> x^d sends the weight
    // a_k to position kd with a factor d
    auto base = log_weighted(to_rational(stretch_q(F, d)));
    for (size_t k = 1; k * d <= N; ++k) {
      QRatPolynomial w = base[k - 1];
      w.scale(Rat((long)d));
      total[k * d - 1] += A_formal[d - 1] * w;
    }
  }
  auto expd = exp_weighted_fraction(total);
  PolySeries out(N);
  for (size_t n = 0; n <= N; ++n) {
    auto v = ring_traits<QPolynomial>::from_fraction(expd[n]);
    if (!v)
      throw invariant_error(
          "a_transform_product_formal: coefficient of x^" + std::to_string(n) +
              " is not an integer polynomial: " + expd[n].to_string(),
          (long)n);
    out.at(n) = *v;
  }
  return out;
}

}  // namespace eulergl
