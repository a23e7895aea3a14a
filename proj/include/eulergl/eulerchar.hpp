// The main objects: the generating functions F_r(x) over Z[q], their
// numeric evaluations F_r(x)(q), the p-primary family F^p_r(x)(q), the
// coefficient recursion, the infinite-product exponents b_r(q)(n), and the
// helper series Q_p, G^p_r and P_p.
//
// Conventions: chi_r(0, q) = 1, and the x^1 coefficient of every family is
// -(q-1)^{r-1} (or its p-part).

#pragma once

#include <map>
#include <optional>

#include "eulergl/transforms.hpp"

namespace eulergl {

/// F_r(x) over Z[q] to order N, by iterating F_{k+1} = F_k(qx) / F_k(x)
/// from F_1 = 1 - x.  The quotient is computed inside integer-polynomial
/// series; the constant term 1 keeps the inversion division-free.
inline PolySeries genfun_poly(unsigned r, size_t N) {
  if (r == 0) throw domain_error("genfun_poly: r must be >= 1");
  PolySeries F = PolySeries::one_minus_xk(N, 1);
  for (unsigned k = 1; k < r; ++k)
    F = F.scale_x(QPolynomial::variable()) * F.inverse();
  return F;
}

/// chi_r(n, q) as an integer polynomial in q.
inline QPolynomial chi_poly(unsigned r, unsigned n) {
  if (r == 0 || n == 0) throw domain_error("chi_poly: r, n must be >= 1");
  return genfun_poly(r, n)[n];
}

inline void require_q(const Int& q) {
  if (q > -2 && q < 2)
    throw domain_error("q must satisfy |q| >= 2, got " + to_decimal(q));
}

/// F_r(x)(q) = exp(-sum (q^n-1)^{r-1} x^n / n), integrality asserted.
inline IntSeries genfun_at(unsigned r, const Int& q, size_t N) {
  if (r == 0) throw domain_error("genfun_at: r must be >= 1");
  require_q(q);
  std::vector<Int> a(N);
  for (size_t n = 1; n <= N; ++n)
    a[n - 1] = -pow_int(pow_int(q, n) - 1, r - 1);
  return exp_weighted(a);
}

/// chi_r(n, q) by the bare coefficient recursion
/// chi_r(n) = -(1/n) sum_{j=1..n} (q^j-1)^{r-1} chi_r(n-j), chi_r(0) = 1,
/// with every division checked exact.
inline Int chi_recursive_at(unsigned r, unsigned n, const Int& q) {
  if (r == 0 || n == 0)
    throw domain_error("chi_recursive_at: r, n must be >= 1");
  require_q(q);
  std::vector<Int> chi(n + 1);
  chi[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Int s = 0;
    for (unsigned j = 1; j <= m; ++j)
      s += pow_int(pow_int(q, j) - 1, r - 1) * chi[m - j];
    if (s % (long)m != 0)
      throw invariant_error("chi_recursive_at: non-integer step at n=" +
                                std::to_string(m), m);
    chi[m] = -s / (long)m;
  }
  return chi[n];
}

/// F^p_r(x)(q) = exp(-sum ((q^n-1)_p)^{r-1} x^n / n).  Negative q is
/// admitted here (and only here) for the 2-adic representatives -3^{2^e};
/// for p | q the p-parts collapse and the series is 1 - x.
inline IntSeries p_genfun_at(unsigned r, unsigned p, const Int& q, size_t N) {
  if (r == 0) throw domain_error("p_genfun_at: r must be >= 1");
  require_prime(Int(p), "p_genfun_at");
  require_q(q);
  std::vector<Int> a(N);
  for (size_t n = 1; n <= N; ++n)
    a[n - 1] = -pow_int(p_part(p, pow_int(q, n) - 1), r - 1);
  return exp_weighted(a);
}

/// chi^p_r(n, q), the x^n coefficient of p_genfun_at.
inline Int p_chi_at(unsigned r, unsigned p, const Int& q, unsigned n) {
  if (n == 0) throw domain_error("p_chi_at: n must be >= 1");
  return p_genfun_at(r, p, q, n)[n];
}

/// F^p_r(x)(q) built from the transform recursion
///   F^p_{r+1}(x)(q) = prod_{d>=1} (F^p_r(x^d)(q^d))^{A^p(d)(q)}
/// instead of the closed form; the two must agree.  Needs q >= 2 since the
/// recursion evaluates A^p at the actual prime powers q^d.
inline IntSeries p_genfun_recursive(unsigned r, unsigned p, const Int& q,
                                    size_t N) {
  if (r == 0) throw domain_error("p_genfun_recursive: r must be >= 1");
  require_prime(Int(p), "p_genfun_recursive");
  if (q < 2) throw domain_error("p_genfun_recursive: q must be >= 2");
  if (!is_prime_power(q))
    throw domain_error("p_genfun_recursive: q must be a prime power");
  // memo[(level, j)] = F^p_level at q^j, on orders that only shrink with j
  std::map<std::pair<unsigned, unsigned long>, IntSeries> memo;
  auto get = [&](auto&& self, unsigned level, unsigned long j,
                 size_t ord) -> IntSeries {
    auto it = memo.find({level, j});
    if (it != memo.end() && it->second.order() >= ord)
      return it->second.truncated(ord);
    IntSeries F = IntSeries::one_minus_xk(ord, 1);
    if (level > 1) {
      F = IntSeries::one(ord);
      Int qj = pow_int(q, j);
      for (size_t d = 1; d <= std::max<size_t>(ord, 1); ++d) {
        Int Ad = count_ppower_irreducibles(d, p, qj);
        if (Ad == 0) continue;
        IntSeries sub =
            self(self, level - 1, j * d, ord / d).stretch_x(d, ord);
        F *= sub.pow(Ad);
      }
    }
    memo.insert_or_assign({level, j}, F);
    return F;
  };
  return get(get, r, 1, N);
}

/// b_r(q)(n) = (1/n) sum_{d|n} mu(n/d) (q^d-1)^{r-1}, or the p-part
/// variant; integrality asserted.  product_from_exponents(b, direct)
/// reproduces the generating function.
inline std::vector<Int> b_exponents(unsigned r, const Int& q, size_t N,
                                    std::optional<unsigned> p = std::nullopt) {
  if (r == 0) throw domain_error("b_exponents: r must be >= 1");
  require_q(q);
  std::vector<Int> a(N);
  for (size_t n = 1; n <= N; ++n) {
    Int base = pow_int(q, n) - 1;
    if (p) base = p_part(*p, base);
    a[n - 1] = pow_int(base, r - 1);
  }
  std::vector<Int> b(N);
  auto rb = moebius_b_from_a(a);
  for (size_t n = 0; n < N; ++n)
    b[n] = to_integer_exact(rb[n], "b_exponents coefficient", (long)(n + 1));
  return b;
}

/// Q_p(x) = (1-x)^p / (1-x^p).
inline IntSeries qp_series(unsigned p, size_t N) {
  require_prime(Int(p), "qp_series");
  return IntSeries::one_minus_xk(N, 1).pow((long)p) *
         IntSeries::one_minus_xk(N, p).inverse();
}

/// G^p_r(x) = exp(-sum (pn)_p^{r-1} x^n / n).
inline IntSeries gp_series(unsigned p, unsigned r, size_t N) {
  require_prime(Int(p), "gp_series");
  if (r == 0) throw domain_error("gp_series: r must be >= 1");
  std::vector<Int> a(N);
  for (size_t n = 1; n <= N; ++n)
    a[n - 1] = -pow_int(p_part(p, Int((long)(p * n))), r - 1);
  return exp_weighted(a);
}

/// P_p(x) = prod_{k>=0} (1 - x^{p^k})^{-1}, the generating function for
/// partitions into powers of p.
inline IntSeries pp_partition_series(unsigned p, size_t N) {
  require_prime(Int(p), "pp_partition_series");
  IntSeries acc = IntSeries::one(N);
  for (size_t pk = 1; pk <= N; pk *= p)
    acc *= IntSeries::one_minus_xk(N, pk).inverse();
  return acc;
}

/// Smallest prime g whose class generates the units mod p^2 (then it
/// generates mod p^n for every n).
inline unsigned find_primitive_root(unsigned p) {
  require_prime(Int(p), "find_primitive_root");
  if (p == 2) throw domain_error("find_primitive_root: p must be odd");
  Int p2 = Int(p) * p;
  Int target = Int(p) * (p - 1);  // phi(p^2)
  for (Int g = 2;; ++g) {
    if (!is_prime(g)) continue;
    if (g % p == 0) continue;
    if (ord_mod(p2, g) == target) return (unsigned)g.get_ui();
  }
}

}  // namespace eulergl
