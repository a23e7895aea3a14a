// Named identity catalog: every displayed relation between the generating
// functions, checked exactly on truncated series.  Each identity expands a
// default parameter grid (narrowable through IdentityParams) and yields one
// report per grid point, carrying the first failing coefficient when a
// check fails.

#pragma once

#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eulergl/eulerchar.hpp"

namespace eulergl {

struct IdentityParams {
  std::optional<unsigned> r;
  std::optional<Int> q;
  std::optional<unsigned> p;
  std::optional<unsigned> e;
  std::optional<unsigned> s;
  std::optional<size_t> order;
  std::optional<unsigned long> seed;
};

struct IdentityReport {
  std::string id;
  std::string params;
  bool pass = true;
  long first_fail_index = -1;
  std::string lhs = {};  // offending values when a coefficient differs
  std::string rhs = {};

  std::string to_string() const {
    std::string line = (pass ? "pass " : "FAIL ") + id;
    if (!params.empty()) line += " [" + params + "]";
    if (!pass) {
      line += " first failing index " + std::to_string(first_fail_index);
      line += ": lhs=" + lhs + " rhs=" + rhs;
    }
    return line;
  }
};

namespace detail {

template <class R>
void check_series_equal(IdentityReport& rep, const TruncatedSeries<R>& lhs,
                        const TruncatedSeries<R>& rhs) {
  if (!rep.pass) return;
  size_t n = std::min(lhs.order(), rhs.order());
  for (size_t i = 0; i <= n; ++i)
    if (!(lhs[i] == rhs[i])) {
      rep.pass = false;
      rep.first_fail_index = (long)i;
      rep.lhs = ring_traits<R>::to_string(lhs[i]);
      rep.rhs = ring_traits<R>::to_string(rhs[i]);
      return;
    }
}

inline void check_value(IdentityReport& rep, long index, const Int& lhs,
                        const Int& rhs) {
  if (!rep.pass) return;
  if (lhs != rhs) {
    rep.pass = false;
    rep.first_fail_index = index;
    rep.lhs = to_decimal(lhs);
    rep.rhs = to_decimal(rhs);
  }
}

/// Every coefficient of x^1.. must be divisible by d.
inline void check_divisibility(IdentityReport& rep, const IntSeries& s,
                               const Int& d) {
  if (!rep.pass) return;
  for (size_t n = 1; n <= s.order(); ++n)
    if (s[n] % d != 0) {
      rep.pass = false;
      rep.first_fail_index = (long)n;
      rep.lhs = to_decimal(s[n]);
      rep.rhs = "0 mod " + to_decimal(d);
      return;
    }
}

inline IntSeries one_plus_x(size_t N) {
  IntSeries s = IntSeries::one(N);
  if (N >= 1) s.at(1) = 1;
  return s;
}

template <class... Ts>
std::string param_str(Ts&&... kv) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const auto& pair) {
    if (!first) os << " ";
    first = false;
    os << pair.first << "=" << pair.second;
  };
  (emit(kv), ...);
  return os.str();
}

template <class T>
std::vector<T> grid(const std::optional<T>& chosen, std::vector<T> def) {
  if (chosen) return {*chosen};
  return def;
}

}  // namespace detail

// --- individual identities --------------------------------------------------

/// F_{r+1}(x) F_r(x) = F_r(qx) over Z[q].
inline std::vector<IdentityReport> identity_thm_recursion(
    const IdentityParams& P) {
  std::vector<IdentityReport> out;
  size_t N = P.order.value_or(12);
  for (unsigned r : detail::grid(P.r, {1, 2, 3, 4, 5, 6})) {
    IdentityReport rep{"thm_recursion",
                       detail::param_str(std::pair("r", r), std::pair("N", N))};
    PolySeries Fr = genfun_poly(r, N);
    PolySeries Fr1 = genfun_poly(r + 1, N);
    detail::check_series_equal(rep, Fr1 * Fr,
                               Fr.scale_x(QPolynomial::variable()));
    out.push_back(std::move(rep));
  }
  return out;
}

/// F_{r+1} = T_Abar(F_r), through the literal multiset sum and through the
/// Euler-product form, both at numeric q.
inline std::vector<IdentityReport> identity_transform_equiv(
    const IdentityParams& P) {
  std::vector<IdentityReport> out;
  size_t N = P.order.value_or(8);
  for (unsigned r : detail::grid(P.r, {1, 2, 3}))
    for (Int q : detail::grid(P.q, {Int(2), Int(3), Int(4), Int(5)})) {
      IdentityReport rep{"transform_equiv",
                         detail::param_str(std::pair("r", r),
                                           std::pair("q", to_decimal(q)),
                                           std::pair("N", N))};
      PolySeries Fr = genfun_poly(r, N);
      PolySeries Fr1 = genfun_poly(r + 1, N);
      // route 1: Definition of the transform as a sum over M_n
      for (unsigned n = 1; n <= N && rep.pass; ++n) {
        Rat direct = a_transform_direct<Rat>(
            n,
            [&](unsigned d) {
              return Rat(count_irreducibles_bar(d, q));
            },
            [&](unsigned m, unsigned d) {
              return Rat(Fr[m].evaluate(pow_int(q, d)));
            });
        detail::check_value(rep, (long)n,
                            to_integer_exact(direct, "transform value", n),
                            Fr1[n].evaluate(q));
      }
      // route 2: the Euler-product identity
      std::vector<Int> Abar(N);
      for (size_t d = 1; d <= N; ++d)
        Abar[d - 1] = count_irreducibles_bar(d, q);
      detail::check_series_equal(rep, a_transform_product(Abar, Fr, q),
                                 eval_q(Fr1, q));
      out.push_back(std::move(rep));
    }
  return out;
}

/// (q-1)^{r-1} divides every coefficient of F_r(x) - 1.
inline std::vector<IdentityReport> identity_div_qm1(const IdentityParams& P) {
  std::vector<IdentityReport> out;
  size_t N = P.order.value_or(12);
  for (unsigned r : detail::grid(P.r, {1, 2, 3, 4, 5, 6})) {
    IdentityReport rep{"div_qm1",
                       detail::param_str(std::pair("r", r), std::pair("N", N))};
    PolySeries F = genfun_poly(r, N);
    for (size_t n = 1; n <= N && rep.pass; ++n) {
      QPolynomial c = F[n];
      for (unsigned k = 0; k + 1 < r && rep.pass; ++k) {
        auto d = c.div_linear_exact(Int(1));
        if (!d) {
          rep.pass = false;
          rep.first_fail_index = (long)n;
          rep.lhs = F[n].to_string();
          rep.rhs = "divisible by (q-1)^" + std::to_string(r - 1);
        } else {
          c = *d;
        }
      }
    }
    out.push_back(std::move(rep));
  }
  return out;
}

/// q^{n-1} divides chi_r(n, q) for odd r.
inline std::vector<IdentityReport> identity_div_qpow(const IdentityParams& P) {
  std::vector<IdentityReport> out;
  size_t N = P.order.value_or(12);
  for (unsigned r : detail::grid(P.r, {1, 3, 5, 7})) {
    IdentityReport rep{"div_qpow",
                       detail::param_str(std::pair("r", r), std::pair("N", N))};
    if (r % 2 == 0) throw domain_error("div_qpow: r must be odd");
    PolySeries F = genfun_poly(r, N);
    for (size_t n = 1; n <= N && rep.pass; ++n)
      if (!F[n].is_zero() && F[n].trailing_zeros() < n - 1) {
        rep.pass = false;
        rep.first_fail_index = (long)n;
        rep.lhs = F[n].to_string();
        rep.rhs = "divisible by q^" + std::to_string(n - 1);
      }
    out.push_back(std::move(rep));
  }
  return out;
}

namespace detail {

/// The closed-form weighted exponent ((q^n-1)_2 via the lifted-exponent
/// case analysis) for q = +-3^{2^e}.
inline Int p2_closed_weight(bool negative, unsigned e, unsigned long n) {
  Int four_n2 = pow_int(Int(2), e + 2) * p_part(2, Int((long)n));
  if (!negative && e == 0) return n % 2 ? Int(2) : four_n2;   // q = 3
  if (!negative) return four_n2;                              // q = 3^{2^e}
  if (e == 0) return four_n2;                                 // q = -3
  return n % 2 ? Int(2) : four_n2;                            // q = -3^{2^e}
}

}  // namespace detail

/// The four closed 2-primary families against the exponential formula.
inline std::vector<IdentityReport> identity_p_closed_2(
    const IdentityParams& P) {
  std::vector<IdentityReport> out;
  size_t N = P.order.value_or(16);
  for (unsigned r : detail::grid(P.r, {1, 2, 3, 4}))
    for (Int q : detail::grid(P.q, {Int(3), Int(9), Int(81), Int(-3), Int(-9),
                                    Int(-81)})) {
      IdentityReport rep{"p_closed_2",
                         detail::param_str(std::pair("r", r),
                                           std::pair("q", to_decimal(q)),
                                           std::pair("N", N))};
      bool negative = q < 0;
      Int aq = negative ? -q : q;
      unsigned e = 0;
      while (aq > 3) {  // q = +-3^{2^e}; each sqrt strips one doubling
        mpz_sqrt(aq.get_mpz_t(), aq.get_mpz_t());
        ++e;
      }
      if (aq != 3)
        throw domain_error("p_closed_2: q must be +-3^{2^e}");
      std::vector<Int> a(N);
      for (size_t n = 1; n <= N; ++n)
        a[n - 1] = -pow_int(detail::p2_closed_weight(negative, e, n), r - 1);
      detail::check_series_equal(rep, exp_weighted(a), p_genfun_at(r, 2, q, N));
      out.push_back(std::move(rep));
    }
  return out;
}

/// The three relations expressing every 2-primary family through the one
/// at q = -3.
inline std::vector<IdentityReport> identity_p_cor_frp2(
    const IdentityParams& P) {
  std::vector<IdentityReport> out;
  size_t N = P.order.value_or(16);
  for (unsigned r : detail::grid(P.r, {2, 3, 4})) {
    Int two_rm2 = pow_int(Int(2), r - 2);
    IntSeries Fm3 = p_genfun_at(r, 2, -3, N);
    IntSeries Fm3_x2 = Fm3.stretch_x(2);
    IntSeries omx = IntSeries::one_minus_xk(N, 1);
    {
      IdentityReport rep{"p_cor_frp2",
                         detail::param_str(std::pair("r", r),
                                           std::pair("rel", "q=3"),
                                           std::pair("N", N))};
      detail::check_series_equal(
          rep, detail::one_plus_x(N).pow(two_rm2) * p_genfun_at(r, 2, 3, N),
          (omx * Fm3_x2).pow(two_rm2));
      out.push_back(std::move(rep));
    }
    for (unsigned e : detail::grid(P.e, {1, 2})) {
      Int lift = pow_int(Int(2), (unsigned long)e * (r - 1));
      Int q3e = pow_int(Int(3), 1ul << e);
      {
        IdentityReport rep{"p_cor_frp2",
                           detail::param_str(std::pair("r", r),
                                             std::pair("rel", "q=3^{2^e}"),
                                             std::pair("e", e),
                                             std::pair("N", N))};
        detail::check_series_equal(rep, p_genfun_at(r, 2, q3e, N),
                                   Fm3.pow(lift));
        out.push_back(std::move(rep));
      }
      {
        IdentityReport rep{"p_cor_frp2",
                           detail::param_str(std::pair("r", r),
                                             std::pair("rel", "q=-3^{2^e}"),
                                             std::pair("e", e),
                                             std::pair("N", N))};
        detail::check_series_equal(
            rep,
            detail::one_plus_x(N).pow(two_rm2) * p_genfun_at(r, 2, -q3e, N),
            (omx * Fm3_x2.pow(lift)).pow(two_rm2));
        out.push_back(std::move(rep));
      }
    }
  }
  return out;
}

/// 2-power divisibility of the 2-primary coefficients, with the witness
/// divisor recorded in the parameter string.
inline std::vector<IdentityReport> identity_p_div_2(const IdentityParams& P) {
  std::vector<IdentityReport> out;
  size_t N = P.order.value_or(16);
  struct Family { Int q; unsigned e; };
  std::vector<Family> families = {{Int(3), 0},  {Int(9), 1},  {Int(81), 2},
                                  {Int(-3), 0}, {Int(-9), 1}, {Int(-81), 2}};
  for (unsigned r : detail::grid(P.r, {1, 2, 3, 4}))
    for (const auto& fam : families) {
      if (P.q && *P.q != fam.q) continue;
      if (P.e && *P.e != fam.e) continue;
      Int divisor;
      if (fam.q == -3)
        divisor = pow_int(Int(4), r - 1);
      else if (fam.q > 0 && fam.e > 0)
        divisor = pow_int(Int(2), (unsigned long)(r - 1) * (2 + fam.e));
      else
        divisor = pow_int(Int(2), r - 1);
      IdentityReport rep{"p_div_2",
                         detail::param_str(
                             std::pair("r", r),
                             std::pair("q", to_decimal(fam.q)),
                             std::pair("divisor", to_decimal(divisor)),
                             std::pair("N", N))};
      detail::check_divisibility(rep, p_genfun_at(r, 2, fam.q, N), divisor);
      out.push_back(std::move(rep));
    }
  return out;
}

/// The second 2-primary generating functions written through the binary
/// partition series P_2.
inline std::vector<IdentityReport> identity_p_r2_partition(
    const IdentityParams& P) {
  std::vector<IdentityReport> out;
  size_t N = P.order.value_or(16);
  IntSeries Pinv = pp_partition_series(2, N).inverse();
  IntSeries omx = IntSeries::one_minus_xk(N, 1);
  for (unsigned e : detail::grid(P.e, {0, 1, 2})) {
    Int q3e = pow_int(Int(3), 1ul << e);
    {
      IdentityReport rep{"p_r2_partition",
                         detail::param_str(std::pair("q", to_decimal(-q3e)),
                                           std::pair("N", N))};
      IntSeries rhs = (e == 0)
          ? omx * omx * Pinv * Pinv
          : omx * detail::one_plus_x(N).inverse() *
                (detail::one_plus_x(N) * Pinv).pow(pow_int(Int(2), e + 1));
      detail::check_series_equal(rep, p_genfun_at(2, 2, -q3e, N), rhs);
      out.push_back(std::move(rep));
    }
    {
      IdentityReport rep{"p_r2_partition",
                         detail::param_str(std::pair("q", to_decimal(q3e)),
                                           std::pair("N", N))};
      IntSeries rhs = (e == 0)
          ? IntSeries::one_minus_xk(N, 2) * Pinv * Pinv
          : (omx * Pinv).pow(pow_int(Int(2), e + 1));
      detail::check_series_equal(rep, p_genfun_at(2, 2, q3e, N), rhs);
      out.push_back(std::move(rep));
    }
  }
  return out;
}

/// Q_p(x) = 1 mod p.
inline std::vector<IdentityReport> identity_qp_mod_p(const IdentityParams& P) {
  std::vector<IdentityReport> out;
  size_t N = P.order.value_or(30);
  for (unsigned p : detail::grid(P.p, {2, 3, 5})) {
    IdentityReport rep{"qp_mod_p",
                       detail::param_str(std::pair("p", p), std::pair("N", N))};
    detail::check_divisibility(rep, qp_series(p, N), Int((long)p));
    out.push_back(std::move(rep));
  }
  return out;
}

/// G^p_r(x) = prod_{k>=0} Q_p(x^{p^k})^{p^{(k+1)(r-2)}}.
inline std::vector<IdentityReport> identity_gp_product(
    const IdentityParams& P) {
  std::vector<IdentityReport> out;
  size_t N = P.order.value_or(30);
  for (unsigned p : detail::grid(P.p, {2, 3, 5}))
    for (unsigned r : detail::grid(P.r, {2, 3, 4})) {
      IdentityReport rep{"gp_product",
                         detail::param_str(std::pair("p", p),
                                           std::pair("r", r),
                                           std::pair("N", N))};
      IntSeries qp = qp_series(p, N);
      IntSeries prod = IntSeries::one(N);
      unsigned long pk = 1;
      for (unsigned k = 0; pk <= N; ++k, pk *= p)
        prod *= qp.stretch_x(pk).pow(
            pow_int(Int((long)p), (unsigned long)(k + 1) * (r - 2)));
      detail::check_series_equal(rep, prod, gp_series(p, r, N));
      out.push_back(std::move(rep));
    }
  return out;
}

/// F^p_r at q^{p^e} is the p^{(r-1)e} power of the one at q = g^{p-1},
/// with p^{(r-1)(1+e)} dividing every coefficient.
inline std::vector<IdentityReport> identity_p_odd_power(
    const IdentityParams& P) {
  std::vector<IdentityReport> out;
  size_t N = P.order.value_or(12);
  for (unsigned p : detail::grid(P.p, {3, 5})) {
    Int q = pow_int(Int(find_primitive_root(p)), p - 1);
    for (unsigned e : detail::grid(P.e, {0, 1}))
      for (unsigned r : detail::grid(P.r, {1, 2, 3})) {
        IdentityReport rep{"p_odd_power",
                           detail::param_str(std::pair("p", p),
                                             std::pair("e", e),
                                             std::pair("r", r),
                                             std::pair("N", N))};
        Int qpe = pow_int(q, pow_int(Int((long)p), e).get_ui());
        IntSeries lhs = p_genfun_at(r, p, qpe, N);
        detail::check_series_equal(
            rep, lhs,
            p_genfun_at(r, p, q, N)
                .pow(pow_int(Int((long)p), (unsigned long)(r - 1) * e)));
        detail::check_divisibility(
            rep, lhs, pow_int(Int((long)p), (unsigned long)(r - 1) * (1 + e)));
        out.push_back(std::move(rep));
      }
  }
  return out;
}

/// The nonzero values of A^p(d)(q^{p^e}) for q = g^s, against the counting
/// function.
inline std::vector<IdentityReport> identity_p_odd_apd(
    const IdentityParams& P) {
  std::vector<IdentityReport> out;
  size_t N = P.order.value_or(12);
  for (unsigned p : detail::grid(P.p, {3, 5})) {
    unsigned g = find_primitive_root(p);
    std::vector<unsigned> svals;
    for (unsigned s = 1; s < p; ++s)
      if ((p - 1) % s == 0) svals.push_back(s);
    for (unsigned s : svals) {
      if (P.s && *P.s != s) continue;
      unsigned t = (p - 1) / s;
      for (unsigned e : detail::grid(P.e, {0, 1})) {
        IdentityReport rep{"p_odd_apd",
                           detail::param_str(std::pair("p", p),
                                             std::pair("s", s),
                                             std::pair("e", e),
                                             std::pair("N", N))};
        Int pe = pow_int(Int((long)p), e);
        Int u = pow_int(pow_int(Int((long)g), s), pe.get_ui());
        for (unsigned long d = 1; d <= N && rep.pass; ++d) {
          Int expected = 0;
          if (s == p - 1) {
            // full case: d = 1 gives p^{e+1}, d = p^m gives (p-1)p^e
            if (d == 1)
              expected = pow_int(Int((long)p), e + 1);
            else {
              unsigned long m = d;
              while (m % p == 0) m /= p;
              if (m == 1) expected = Int((long)(p - 1)) * pe;
            }
          } else {
            if (d == 1)
              expected = 1;
            else if (d % t == 0) {
              unsigned long m = d / t;
              while (m % p == 0) m /= p;
              if (m == 1) {
                expected = Int((long)s) * pe;
                if (d == t) expected += (pe - 1) / (long)t;
              }
            }
          }
          detail::check_value(rep, (long)d,
                              count_ppower_irreducibles(d, p, u), expected);
        }
        out.push_back(std::move(rep));
      }
    }
  }
  return out;
}

/// (1-x^t) F^p_r(x)(u^{p^e})^t = (1-x)^t F^p_r(x^t)(q^{p^e}) for u = g^s,
/// q = g^{p-1}, st = p-1.
inline std::vector<IdentityReport> identity_p_odd_twist(
    const IdentityParams& P) {
  std::vector<IdentityReport> out;
  size_t N = P.order.value_or(12);
  for (unsigned p : detail::grid(P.p, {3, 5})) {
    unsigned g = find_primitive_root(p);
    std::vector<unsigned> svals;
    for (unsigned s = 1; s < p - 1; ++s)
      if ((p - 1) % s == 0) svals.push_back(s);
    for (unsigned s : svals) {
      if (P.s && *P.s != s) continue;
      unsigned t = (p - 1) / s;
      for (unsigned e : detail::grid(P.e, {0, 1}))
        for (unsigned r : detail::grid(P.r, {1, 2, 3})) {
          IdentityReport rep{"p_odd_twist",
                             detail::param_str(std::pair("p", p),
                                               std::pair("s", s),
                                               std::pair("t", t),
                                               std::pair("e", e),
                                               std::pair("r", r),
                                               std::pair("N", N))};
          unsigned long pe = pow_int(Int((long)p), e).get_ui();
          Int u = pow_int(pow_int(Int((long)g), s), pe);
          Int q = pow_int(pow_int(Int((long)g), p - 1), pe);
          detail::check_series_equal(
              rep,
              IntSeries::one_minus_xk(N, t) * p_genfun_at(r, p, u, N).pow(t),
              IntSeries::one_minus_xk(N, 1).pow(t) *
                  p_genfun_at(r, p, q, N).stretch_x(t));
          out.push_back(std::move(rep));
        }
    }
  }
  return out;
}

/// (1-x) P_p(x) = P_p(x^p), the positive-exponent exponential relation,
/// and the closed weighted log of P_p.
inline std::vector<IdentityReport> identity_pp_functional(
    const IdentityParams& P) {
  std::vector<IdentityReport> out;
  size_t N = P.order.value_or(40);
  for (unsigned p : detail::grid(P.p, {2, 3, 5})) {
    IdentityReport rep{"pp_functional",
                       detail::param_str(std::pair("p", p), std::pair("N", N))};
    IntSeries Pp = pp_partition_series(p, N);
    IntSeries omx = IntSeries::one_minus_xk(N, 1);
    detail::check_series_equal(rep, omx * Pp, Pp.stretch_x(p));
    std::vector<Int> a(N);
    for (size_t n = 1; n <= N; ++n)
      a[n - 1] = p_part(p, Int((long)(p * n)));
    detail::check_series_equal(rep, omx * exp_weighted(a), Pp.pow((long)p - 1));
    if (rep.pass) {
      auto lg = log_weighted(to_rational(Pp));
      for (size_t n = 1; n <= N && rep.pass; ++n) {
        Rat expect(Int((long)p) * p_part(p, Int((long)n)) - 1,
                   Int((long)(p - 1)));
        expect.canonicalize();
        if (!(lg[n - 1] == expect)) {
          rep.pass = false;
          rep.first_fail_index = (long)n;
          rep.lhs = lg[n - 1].get_str();
          rep.rhs = expect.get_str();
        }
      }
    }
    out.push_back(std::move(rep));
  }
  return out;
}

/// Weighted-log bookkeeping for G/F = prod_{k>=0} F(x^{p^k})^{a p^{bk}},
/// on random F and (a, b).
inline std::vector<IdentityReport> identity_log_lemma(
    const IdentityParams& P) {
  std::vector<IdentityReport> out;
  size_t N = P.order.value_or(20);
  std::mt19937_64 rng(P.seed.value_or(0x5eed));
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> adist(-2, 2);
  std::uniform_int_distribution<int> bdist(0, 2);
  for (unsigned p : detail::grid(P.p, {2, 3, 5}))
    for (int trial = 0; trial < 4; ++trial) {
      int a = 0;
      while (a == 0) a = adist(rng);
      int b = bdist(rng);
      IntSeries F = IntSeries::one(N);
      for (size_t i = 1; i <= N; ++i) F.at(i) = coef(rng);
      IdentityReport rep{"log_lemma",
                         detail::param_str(std::pair("p", p),
                                           std::pair("a", a),
                                           std::pair("b", b),
                                           std::pair("N", N))};
      IntSeries G = F;
      unsigned long pk = 1;
      for (unsigned k = 0; pk <= N; ++k, pk *= p)
        G *= F.stretch_x(pk).pow(Int(a) *
                                 pow_int(Int((long)p), (unsigned long)b * k));
      auto f = log_weighted(F);
      auto gseq = log_weighted(G);
      for (size_t n = 1; n <= N && rep.pass; ++n) {
        Int expect = f[n - 1];
        unsigned long nk = n;
        unsigned long k = 0;
        while (true) {
          expect += Int(a) * pow_int(Int((long)p), k * (b + 1)) * f[nk - 1];
          if (nk % p != 0) break;
          nk /= p;
          ++k;
        }
        detail::check_value(rep, (long)n, gseq[n - 1], expect);
      }
      out.push_back(std::move(rep));
    }
  return out;
}

namespace detail {

/// Shared body of the two odd-prime example identities.
inline std::vector<IdentityReport> odd_prime_examples(
    const IdentityParams& P, unsigned p, const char* id) {
  std::vector<IdentityReport> out;
  size_t N = P.order.value_or(12);
  std::vector<std::pair<unsigned, unsigned>> twists;  // (base, t)
  if (p == 3)
    twists = {{2, 2}};
  else
    twists = {{4, 2}, {2, 4}};
  unsigned top = (p == 3) ? 4 : 16;  // g^{p-1} for g = 2
  for (unsigned e : detail::grid(P.e, {0, 1}))
    for (unsigned r : detail::grid(P.r, {1, 2, 3})) {
      unsigned long pe = pow_int(Int((long)p), e).get_ui();
      IdentityReport rep{id, detail::param_str(std::pair("p", p),
                                               std::pair("e", e),
                                               std::pair("r", r),
                                               std::pair("N", N))};
      // exponential form at the full power q = g^{p-1}
      IntSeries Ftop = p_genfun_at(r, p, pow_int(Int(top), pe), N);
      std::vector<Int> a(N);
      for (size_t n = 1; n <= N; ++n)
        a[n - 1] = -pow_int(
            p_part(p, pow_int(Int((long)p), e + 1) * (long)n), r - 1);
      detail::check_series_equal(rep, Ftop, exp_weighted(a));
      // twisted comparisons at the smaller bases
      for (auto [base, t] : twists) {
        IntSeries Fu = p_genfun_at(r, p, pow_int(Int(base), pe), N);
        detail::check_series_equal(
            rep, IntSeries::one_minus_xk(N, t) * Fu.pow(t),
            IntSeries::one_minus_xk(N, 1).pow(t) * Ftop.stretch_x(t));
      }
      out.push_back(std::move(rep));
    }
  return out;
}

}  // namespace detail

inline std::vector<IdentityReport> identity_example_p3(
    const IdentityParams& P) {
  return detail::odd_prime_examples(P, 3, "example_p3");
}

inline std::vector<IdentityReport> identity_example_p5(
    const IdentityParams& P) {
  return detail::odd_prime_examples(P, 5, "example_p5");
}

// --- registry ----------------------------------------------------------------

using IdentityFn =
    std::function<std::vector<IdentityReport>(const IdentityParams&)>;

inline const std::map<std::string, IdentityFn>& identity_catalog() {
  static const std::map<std::string, IdentityFn> catalog = {
      {"thm_recursion", identity_thm_recursion},
      {"transform_equiv", identity_transform_equiv},
      {"div_qm1", identity_div_qm1},
      {"div_qpow", identity_div_qpow},
      {"p_closed_2", identity_p_closed_2},
      {"p_cor_frp2", identity_p_cor_frp2},
      {"p_div_2", identity_p_div_2},
      {"p_r2_partition", identity_p_r2_partition},
      {"qp_mod_p", identity_qp_mod_p},
      {"gp_product", identity_gp_product},
      {"p_odd_power", identity_p_odd_power},
      {"p_odd_apd", identity_p_odd_apd},
      {"p_odd_twist", identity_p_odd_twist},
      {"pp_functional", identity_pp_functional},
      {"log_lemma", identity_log_lemma},
      {"example_p3", identity_example_p3},
      {"example_p5", identity_example_p5},
  };
  return catalog;
}

inline std::vector<std::string> identity_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : identity_catalog()) names.push_back(name);
  return names;
}

/// Run one identity over its (possibly narrowed) grid.
inline std::vector<IdentityReport> verify_identity(
    const std::string& id, const IdentityParams& params = {}) {
  auto it = identity_catalog().find(id);
  if (it == identity_catalog().end())
    throw domain_error("unknown identity '" + id + "'");
  return it->second(params);
}

/// Run the whole catalog.
inline std::vector<IdentityReport> verify_all(const IdentityParams& params = {}) {
  std::vector<IdentityReport> out;
  for (const auto& [name, fn] : identity_catalog()) {
    auto reports = fn(params);
    out.insert(out.end(), reports.begin(), reports.end());
  }
  return out;
}

}  // namespace eulergl
