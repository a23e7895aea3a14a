// Exact integer number theory: valuations, p-parts, lifting-the-exponent
// valuations, multiplicative orders, p-adic signatures and prime power
// detection.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "eulergl/base.hpp"

namespace eulergl {

inline bool is_prime(const Int& m) {
  if (m < 2) return false;
  return mpz_probab_prime_p(m.get_mpz_t(), 40) != 0;
}

inline void require_prime(const Int& p, const char* who) {
  if (!is_prime(p))
    throw domain_error(std::string(who) + ": " + to_decimal(p) +
                       " is not prime");
}

/// Largest k with p^k dividing |m|.  m = 0 has no finite valuation.
inline unsigned long nu_p(const Int& p, const Int& m) {
  require_prime(p, "nu_p");
  if (m == 0) throw domain_error("nu_p: valuation of 0 is undefined");
  Int rest;
  return mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
}

/// p^{nu_p(m)}, the p-part of |m|.
inline Int p_part(const Int& p, const Int& m) {
  return pow_int(p, nu_p(p, m));
}

/// nu_p(a^n - b^n) by the case rules of the lifting-the-exponent lemma,
/// never by expanding a^n.  Hypotheses: p does not divide a or b, and
/// either p is odd with a = b mod p, or p = 2 with a, b odd.
inline unsigned long lte_valuation(const Int& p, const Int& a, const Int& b,
                                   unsigned long n) {
  require_prime(p, "lte_valuation");
  if (n < 1) throw domain_error("lte_valuation: n must be >= 1");
  if (a % p == 0 || b % p == 0)
    throw domain_error("lte_valuation: hypothesis p | ab violated for p=" +
                       to_decimal(p));
  if (a == b || (p == 2 && n % 2 == 0 && a == -b))
    throw domain_error("lte_valuation: a^n - b^n vanishes");
  if (p != 2) {
    if ((a - b) % p != 0)
      throw domain_error("lte_valuation: hypothesis a = b mod p violated");
    return nu_p(p, a - b) + nu_p(p, Int(n));
  }
  // p = 2, a and b odd
  if (n % 2 != 0) return nu_p(p, a - b);
  return nu_p(p, a - b) + nu_p(p, a + b) + nu_p(p, Int(n)) - 1;
}

/// Trial-division factorization, smallest primes first.
inline std::vector<std::pair<Int, unsigned long>> factorize(Int m) {
  if (m < 1) throw domain_error("factorize: argument must be positive");
  std::vector<std::pair<Int, unsigned long>> out;
  for (Int d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
    if (m % d == 0) {
      unsigned long e = 0;
      while (m % d == 0) { m /= d; ++e; }
      out.emplace_back(d, e);
    }
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

inline Int euler_phi(const Int& m) {
  if (m < 1) throw domain_error("euler_phi: argument must be >= 1");
  Int r = 1;
  for (const auto& [p, e] : factorize(m))
    r *= pow_int(p, e - 1) * (p - 1);
  return r;
}

inline int moebius(unsigned long n) {
  if (n == 0) throw domain_error("moebius: argument must be >= 1");
  int sign = 1;
  for (const auto& [p, e] : factorize(Int(n))) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

inline std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {
// Carmichael function of m from its factorization.
inline Int carmichael(const Int& m) {
  Int lambda = 1;
  for (const auto& [p, e] : factorize(m)) {
    Int contrib;
    if (p == 2)
      contrib = (e == 1) ? 1 : (e == 2 ? 2 : pow_int(Int(2), e - 2));
    else
      contrib = pow_int(p, e - 1) * (p - 1);
    mpz_lcm(lambda.get_mpz_t(), lambda.get_mpz_t(), contrib.get_mpz_t());
  }
  return lambda;
}
}  // namespace detail

inline Int powm(const Int& base, const Int& e, const Int& mod) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
  return r;
}

/// Smallest k >= 1 with q^k = 1 mod modulus.  Requires gcd(q, modulus) = 1.
/// The order is found by shrinking the Carmichael bound prime by prime when
/// the modulus factors within reach, with a sequential search as fallback.
inline Int ord_mod(const Int& modulus, const Int& q) {
  if (modulus < 2) throw domain_error("ord_mod: modulus must be >= 2");
  Int g;
  mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), modulus.get_mpz_t());
  if (g != 1)
    throw domain_error("ord_mod: gcd(q, modulus) = " + to_decimal(g) +
                       " != 1");
  Int base = q % modulus;
  if (base < 0) base += modulus;
  if (modulus <= 1000000000) {
    Int e = detail::carmichael(modulus);
    for (const auto& [s, k] : factorize(e)) {
      (void)k;
      while (e % s == 0 && powm(base, e / s, modulus) == 1) e /= s;
    }
    return e;
  }
  Int acc = base, k = 1;
  while (acc != 1) { acc = acc * base % modulus; ++k; }
  return k;
}

/// The pair classifying a prime power q, prime to p, up to p-equivalence:
/// (q mod 8, nu_2(q^2-1)) for p = 2, (ord_p q, nu_p(q^{ord_p q}-1)) for p odd.
struct PAdicSignature {
  unsigned p = 0;
  unsigned long first = 0;
  unsigned long second = 0;
  bool operator==(const PAdicSignature&) const = default;
};

inline PAdicSignature p_signature(unsigned p, const Int& q) {
  require_prime(Int(p), "p_signature");
  if (q % p == 0)
    throw domain_error("p_signature: q must be prime to p");
  if (q == 1 || q == -1)
    throw domain_error("p_signature: q = +-1 has no signature");
  PAdicSignature sig;
  sig.p = p;
  if (p == 2) {
    Int m;
    mpz_mod_ui(m.get_mpz_t(), q.get_mpz_t(), 8);  // nonnegative, odd
    sig.first = m.get_ui();
    sig.second = nu_p(Int(2), q * q - 1);
  } else {
    Int d = ord_mod(Int(p), q);
    sig.first = d.get_ui();
    sig.second = nu_p(Int(p), pow_int(q, d.get_ui()) - 1);
  }
  return sig;
}

/// (p, e) with q = p^e when q >= 2 is a prime power, empty otherwise.
inline std::optional<std::pair<Int, unsigned long>> is_prime_power(
    const Int& q) {
  if (q < 2) return std::nullopt;
  Int base = q;
  unsigned long e = 1;
  for (unsigned long k = mpz_sizeinbase(q.get_mpz_t(), 2); k >= 2; --k) {
    Int root;
    if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), k) != 0) {
      base = root;
      e = k;
      break;
    }
  }
  if (!is_prime(base)) return std::nullopt;
  return std::make_pair(base, e);
}

}  // namespace eulergl
