// Brute-force ground truth: explicit finite fields, enumeration of GL_n(F_q)
// and of the proper nontrivial subspaces, fixed subposets of commuting
// tuples, reduced Euler characteristics of posets (computed two independent
// ways), and the normalized sums of the two equivariant definitions.
//
// Everything here is desk-scale and guarded; EULERGL_GUARD_OVERRIDE=1 in the
// environment lifts the enumeration guards.

#pragma once

#include <cstdlib>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "eulergl/arith.hpp"

namespace eulergl {

inline bool guard_override() {
  const char* v = std::getenv("EULERGL_GUARD_OVERRIDE");
  return v != nullptr && v[0] != '\0' && v[0] != '0';
}

// ---------------------------------------------------------------------------
// Finite fields F_{p^e} with table arithmetic.  Elements are encoded as
// 0..q-1, the base-p digits being the coefficients of the residue class
// representative (ascending powers of t).

class FqField {
 public:
  FqField(unsigned p, unsigned e) : p_(p), e_(e) {
    require_prime(Int(p), "FqField");
    if (e == 0) throw domain_error("FqField: extension degree must be >= 1");
    q_ = 1;
    for (unsigned i = 0; i < e; ++i) {
      q_ *= p;
      if (q_ > 256) throw resource_error("FqField: table arithmetic capped at q <= 256");
    }
    if (q_ > 16 && !guard_override())
      throw resource_error("FqField: guard p^e <= 16 (set EULERGL_GUARD_OVERRIDE to lift)");
    find_modulus();
    build_tables();
  }

  unsigned characteristic() const { return p_; }
  unsigned ext_degree() const { return e_; }
  unsigned size() const { return q_; }
  /// Monic modulus, ascending coefficients over the prime field, degree e.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned sub(unsigned a, unsigned b) const { return add_[a * q_ + neg_[b]]; }
  unsigned inv(unsigned a) const {
    if (a == 0) throw domain_error("FqField: inverse of 0");
    return inv_[a];
  }

 private:
  // digits of x in base p, length e
  std::vector<unsigned> decode(unsigned x) const {
    std::vector<unsigned> d(e_);
    for (unsigned i = 0; i < e_; ++i) { d[i] = x % p_; x /= p_; }
    return d;
  }
  unsigned encode(const std::vector<unsigned>& d) const {
    unsigned x = 0;
    for (unsigned i = e_; i-- > 0;) x = x * p_ + (i < d.size() ? d[i] % p_ : 0);
    return x;
  }

  // polynomial product of residue representatives reduced mod the modulus
  unsigned slow_mul(unsigned a, unsigned b) const {
    auto da = decode(a), db = decode(b);
    std::vector<unsigned> prod(2 * e_, 0);
    for (unsigned i = 0; i < e_; ++i)
      for (unsigned j = 0; j < e_; ++j)
        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    for (unsigned deg = 2 * e_ - 1; deg >= e_ && deg < 2 * e_; --deg) {
      unsigned c = prod[deg];
      if (c == 0) continue;
      prod[deg] = 0;
      for (unsigned i = 0; i < e_; ++i)
        prod[deg - e_ + i] =
            (prod[deg - e_ + i] + c * (p_ - modulus_[i] % p_)) % p_;
    }
    prod.resize(e_);
    return encode(prod);
  }

  // lexicographically smallest (by base-p code of the non-leading
  // coefficients) monic irreducible of degree e over the prime field
  void find_modulus() {
    modulus_.assign(e_ + 1, 0);
    modulus_[e_] = 1;
    if (e_ == 1) return;  // modulus t: the residue ring is the prime field
    unsigned count = 1;
    for (unsigned i = 0; i < e_; ++i) count *= p_;
    for (unsigned code = 0; code < count; ++code) {
      std::vector<unsigned> cand(e_ + 1, 0);
      unsigned x = code;
      for (unsigned i = 0; i < e_; ++i) { cand[i] = x % p_; x /= p_; }
      cand[e_] = 1;
      if (prime_poly_irreducible(cand)) {
        modulus_ = cand;
        return;
      }
    }
    throw invariant_error("FqField: no irreducible modulus found");
  }

  // trial division over F_p on ascending coefficient vectors
  bool prime_poly_irreducible(const std::vector<unsigned>& f) const {
    unsigned deg = (unsigned)f.size() - 1;
    for (unsigned dd = 1; 2 * dd <= deg; ++dd) {
      unsigned count = 1;
      for (unsigned i = 0; i < dd; ++i) count *= p_;
      for (unsigned code = 0; code < count; ++code) {
        std::vector<unsigned> g(dd + 1, 0);
        unsigned x = code;
        for (unsigned i = 0; i < dd; ++i) { g[i] = x % p_; x /= p_; }
        g[dd] = 1;
        // remainder of f by g over F_p
        std::vector<unsigned> r = f;
        for (unsigned k = deg; k + 1 >= dd + 1 && k < f.size(); --k) {
          unsigned c = r[k];
          if (c) {
            for (unsigned i = 0; i <= dd; ++i) {
              unsigned idx = k - dd + i;
              r[idx] = (r[idx] + c * (p_ - g[i] % p_)) % p_;
            }
          }
          if (k == dd) break;
        }
        bool zero = true;
        for (unsigned i = 0; i < dd; ++i)
          if (r[i] != 0) { zero = false; break; }
        if (zero) return false;
      }
    }
    return true;
  }

  void build_tables() {
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
      auto da = decode(a);
      std::vector<unsigned> nn(e_);
      for (unsigned i = 0; i < e_; ++i) nn[i] = (p_ - da[i]) % p_;
      neg_[a] = encode(nn);
      for (unsigned b = 0; b < q_; ++b) {
        auto db = decode(b);
        std::vector<unsigned> s(e_);
        for (unsigned i = 0; i < e_; ++i) s[i] = (da[i] + db[i]) % p_;
        add_[a * q_ + b] = encode(s);
        mul_[a * q_ + b] = slow_mul(a, b);
      }
    }
    for (unsigned a = 1; a < q_; ++a)
      for (unsigned b = 1; b < q_; ++b)
        if (mul_[a * q_ + b] == 1) { inv_[a] = b; break; }
  }

  unsigned p_, e_, q_;
  std::vector<unsigned> modulus_;
  std::vector<unsigned> add_, mul_, neg_, inv_;
};

inline FqField build_field(unsigned p, unsigned e) { return FqField(p, e); }

// ---------------------------------------------------------------------------
// Matrices over F_q.

struct FqMatrix {
  unsigned n = 0;
  std::vector<uint8_t> a;  // row-major

  FqMatrix() = default;
  explicit FqMatrix(unsigned dim) : n(dim), a(dim * dim, 0) {}

  static FqMatrix identity(unsigned dim) {
    FqMatrix m(dim);
    for (unsigned i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
  }

  uint8_t& at(unsigned i, unsigned j) { return a[i * n + j]; }
  uint8_t at(unsigned i, unsigned j) const { return a[i * n + j]; }
  bool operator==(const FqMatrix&) const = default;
};

inline FqMatrix mat_mul(const FqField& F, const FqMatrix& A,
                        const FqMatrix& B) {
  FqMatrix C(A.n);
  for (unsigned i = 0; i < A.n; ++i)
    for (unsigned k = 0; k < A.n; ++k) {
      uint8_t v = A.at(i, k);
      if (!v) continue;
      for (unsigned j = 0; j < A.n; ++j)
        C.at(i, j) = (uint8_t)F.add(C.at(i, j), F.mul(v, B.at(k, j)));
    }
  return C;
}

namespace detail {

// rank by Gaussian elimination; destroys rows
inline unsigned row_rank(const FqField& F, std::vector<std::vector<uint8_t>>& rows,
                         unsigned n) {
  unsigned rank = 0;
  for (unsigned col = 0; col < n && rank < rows.size(); ++col) {
    unsigned pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    unsigned inv = F.inv(rows[rank][col]);
    for (unsigned j = 0; j < n; ++j)
      rows[rank][j] = (uint8_t)F.mul(rows[rank][j], inv);
    for (unsigned i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      unsigned c = rows[i][col];
      for (unsigned j = 0; j < n; ++j)
        rows[i][j] = (uint8_t)F.sub(rows[i][j], (uint8_t)F.mul(c, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

inline bool is_invertible(const FqField& F, const FqMatrix& M) {
  std::vector<std::vector<uint8_t>> rows(M.n, std::vector<uint8_t>(M.n));
  for (unsigned i = 0; i < M.n; ++i)
    for (unsigned j = 0; j < M.n; ++j) rows[i][j] = M.at(i, j);
  return detail::row_rank(F, rows, M.n) == M.n;
}

inline FqMatrix mat_inverse(const FqField& F, const FqMatrix& M) {
  unsigned n = M.n;
  std::vector<std::vector<uint8_t>> rows(n, std::vector<uint8_t>(2 * n, 0));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) rows[i][j] = M.at(i, j);
    rows[i][n + i] = 1;
  }
  unsigned rank = 0;
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = rank;
    while (pivot < n && rows[pivot][col] == 0) ++pivot;
    if (pivot == n) throw domain_error("mat_inverse: singular matrix");
    std::swap(rows[rank], rows[pivot]);
    unsigned inv = F.inv(rows[rank][col]);
    for (unsigned j = 0; j < 2 * n; ++j)
      rows[rank][j] = (uint8_t)F.mul(rows[rank][j], inv);
    for (unsigned i = 0; i < n; ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      unsigned c = rows[i][col];
      for (unsigned j = 0; j < 2 * n; ++j)
        rows[i][j] = (uint8_t)F.sub(rows[i][j], (uint8_t)F.mul(c, rows[rank][j]));
    }
    ++rank;
  }
  FqMatrix R(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) R.at(i, j) = rows[i][n + j];
  return R;
}

/// Order of GL_n(F_q): prod_{i<n} (q^n - q^i).
inline Int gl_order(unsigned n, unsigned q) {
  Int total = 1;
  Int qn = pow_int(Int((long)q), n);
  for (unsigned i = 0; i < n; ++i) total *= qn - pow_int(Int((long)q), i);
  return total;
}

/// All invertible n x n matrices in row-major lexicographic entry order.
inline std::vector<FqMatrix> enumerate_gl(unsigned n, const FqField& F) {
  if (n == 0) throw domain_error("enumerate_gl: n must be >= 1");
  Int order = gl_order(n, F.size());
  if (order > 1000000 && !guard_override())
    throw resource_error("enumerate_gl: |GL_" + std::to_string(n) + "(F_" +
                         std::to_string(F.size()) + ")| = " + to_decimal(order) +
                         " exceeds the 10^6 guard");
  std::vector<FqMatrix> out;
  FqMatrix M(n);
  const unsigned cells = n * n;
  const unsigned q = F.size();
  while (true) {
    if (is_invertible(F, M)) out.push_back(M);
    // odometer with the first entry most significant
    unsigned i = cells;
    while (i > 0) {
      --i;
      if (++M.a[i] < q) break;
      M.a[i] = 0;
      if (i == 0) {
        if ((Int((long)out.size()) != order))
          throw invariant_error("enumerate_gl: count mismatch");
        return out;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Subspaces in reduced row echelon canonical form.

struct Subspace {
  unsigned n = 0;
  unsigned k = 0;                // dimension, 0 < k < n for members of L*
  std::vector<uint8_t> basis;    // k x n, RREF rows

  bool operator==(const Subspace&) const = default;
};

/// Canonicalize a spanning set of row vectors into RREF form.
inline Subspace canonicalize(const FqField& F,
                             std::vector<std::vector<uint8_t>> rows,
                             unsigned n) {
  unsigned rank = detail::row_rank(F, rows, n);
  Subspace s;
  s.n = n;
  s.k = rank;
  s.basis.reserve(rank * n);
  for (unsigned i = 0; i < rank; ++i)
    s.basis.insert(s.basis.end(), rows[i].begin(), rows[i].end());
  return s;
}

/// Image of a subspace under the right action of g, re-canonicalized.
inline Subspace subspace_image(const FqField& F, const Subspace& U,
                               const FqMatrix& g) {
  std::vector<std::vector<uint8_t>> rows(U.k, std::vector<uint8_t>(U.n, 0));
  for (unsigned r = 0; r < U.k; ++r)
    for (unsigned i = 0; i < U.n; ++i) {
      uint8_t v = U.basis[r * U.n + i];
      if (!v) continue;
      for (unsigned j = 0; j < U.n; ++j)
        rows[r][j] = (uint8_t)F.add(rows[r][j], F.mul(v, g.at(i, j)));
    }
  return canonicalize(F, std::move(rows), U.n);
}

/// Is U contained in W?  Reduce each basis row of U against W's RREF rows.
inline bool subspace_leq(const FqField& F, const Subspace& U,
                         const Subspace& W) {
  if (U.k > W.k) return false;
  for (unsigned r = 0; r < U.k; ++r) {
    std::vector<uint8_t> v(U.basis.begin() + r * U.n,
                           U.basis.begin() + (r + 1) * U.n);
    for (unsigned w = 0; w < W.k; ++w) {
      // pivot column of W's row w
      unsigned piv = 0;
      while (piv < W.n && W.basis[w * W.n + piv] == 0) ++piv;
      if (piv < W.n && v[piv] != 0) {
        unsigned c = v[piv];
        for (unsigned j = 0; j < W.n; ++j)
          v[j] = (uint8_t)F.sub(v[j], (uint8_t)F.mul(c, W.basis[w * W.n + j]));
      }
    }
    for (unsigned j = 0; j < U.n; ++j)
      if (v[j] != 0) return false;
  }
  return true;
}

inline Int gaussian_binomial(unsigned n, unsigned k, unsigned q) {
  Int num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= pow_int(Int((long)q), n - i) - 1;
    den *= pow_int(Int((long)q), i + 1) - 1;
  }
  if (num % den != 0) throw invariant_error("gaussian_binomial: not exact");
  return num / den;
}

/// All proper nontrivial subspaces of F_q^n as RREF representatives,
/// ordered by dimension, then pivot columns, then free entries.
inline std::vector<Subspace> enumerate_subspaces(unsigned n,
                                                 const FqField& F) {
  if (n == 0) throw domain_error("enumerate_subspaces: n must be >= 1");
  if ((n > 4 || F.size() > 5) && !guard_override())
    throw resource_error(
        "enumerate_subspaces: guard n <= 4, q <= 5 (set "
        "EULERGL_GUARD_OVERRIDE to lift)");
  std::vector<Subspace> out;
  const unsigned q = F.size();
  for (unsigned k = 1; k < n; ++k) {
    // pivot column subsets in lexicographic order
    std::vector<unsigned> piv(k);
    std::iota(piv.begin(), piv.end(), 0);
    while (true) {
      // free positions: row r, column j with j > piv[r], j not a pivot
      std::vector<std::pair<unsigned, unsigned>> free_pos;
      for (unsigned r = 0; r < k; ++r)
        for (unsigned j = piv[r] + 1; j < n; ++j) {
          bool is_piv = false;
          for (unsigned t = 0; t < k; ++t)
            if (piv[t] == j) { is_piv = true; break; }
          if (!is_piv) free_pos.emplace_back(r, j);
        }
      std::vector<unsigned> fill(free_pos.size(), 0);
      while (true) {
        Subspace s;
        s.n = n;
        s.k = k;
        s.basis.assign(k * n, 0);
        for (unsigned r = 0; r < k; ++r) s.basis[r * n + piv[r]] = 1;
        for (size_t t = 0; t < free_pos.size(); ++t)
          s.basis[free_pos[t].first * n + free_pos[t].second] =
              (uint8_t)fill[t];
        out.push_back(std::move(s));
        // advance odometer, last position fastest
        size_t t = fill.size();
        bool done = true;
        while (t > 0) {
          --t;
          if (++fill[t] < q) { done = false; break; }
          fill[t] = 0;
        }
        if (done) break;
      }
      // next pivot combination
      int idx = (int)k - 1;
      while (idx >= 0 && piv[idx] == n - k + idx) --idx;
      if (idx < 0) break;
      ++piv[idx];
      for (unsigned t = idx + 1; t < k; ++t) piv[t] = piv[t - 1] + 1;
    }
  }
  Int expect = 0;
  for (unsigned k = 1; k < n; ++k) expect += gaussian_binomial(n, k, q);
  if (Int((long)out.size()) != expect)
    throw invariant_error("enumerate_subspaces: count mismatch with the "
                          "Gaussian binomials");
  return out;
}

// ---------------------------------------------------------------------------
// Posets and reduced Euler characteristics.

struct FinitePoset {
  // lt[i][j]: element i strictly below element j
  std::vector<std::vector<bool>> lt;
  size_t size() const { return lt.size(); }
};

/// chi~ by the alternating chain count (empty chain contributing -1) and,
/// independently, as the Moebius function of the bounded extension.  The two
/// routes must agree.
inline long long reduced_euler_char(const FinitePoset& P) {
  const size_t m = P.size();
  // topological order: sort by number of elements strictly below
  std::vector<size_t> below(m, 0), order(m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (P.lt[j][i]) ++below[i];
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t x, size_t y) { return below[x] < below[y]; });

  // signed chain DP: t(i) = 1 - sum_{j < i} t(j); chi = -1 + sum t
  std::vector<long long> t(m, 0);
  long long chi_chain = -1;
  for (size_t oi : order) {
    long long v = 1;
    for (size_t j = 0; j < m; ++j)
      if (P.lt[j][oi]) v -= t[j];
    t[oi] = v;
    chi_chain += v;
  }

  // Moebius of the bounded extension: mu(0^, x), then chi = mu(0^, 1^)
  std::vector<long long> mu(m, 0);
  long long total = 1;  // mu(0^, 0^)
  for (size_t oi : order) {
    long long v = -1;  // -mu(0^, 0^)
    for (size_t j = 0; j < m; ++j)
      if (P.lt[j][oi]) v -= mu[j];
    mu[oi] = v;
    total += v;
  }
  long long chi_mu = -total;

  if (chi_chain != chi_mu)
    throw invariant_error("reduced_euler_char: chain count and Moebius "
                          "disagree");
  return chi_chain;
}

/// Subposet of the given subspaces invariant under every generator.
/// Generators must commute pairwise.
inline FinitePoset fixed_subposet(const FqField& F,
                                  const std::vector<FqMatrix>& generators,
                                  const std::vector<Subspace>& subspaces) {
  for (size_t i = 0; i < generators.size(); ++i)
    for (size_t j = i + 1; j < generators.size(); ++j)
      if (!(mat_mul(F, generators[i], generators[j]) ==
            mat_mul(F, generators[j], generators[i])))
        throw domain_error("fixed_subposet: generators do not commute");
  std::vector<const Subspace*> fixed;
  for (const auto& U : subspaces) {
    bool ok = true;
    for (const auto& g : generators)
      if (!(subspace_image(F, U, g) == U)) { ok = false; break; }
    if (ok) fixed.push_back(&U);
  }
  FinitePoset P;
  P.lt.assign(fixed.size(), std::vector<bool>(fixed.size(), false));
  for (size_t i = 0; i < fixed.size(); ++i)
    for (size_t j = 0; j < fixed.size(); ++j)
      if (i != j && fixed[i]->k < fixed[j]->k &&
          subspace_leq(F, *fixed[i], *fixed[j]))
        P.lt[i][j] = true;
  return P;
}

// ---------------------------------------------------------------------------
// Dynamic bitsets for subspace masks and element sets.

struct Bitset {
  std::vector<uint64_t> w;

  Bitset() = default;
  explicit Bitset(size_t bits) : w((bits + 63) / 64, 0) {}

  void set(size_t i) { w[i >> 6] |= uint64_t{1} << (i & 63); }
  bool test(size_t i) const {
    return (w[i >> 6] >> (i & 63)) & 1;
  }
  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { a &= b; return a; }
  bool operator==(const Bitset&) const = default;

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (size_t wi = 0; wi < w.size(); ++wi) {
      uint64_t x = w[wi];
      while (x) {
        unsigned b = (unsigned)__builtin_ctzll(x);
        fn(wi * 64 + b);
        x &= x - 1;
      }
    }
  }
};

struct BitsetHash {
  size_t operator()(const Bitset& b) const {
    size_t h = 1469598103934665603ull;
    for (uint64_t v : b.w) {
      h ^= (size_t)v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// ---------------------------------------------------------------------------
// The enumeration context for one group GL_n(F_q): elements, fixed-subspace
// masks, commutation adjacency, and memoized chi~ of masked subposets.

class GlContext {
 public:
  GlContext(unsigned n, const FqField& field)
      : F(field), n_(n), elems_(enumerate_gl(n, field)),
        subs_(n >= 2 ? enumerate_subspaces(n, field) : std::vector<Subspace>{}) {
    const size_t m = subs_.size();
    const size_t g = elems_.size();
    group_order_ = Int((long)g);
    // strict containment among subspaces
    contain_.assign(m, Bitset(m == 0 ? 1 : m));
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j)
        if (i != j && subs_[i].k < subs_[j].k &&
            subspace_leq(F, subs_[i], subs_[j]))
          contain_[i].set(j);
    // per-element invariant masks
    fix_.assign(g, Bitset(m == 0 ? 1 : m));
    for (size_t gi = 0; gi < g; ++gi)
      for (size_t si = 0; si < m; ++si)
        if (subspace_image(F, subs_[si], elems_[gi]) == subs_[si])
          fix_[gi].set(si);
    full_mask_ = Bitset(m == 0 ? 1 : m);
    for (size_t si = 0; si < m; ++si) full_mask_.set(si);
    // commutation adjacency
    adj_.assign(g, Bitset(g));
    for (size_t i = 0; i < g; ++i) {
      adj_[i].set(i);
      for (size_t j = i + 1; j < g; ++j)
        if (mat_mul(F, elems_[i], elems_[j]) ==
            mat_mul(F, elems_[j], elems_[i])) {
          adj_[i].set(j);
          adj_[j].set(i);
        }
    }
    for (size_t i = 0; i < g; ++i)
      if (elems_[i] == FqMatrix::identity(n)) identity_ = i;
    for (size_t i = 0; i < g; ++i)
      lookup_.emplace(
          std::string(elems_[i].a.begin(), elems_[i].a.end()), (uint32_t)i);
  }

  const FqField& F;
  unsigned dim() const { return n_; }
  const std::vector<FqMatrix>& elements() const { return elems_; }
  const std::vector<Subspace>& subspaces() const { return subs_; }
  const Int& group_order() const { return group_order_; }
  size_t identity_index() const { return identity_; }
  const Bitset& full_mask() const { return full_mask_; }
  const Bitset& fix_mask(size_t gi) const { return fix_[gi]; }
  bool commute(size_t i, size_t j) const { return adj_[i].test(j); }
  const Bitset& adjacency(size_t i) const { return adj_[i]; }

  size_t index_of(const FqMatrix& m) const {
    auto it = lookup_.find(std::string(m.a.begin(), m.a.end()));
    if (it == lookup_.end())
      throw domain_error("GlContext: element not in the group");
    return it->second;
  }

  unsigned long order_of(size_t gi) const {
    FqMatrix acc = elems_[gi];
    FqMatrix id = FqMatrix::identity(n_);
    unsigned long k = 1;
    while (!(acc == id)) {
      acc = mat_mul(F, acc, elems_[gi]);
      ++k;
    }
    return k;
  }

  bool semisimple(size_t gi) const {
    return order_of(gi) % F.characteristic() != 0;
  }

  bool p_power_order(size_t gi, unsigned p) const {
    // g has p-power order iff g^{p-part of |G|} = 1
    Int e = p_part(p, group_order_);
    FqMatrix acc = FqMatrix::identity(n_);
    FqMatrix base = elems_[gi];
    Int k = e;
    while (k != 0) {
      if (mpz_odd_p(k.get_mpz_t())) acc = mat_mul(F, acc, base);
      k /= 2;
      if (k != 0) base = mat_mul(F, base, base);
    }
    return acc == FqMatrix::identity(n_);
  }

  std::vector<std::vector<uint32_t>> conjugacy_classes() const {
    std::vector<std::vector<uint32_t>> classes;
    std::vector<bool> seen(elems_.size(), false);
    std::vector<FqMatrix> inverses(elems_.size());
    for (size_t s = 0; s < elems_.size(); ++s)
      inverses[s] = mat_inverse(F, elems_[s]);
    for (size_t gi = 0; gi < elems_.size(); ++gi) {
      if (seen[gi]) continue;
      std::vector<uint32_t> cls;
      for (size_t s = 0; s < elems_.size(); ++s) {
        FqMatrix conj =
            mat_mul(F, inverses[s], mat_mul(F, elems_[gi], elems_[s]));
        size_t idx = index_of(conj);
        if (!seen[idx]) {
          seen[idx] = true;
          cls.push_back((uint32_t)idx);
        }
      }
      std::sort(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
    return classes;
  }

  /// chi~ of the subposet selected by the mask, memoized; chain count and
  /// Moebius route are compared on every new mask.
  long long chi_mask(const Bitset& mask) {
    auto it = chi_memo_.find(mask);
    if (it != chi_memo_.end()) return it->second;
    std::vector<size_t> idx;
    mask.for_each([&](size_t i) { idx.push_back(i); });
    // enumeration order is by dimension, hence topological
    std::vector<long long> t(idx.size());
    long long chi_chain = -1;
    for (size_t a = 0; a < idx.size(); ++a) {
      long long v = 1;
      for (size_t b = 0; b < a; ++b)
        if (contain_[idx[b]].test(idx[a])) v -= t[b];
      t[a] = v;
      chi_chain += v;
    }
    std::vector<long long> mu(idx.size());
    long long total = 1;
    for (size_t a = 0; a < idx.size(); ++a) {
      long long v = -1;
      for (size_t b = 0; b < a; ++b)
        if (contain_[idx[b]].test(idx[a])) v -= mu[b];
      mu[a] = v;
      total += v;
    }
    if (chi_chain != -total)
      throw invariant_error("chi_mask: chain count and Moebius disagree");
    chi_memo_.emplace(mask, chi_chain);
    return chi_chain;
  }

  /// (1/|H|) sum over commuting r-tuples from H of chi~ of the common fixed
  /// subposet inside `poset`.  With `p_primary`, positions 2..r are
  /// restricted to elements of p-power order.  The division must be exact.
  Int equivariant_chi(const Bitset& poset, const std::vector<uint32_t>& H,
                      unsigned r, std::optional<unsigned> p_primary = {}) {
    if (r == 0) throw domain_error("equivariant_chi: r must be >= 1");
    Bitset cands(elems_.size());
    for (uint32_t h : H) cands.set(h);
    Bitset ppow(elems_.size());
    if (p_primary) {
      for (uint32_t h : H)
        if (p_power_order(h, *p_primary)) ppow.set(h);
    }
    Int total = 0;
    auto rec = [&](auto&& self, unsigned level, const Bitset& mask,
                   const Bitset& pool) -> void {
      if (level == r) {
        total += Int((long)chi_mask(mask));
        return;
      }
      Bitset iter = pool;
      if (level >= 1 && p_primary) iter &= ppow;
      iter.for_each([&](size_t g) {
        self(self, level + 1, mask & fix_[g], pool & adj_[g]);
      });
    };
    rec(rec, 0, poset, cands);
    Int h((long)H.size());
    if (total % h != 0)
      throw invariant_error("equivariant_chi: normalized sum is not an "
                            "integer: " + to_decimal(total) + " / " +
                            to_decimal(h));
    return total / h;
  }

  std::vector<uint32_t> all_elements() const {
    std::vector<uint32_t> v(elems_.size());
    std::iota(v.begin(), v.end(), 0);
    return v;
  }

  std::vector<uint32_t> centralizer(size_t gi) const {
    std::vector<uint32_t> v;
    adj_[gi].for_each([&](size_t j) { v.push_back((uint32_t)j); });
    return v;
  }

 private:
  unsigned n_;
  std::vector<FqMatrix> elems_;
  std::vector<Subspace> subs_;
  Int group_order_;
  size_t identity_ = 0;
  Bitset full_mask_;
  std::vector<Bitset> contain_;  // contain_[i].test(j): subs i strictly below j
  std::vector<Bitset> fix_;
  std::vector<Bitset> adj_;
  std::unordered_map<std::string, uint32_t> lookup_;
  std::unordered_map<Bitset, long long, BitsetHash> chi_memo_;
};

/// chi~_r(n, q) straight from the definition: the normalized sum over all
/// commuting r-tuples.
inline Int oracle_chi(unsigned r, unsigned n, const FqField& field) {
  GlContext ctx(n, field);
  return ctx.equivariant_chi(ctx.full_mask(), ctx.all_elements(), r);
}

/// The p-primary variant: tuples (g, h_1, .., h_{r-1}) with the h_i of
/// p-power order.
inline Int oracle_chi_p(unsigned r, unsigned p, unsigned n,
                        const FqField& field) {
  require_prime(Int(p), "oracle_chi_p");
  GlContext ctx(n, field);
  return ctx.equivariant_chi(ctx.full_mask(), ctx.all_elements(), r, p);
}

// ---------------------------------------------------------------------------
// Brute-force irreducible polynomial counting over an explicit field.

namespace detail {

// monic polynomials over F as ascending coefficient vectors
inline std::vector<uint8_t> poly_mulmod(const FqField& F,
                                        const std::vector<uint8_t>& a,
                                        const std::vector<uint8_t>& b,
                                        const std::vector<uint8_t>& mod) {
  std::vector<uint8_t> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (uint8_t)F.add(prod[i + j], F.mul(a[i], b[j]));
  }
  // reduce by the monic modulus
  size_t d = mod.size() - 1;
  for (size_t k = prod.size(); k-- > d;) {
    uint8_t c = prod[k];
    if (!c) continue;
    prod[k] = 0;
    for (size_t i = 0; i < d; ++i)
      prod[k - d + i] = (uint8_t)F.sub(prod[k - d + i], (uint8_t)F.mul(c, mod[i]));
  }
  prod.resize(d);
  return prod;
}

inline bool poly_divides(const FqField& F, const std::vector<uint8_t>& g,
                         std::vector<uint8_t> f) {
  // g monic; remainder of f by g is zero?
  size_t dg = g.size() - 1;
  for (size_t k = f.size(); k-- > dg;) {
    uint8_t c = f[k];
    if (!c) continue;
    for (size_t i = 0; i <= dg; ++i)
      f[k - dg + i] = (uint8_t)F.sub(f[k - dg + i], (uint8_t)F.mul(c, g[i]));
  }
  for (size_t i = 0; i < dg; ++i)
    if (f[i]) return false;
  return true;
}

}  // namespace detail

/// Count monic irreducible degree-d polynomials over the field by explicit
/// enumeration and trial division.  With `p_power_order`, keep only those
/// whose root has p-power multiplicative order; the polynomial t itself is
/// excluded from that count.
inline Int count_irreducible_brute(unsigned d, const FqField& F,
                                   std::optional<unsigned> p_power_order = {}) {
  if (d == 0) throw domain_error("count_irreducible_brute: d must be >= 1");
  const unsigned q = F.size();
  double scale = 1;
  for (unsigned i = 0; i < d; ++i) scale *= q;
  if (scale > 1e6 && !guard_override())
    throw resource_error("count_irreducible_brute: q^d exceeds the 10^6 guard");
  // irreducibles of each degree up to d, by sieving with smaller degrees
  std::vector<std::vector<std::vector<uint8_t>>> irr(d + 1);
  for (unsigned deg = 1; deg <= d; ++deg) {
    unsigned long count = 1;
    for (unsigned i = 0; i < deg; ++i) count *= q;
    for (unsigned long code = 0; code < count; ++code) {
      std::vector<uint8_t> f(deg + 1, 0);
      unsigned long x = code;
      for (unsigned i = 0; i < deg; ++i) { f[i] = (uint8_t)(x % q); x /= q; }
      f[deg] = 1;
      bool irreducible = true;
      for (unsigned dd = 1; 2 * dd <= deg && irreducible; ++dd)
        for (const auto& g : irr[dd])
          if (detail::poly_divides(F, g, f)) { irreducible = false; break; }
      if (irreducible) irr[deg].push_back(std::move(f));
    }
  }
  if (!p_power_order) return Int((long)irr[d].size());

  unsigned p = *p_power_order;
  require_prime(Int(p), "count_irreducible_brute");
  // root order divides q^d - 1; it is a p-power iff t^{(q^d-1)_p} = 1 mod f
  Int qd = pow_int(Int((long)q), d) - 1;
  Int ppart = p_part(p, qd);
  long count = 0;
  for (const auto& f : irr[d]) {
    if (d == 1 && f[0] == 0) continue;  // the polynomial t has no unit root
    std::vector<uint8_t> acc = detail::poly_mulmod(F, {1}, {1}, f);   // 1
    std::vector<uint8_t> b = detail::poly_mulmod(F, {1}, {0, 1}, f);  // t
    Int k = ppart;
    while (k != 0) {
      if (mpz_odd_p(k.get_mpz_t())) acc = detail::poly_mulmod(F, acc, b, f);
      k /= 2;
      if (k != 0) b = detail::poly_mulmod(F, b, b, f);
    }
    bool is_one = (acc[0] == 1);
    for (size_t i = 1; i < acc.size(); ++i)
      if (acc[i]) { is_one = false; break; }
    if (is_one) ++count;
  }
  return Int(count);
}

}  // namespace eulergl
