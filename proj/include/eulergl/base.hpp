// Exact arithmetic foundation: arbitrary-precision integers and rationals
// (GMP-backed) plus the error types used throughout the library.

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace eulergl {

using Int = mpz_class;
using Rat = mpq_class;

/// Argument outside the documented domain of an operation.
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// A computation contradicted a structural guarantee, e.g. a coefficient
/// that must be an integer came out fractional, or two routes that must
/// agree did not. `index` locates the offending coefficient when known.
struct invariant_error : std::runtime_error {
  long index = -1;
  explicit invariant_error(const std::string& what, long idx = -1)
      : std::runtime_error(what), index(idx) {}
};

/// An enumeration would exceed its resource guard.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string to_decimal(const Int& v) { return v.get_str(); }

inline Int int_from_decimal(const std::string& s) { return Int(s, 10); }

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline bool is_integer(const Rat& v) { return v.get_den() == 1; }

inline Int to_integer_exact(const Rat& v, const char* what = "value",
                            long idx = -1) {
  if (!is_integer(v))
    throw invariant_error(
        std::string(what) + " is not an integer: " + v.get_str(), idx);
  return v.get_num();
}

}  // namespace eulergl
