#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <mutex>
#include <string>

namespace rainbow {

/// Exact arbitrary-precision integer. Counts grow like rho^{-n} with
/// rho < 1, so fixed-width integers overflow after a few dozen terms.
using BigInt = boost::multiprecision::mpz_int;

/// Exact rational, used end-to-end for finite-n distributions.
using Rational = boost::multiprecision::mpq_rational;

/// Arbitrary-precision real with runtime-selected working precision.
using HPReal = boost::multiprecision::mpfr_float;

/// Scoped override of the mpfr default working precision (decimal digits).
/// Values created while the guard is alive carry that precision.
///
/// The underlying default is process-global in this Boost version, so the
/// guard also holds a recursive lock: guarded computations are mutually
/// serialized, which makes the high-precision entry points safe to call
/// from concurrent threads. Nesting within one thread is fine.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits10)
      : lock_(mutex_), saved_(HPReal::default_precision()) {
    HPReal::default_precision(digits10);
  }
  ~PrecisionGuard() { HPReal::default_precision(saved_); }

  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  static inline std::recursive_mutex mutex_;
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned saved_;
};

/// pi at the current default precision.
inline HPReal pi_value() {
  HPReal p;
  mpfr_const_pi(p.backend().data(), MPFR_RNDN);
  return p;
}

inline HPReal to_real(const BigInt& v) { return HPReal(v); }

inline HPReal to_real(const Rational& q) {
  return HPReal(numerator(q)) / HPReal(denominator(q));
}

/// Decimal rendering of an exact rational, correctly rounded to `digits`
/// significant digits.
inline std::string decimal_string(const Rational& q, int digits) {
  PrecisionGuard guard(static_cast<unsigned>(digits) + 10);
  return to_real(q).str(digits);
}

}  // namespace rainbow
