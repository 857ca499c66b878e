#pragma once

#include <stdexcept>
#include <vector>

#include "rainbow/numeric.hpp"
#include "rainbow/params.hpp"

namespace rainbow {

/// Dense integer polynomial; coefficient of x^i at index i.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial monomial(int degree, const BigInt& coeff = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const BigInt& coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  IntPolynomial derivative() const;

  friend IntPolynomial operator+(const IntPolynomial&, const IntPolynomial&);
  friend IntPolynomial operator-(const IntPolynomial&, const IntPolynomial&);
  friend IntPolynomial operator*(const IntPolynomial&, const IntPolynomial&);

  /// den^degree * P(num/den); exact, so sign(P(num/den)) for den > 0.
  BigInt eval_scaled(const BigInt& num, const BigInt& den) const;
  int sign_at(const Rational& x) const;

  HPReal eval(const HPReal& x) const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// A(x) = 1 - x^2 + x^{2r}.
IntPolynomial count_poly_a(const Params& params);

/// B(x) = (1 - x) A(x) + x^{2r} (1 + x + ... + x^{lambda-2}).
IntPolynomial count_poly_b(const Params& params);

/// D(x) = B(x)^2 - 4 x^{2r} A(x); its smallest positive root is the
/// dominant singularity of the counting series.
IntPolynomial singularity_polynomial(const Params& params);

class RootIsolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An interval certified to contain exactly one root of the polynomial it
/// was produced for, with p(lo) > 0 > p(hi) unless the root is the exact
/// rational lo == hi.
struct RootBracket {
  Rational lo;
  Rational hi;

  Rational midpoint() const { return (lo + hi) / 2; }
  Rational width() const { return hi - lo; }
};

/// Isolates the smallest root of p in (0, upper] by a Sturm chain, then
/// narrows it by exact-sign dyadic bisection until the bracket is narrower
/// than `width`. Certifies that the root is simple and that p, which must
/// be positive at 0, stays positive on (0, root). Throws
/// RootIsolationError when there is no root or the smallest root is not
/// simple.
RootBracket isolate_smallest_positive_root(const IntPolynomial& p,
                                           const Rational& upper,
                                           const Rational& width);

/// Number of distinct real roots of p in (lo, hi], by Sturm's theorem.
int count_real_roots(const IntPolynomial& p, const Rational& lo,
                     const Rational& hi);

}  // namespace rainbow
