#include "rainbow/polynomial.hpp"

#include <algorithm>

namespace rainbow {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(int degree, const BigInt& coeff) {
  std::vector<BigInt> c(degree + 1, 0);
  c[degree] = coeff;
  return IntPolynomial(std::move(c));
}

const BigInt& IntPolynomial::coeff(int i) const {
  static const BigInt zero = 0;
  if (i < 0 || i > degree()) return zero;
  return coeffs_[i];
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return IntPolynomial();
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * i;
  return IntPolynomial(std::move(d));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::eval_scaled(const BigInt& num, const BigInt& den) const {
  if (coeffs_.empty()) return 0;
  BigInt acc = coeffs_.back();
  BigInt den_pow = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    den_pow *= den;
    acc = acc * num + coeffs_[i] * den_pow;
  }
  return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
  BigInt v = eval_scaled(numerator(x), denominator(x));
  return v == 0 ? 0 : (v > 0 ? 1 : -1);
}

HPReal IntPolynomial::eval(const HPReal& x) const {
  HPReal acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + HPReal(coeffs_[i]);
  return acc;
}

IntPolynomial count_poly_a(const Params& params) {
  check_params(params);
  return IntPolynomial({1}) - IntPolynomial::monomial(2) +
         IntPolynomial::monomial(2 * params.min_stack);
}

IntPolynomial count_poly_b(const Params& params) {
  const IntPolynomial a = count_poly_a(params);
  const IntPolynomial one_minus_x = IntPolynomial({1, -1});
  std::vector<BigInt> geo(std::max(params.min_arc - 1, 0), 1);
  return one_minus_x * a +
         IntPolynomial::monomial(2 * params.min_stack) *
             IntPolynomial(std::move(geo));
}

IntPolynomial singularity_polynomial(const Params& params) {
  const IntPolynomial a = count_poly_a(params);
  const IntPolynomial b = count_poly_b(params);
  return b * b - IntPolynomial::monomial(2 * params.min_stack, 4) * a;
}

namespace {

// Sturm machinery over rational coefficients; degrees stay tiny (<= 20).
using RatPoly = std::vector<Rational>;

void rp_trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rp_from(const IntPolynomial& p) {
  RatPoly out(p.degree() + 1);
  for (int i = 0; i <= p.degree(); ++i) out[i] = Rational(p.coeff(i));
  rp_trim(out);
  return out;
}

RatPoly rp_derivative(const RatPoly& p) {
  if (p.size() <= 1) return {};
  RatPoly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<int>(i);
  return d;
}

RatPoly rp_remainder(RatPoly num, const RatPoly& den) {
  while (num.size() >= den.size() && !num.empty()) {
    Rational factor = num.back() / den.back();
    size_t shift = num.size() - den.size();
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= factor * den[i];
    rp_trim(num);
  }
  return num;
}

Rational rp_eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

std::vector<RatPoly> sturm_chain(RatPoly p0) {
  std::vector<RatPoly> chain;
  chain.push_back(std::move(p0));
  chain.push_back(rp_derivative(chain[0]));
  while (!chain.back().empty() && chain.back().size() > 1) {
    RatPoly rem = rp_remainder(chain[chain.size() - 2], chain.back());
    if (rem.empty()) break;
    for (Rational& c : rem) c = -c;
    chain.push_back(std::move(rem));
  }
  return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
  int variations = 0;
  int prev = 0;
  for (const RatPoly& p : chain) {
    if (p.empty()) continue;
    Rational v = rp_eval(p, x);
    int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

int roots_between(const std::vector<RatPoly>& chain, const Rational& lo,
                  const Rational& hi) {
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

}  // namespace

int count_real_roots(const IntPolynomial& p, const Rational& lo,
                     const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  auto chain = sturm_chain(rp_from(p));
  return roots_between(chain, lo, hi);
}

RootBracket isolate_smallest_positive_root(const IntPolynomial& p,
                                           const Rational& upper,
                                           const Rational& width) {
  if (p.is_zero()) throw RootIsolationError("zero polynomial");
  if (upper <= 0 || width <= 0)
    throw RootIsolationError("upper bound and width must be positive");
  if (p.sign_at(0) <= 0)
    throw RootIsolationError("polynomial is not positive at 0");

  const auto chain = sturm_chain(rp_from(p));
  Rational lo = 0, hi = upper;
  if (roots_between(chain, lo, hi) == 0)
    throw RootIsolationError("no real root in (0, upper]");

  // Shrink to the leftmost root. Invariant: no root in (0, lo], at least
  // one in (lo, hi].
  while (roots_between(chain, lo, hi) > 1) {
    Rational mid = (lo + hi) / 2;
    if (p.sign_at(mid) == 0) {
      // mid is itself a root; it is the leftmost one iff nothing precedes
      // it in (lo, mid].
      if (roots_between(chain, lo, mid) == 1) {
        lo = hi = mid;
        break;
      }
      hi = mid;
      continue;
    }
    if (roots_between(chain, lo, mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }

  if (lo != hi) {
    // Multiplicity check: a repeated root of p is a root of gcd(p, p'),
    // which is (up to sign) the last nonzero entry of the Sturm chain.
    const RatPoly& tail = chain.back();
    if (tail.size() > 1) {
      auto tail_chain = sturm_chain(tail);
      if (roots_between(tail_chain, lo, hi) > 0)
        throw RootIsolationError("smallest positive root is not simple");
    }

    if (p.sign_at(hi) == 0) {
      lo = hi;  // the isolated root is exactly hi
    } else if (p.sign_at(lo) <= 0 || p.sign_at(hi) > 0) {
      throw RootIsolationError(
          "no sign change across the isolated root (even multiplicity?)");
    }

    while (lo != hi && hi - lo >= width) {
      Rational mid = (lo + hi) / 2;
      int s = p.sign_at(mid);
      if (s == 0) {
        lo = hi = mid;
        break;
      }
      (s > 0 ? lo : hi) = mid;
    }
  }

  if (lo == hi) {
    // Exact rational root; simplicity via the derivative.
    if (p.derivative().sign_at(lo) == 0)
      throw RootIsolationError("smallest positive root is not simple");
  }
  return {lo, hi};
}

}  // namespace rainbow
