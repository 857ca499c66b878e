#include "rainbow/count_table.hpp"

#include <stdexcept>
#include <string>

#include "rainbow/polynomial.hpp"

namespace rainbow {

namespace {

// sum_{i+j=m} s(i) s(j) for one m, exploiting symmetry.
BigInt self_convolution(const std::vector<BigInt>& s, int m) {
  BigInt acc = 0;
  for (int i = 0; 2 * i < m; ++i) acc += s[i] * s[m - i];
  acc *= 2;
  if (m % 2 == 0) acc += s[m / 2] * s[m / 2];
  return acc;
}

}  // namespace

CountTable CountTable::build(const Params& params, int horizon) {
  check_params(params);
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");

  CountTable t;
  t.params_ = params;
  t.horizon_ = horizon;

  const int N = horizon;
  const int two_r = 2 * params.min_stack;
  const IntPolynomial a_poly = count_poly_a(params);
  const IntPolynomial b_poly = count_poly_b(params);

  // [x^n] of the quadratic x^{2r} S^2 - B S + A = 0; B(0) = 1 makes s(n)
  // depend only on lower-order terms.
  auto& s = t.s_;
  s.assign(N + 1, 0);
  s[0] = 1;
  for (int n = 1; n <= N; ++n) {
    BigInt val = (n <= a_poly.degree()) ? a_poly.coeff(n) : BigInt(0);
    if (n >= two_r) val += self_convolution(s, n - two_r);
    const int jmax = std::min(n, b_poly.degree());
    for (int j = 1; j <= jmax; ++j) val -= b_poly.coeff(j) * s[n - j];
    if (val < 0)
      throw std::logic_error("negative structure count at n = " +
                             std::to_string(n));
    s[n] = std::move(val);
  }

  // S = 1/(1 - F)  =>  f(n) = s(n) - sum_{i<n} f(i) s(n - i).
  auto& f = t.f_;
  f.assign(N + 1, 0);
  for (int n = 1; n <= N; ++n) {
    BigInt val = s[n];
    for (int i = 1; i < n; ++i) val -= f[i] * s[n - i];
    if (val < 0)
      throw std::logic_error("negative irreducible count at n = " +
                             std::to_string(n));
    f[n] = std::move(val);
  }

  t.derive_allowed_inner_and_weights();
  return t;
}

void CountTable::derive_allowed_inner_and_weights() {
  const int N = horizon_;
  const int lambda = params_.min_arc;

  // Coefficients of S - F + x - sum_{i=0}^{lambda-2} x^i: the structures a
  // stack may enclose without extending it or shortening its inner arc.
  a_.assign(N + 1, 0);
  for (int n = 0; n <= N; ++n) {
    BigInt val = s_[n] - f_[n];
    if (n == 1) val += 1;
    if (n <= lambda - 2) val -= 1;
    if (val < 0)
      throw std::logic_error("negative inner count at n = " +
                             std::to_string(n));
    a_[n] = std::move(val);
  }

  // b_k = [x^{k-1}] S^2.
  b_.assign(N + 2, 0);
  for (int k = 1; k <= N + 1; ++k) b_[k] = self_convolution(s_, k - 1);
}

CountTable CountTable::from_series(const Params& params, std::vector<BigInt> s,
                                   std::vector<BigInt> f) {
  check_params(params);
  if (s.size() < 2 || s.size() != f.size())
    throw std::invalid_argument("series must share a length >= 2");

  CountTable t;
  t.params_ = params;
  t.horizon_ = static_cast<int>(s.size()) - 1;
  t.s_ = std::move(s);
  t.f_ = std::move(f);

  if (t.s_[0] != 1 || t.f_[0] != 0 || t.f_[1] != 1)
    throw std::invalid_argument("series do not start with s(0)=1, f(1)=1");
  // Spot-check the sequence-of-irreducibles identity on a prefix.
  const int check = std::min(t.horizon_, 48);
  for (int n = 1; n <= check; ++n) {
    BigInt acc = 0;
    for (int i = 1; i <= n; ++i) acc += t.f_[i] * t.s_[n - i];
    if (acc != t.s_[n])
      throw std::invalid_argument(
          "series violate s(n) = sum f(i) s(n-i) at n = " + std::to_string(n));
  }

  t.derive_allowed_inner_and_weights();
  return t;
}

const BigInt& CountTable::structures(int n) const {
  if (n < 0 || n > horizon_)
    throw std::out_of_range("s(n): n = " + std::to_string(n) +
                            " outside table horizon " + std::to_string(horizon_));
  return s_[n];
}

const BigInt& CountTable::irreducible(int n) const {
  if (n < 0 || n > horizon_)
    throw std::out_of_range("f(n): n = " + std::to_string(n) +
                            " outside table horizon " + std::to_string(horizon_));
  return f_[n];
}

const BigInt& CountTable::allowed_inner(int n) const {
  if (n < 0 || n > horizon_)
    throw std::out_of_range("a(n): n = " + std::to_string(n) +
                            " outside table horizon " + std::to_string(horizon_));
  return a_[n];
}

const BigInt& CountTable::rainbow_weight(int k) const {
  if (k < 1 || k > horizon_ + 1)
    throw std::out_of_range("b_k: k = " + std::to_string(k) +
                            " outside 1..horizon+1");
  return b_[k];
}

std::vector<BigInt> CountTable::bounded_structure_counts(int max_rainbow_len,
                                                         int N) const {
  if (max_rainbow_len < 0)
    throw std::invalid_argument("rainbow-length bound must be >= 0");
  if (N < 0 || N > horizon_)
    throw std::out_of_range("bounded counts: N outside table horizon");

  const int max_block = max_rainbow_len + 1;
  std::vector<BigInt> sb(N + 1, 0);
  sb[0] = 1;
  for (int n = 1; n <= N; ++n) {
    BigInt acc = 0;
    const int imax = std::min(n, max_block);
    for (int i = 1; i <= imax; ++i) {
      if (f_[i] != 0) acc += f_[i] * sb[n - i];
    }
    sb[n] = std::move(acc);
  }
  return sb;
}

}  // namespace rainbow
