#pragma once

#include <vector>

#include "rainbow/numeric.hpp"
#include "rainbow/params.hpp"

namespace rainbow {

/// Exact counting data for one (min_stack, min_arc) filtration up to a
/// fixed horizon N:
///
///   s(n)  structures over n vertices                   (n = 0..N)
///   f(n)  irreducible structures                       (n = 1..N)
///   a(n)  stack-enclosable inner structures            (n = 0..N)
///   b(k)  = [x^{k-1}] S(x)^2, the limit-law weights    (k = 1..N+1)
///
/// s is produced by the coefficient recurrence of the algebraic equation
/// x^{2r} S^2 - B S + A = 0 with A = 1 - x^2 + x^{2r} and
/// B = (1 - x) A + x^{2r} (1 + x + ... + x^{lambda-2}); f, a and b follow
/// from S = 1/(1 - F) and the stack decomposition. A built table is
/// immutable and safe to share across threads.
class CountTable {
 public:
  static CountTable build(const Params& params, int horizon);

  /// Reconstructs a table from its serialized series; a and b are
  /// recomputed and the sequence identity is spot-checked.
  static CountTable from_series(const Params& params, std::vector<BigInt> s,
                                std::vector<BigInt> f);

  const Params& params() const { return params_; }
  int horizon() const { return horizon_; }

  const BigInt& structures(int n) const;     // s(n), 0 <= n <= horizon
  const BigInt& irreducible(int n) const;    // f(n), 0 <= n <= horizon, f(0) = 0
  const BigInt& allowed_inner(int n) const;  // a(n), 0 <= n <= horizon
  const BigInt& rainbow_weight(int k) const; // b_k,  1 <= k <= horizon + 1

  /// s_{<=m+1}(n) for n = 0..N: structures all of whose rainbows have
  /// length <= max_rainbow_len, i.e. sequences of irreducible blocks of
  /// length <= max_rainbow_len + 1.
  std::vector<BigInt> bounded_structure_counts(int max_rainbow_len, int N) const;

 private:
  CountTable() = default;
  void derive_allowed_inner_and_weights();

  Params params_;
  int horizon_ = 0;
  std::vector<BigInt> s_;  // size horizon + 1
  std::vector<BigInt> f_;  // size horizon + 1, f_[0] = 0
  std::vector<BigInt> a_;  // size horizon + 1
  std::vector<BigInt> b_;  // size horizon + 2, b_[0] unused
};

}  // namespace rainbow
