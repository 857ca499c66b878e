#pragma once

#include <map>

#include "rainbow/count_table.hpp"
#include "rainbow/numeric.hpp"

namespace rainbow {

enum class DistributionKind { Exact, Limit };

/// A pmf over integer outcomes with provenance. Zero-probability outcomes
/// are omitted. Exact tables carry rationals and sum to exactly 1.
template <class Prob>
struct DistributionTable {
  DistributionKind kind = DistributionKind::Exact;
  int n = -1;  // sequence length for exact tables, -1 for limit tables
  std::map<int, Prob> pmf;
};

using ExactDistribution = DistributionTable<Rational>;
using LimitDistribution = DistributionTable<HPReal>;

/// P(Y_n = y), the longest-rainbow law, from the restricted series
/// P(Y_n <= m) = s_{<=m+1}(n) / s(n). The arcless structure is assigned
/// Y_n = 0, so the support is {0} together with part of {min_arc..n-1}.
ExactDistribution exact_longest_pmf(const CountTable& table, int n);

/// P(Y_n = n - k) = b_k f(n-k+1) / s(n), exact whenever 2k <= n.
Rational exact_longest_pmf_fast(const CountTable& table, int n, int k);

/// g[n][b] = number of structures of length n with exactly b rainbows of
/// length k, for n = 0..N. Row n has entries b = 0..floor(n/(k+1)).
std::vector<std::vector<BigInt>> rainbow_marked_counts(const CountTable& table,
                                                       int k, int N);

/// P(X_{k,n} = b), the law of the number of length-k rainbows.
ExactDistribution exact_k_rainbow_pmf(const CountTable& table, int n, int k);

Rational exact_mean(const ExactDistribution& dist);
Rational exact_variance(const ExactDistribution& dist);

}  // namespace rainbow
