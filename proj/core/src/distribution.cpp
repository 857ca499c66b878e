#include "rainbow/distribution.hpp"

#include <stdexcept>
#include <string>

namespace rainbow {

namespace {

void check_exact_total(const ExactDistribution& dist) {
  Rational total = 0;
  for (const auto& [outcome, p] : dist.pmf) total += p;
  if (total != 1)
    throw std::logic_error("exact pmf does not sum to 1 (n = " +
                           std::to_string(dist.n) + ")");
}

}  // namespace

ExactDistribution exact_longest_pmf(const CountTable& table, int n) {
  if (n < 0 || n > table.horizon())
    throw std::out_of_range("exact_longest_pmf: n outside table horizon");

  ExactDistribution dist;
  dist.kind = DistributionKind::Exact;
  dist.n = n;

  const BigInt& total = table.structures(n);
  // Only the arcless structure has every rainbow length <= 0.
  dist.pmf[0] = Rational(BigInt(1), total);

  BigInt below = 1;  // s_{<=y}(n), starting at s_{<=1}(n) = 1
  for (int y = 1; y <= n - 1; ++y) {
    if (table.irreducible(y + 1) == 0) continue;  // no block of length y+1
    const BigInt at_most_y = table.bounded_structure_counts(y, n)[n];
    BigInt diff = at_most_y - below;
    if (diff < 0) throw std::logic_error("bounded counts not monotone");
    if (diff != 0) dist.pmf[y] = Rational(diff, total);
    below = at_most_y;
  }

  check_exact_total(dist);
  return dist;
}

Rational exact_longest_pmf_fast(const CountTable& table, int n, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (2 * k > n)
    throw std::invalid_argument(
        "exact_longest_pmf_fast requires k <= n/2; the identity is not "
        "guaranteed beyond");
  if (n > table.horizon())
    throw std::out_of_range("exact_longest_pmf_fast: n outside table horizon");

  return Rational(table.rainbow_weight(k) * table.irreducible(n - k + 1),
                  table.structures(n));
}

std::vector<std::vector<BigInt>> rainbow_marked_counts(const CountTable& table,
                                                       int k, int N) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (N < 0 || N > table.horizon())
    throw std::out_of_range("rainbow_marked_counts: N outside table horizon");

  const int span = k + 1;  // vertices consumed by a length-k rainbow block
  std::vector<std::vector<BigInt>> g(N + 1);
  g[0] = {BigInt(1)};
  for (int n = 1; n <= N; ++n) {
    const int bmax = n / span;
    g[n].assign(bmax + 1, 0);
    for (int i = 1; i <= n; ++i) {
      if (i == span) continue;  // handled by the marked term
      const BigInt& fi = table.irreducible(i);
      if (fi == 0) continue;
      const auto& prev = g[n - i];
      const int blim = std::min<int>(bmax, static_cast<int>(prev.size()) - 1);
      for (int b = 0; b <= blim; ++b) g[n][b] += fi * prev[b];
    }
    if (n >= span && table.irreducible(span) != 0) {
      const BigInt& fk = table.irreducible(span);
      const auto& prev = g[n - span];
      const int blim =
          std::min<int>(bmax, static_cast<int>(prev.size()));
      for (int b = 1; b <= blim; ++b) g[n][b] += fk * prev[b - 1];
    }
  }
  return g;
}

ExactDistribution exact_k_rainbow_pmf(const CountTable& table, int n, int k) {
  if (n < 0 || n > table.horizon())
    throw std::out_of_range("exact_k_rainbow_pmf: n outside table horizon");

  const auto g = rainbow_marked_counts(table, k, n);
  const BigInt& total = table.structures(n);

  ExactDistribution dist;
  dist.kind = DistributionKind::Exact;
  dist.n = n;
  for (int b = 0; b < static_cast<int>(g[n].size()); ++b) {
    if (g[n][b] != 0) dist.pmf[b] = Rational(g[n][b], total);
  }
  check_exact_total(dist);
  return dist;
}

Rational exact_mean(const ExactDistribution& dist) {
  Rational m = 0;
  for (const auto& [outcome, p] : dist.pmf) m += p * outcome;
  return m;
}

Rational exact_variance(const ExactDistribution& dist) {
  const Rational m = exact_mean(dist);
  Rational v = 0;
  for (const auto& [outcome, p] : dist.pmf) {
    Rational d = Rational(outcome) - m;
    v += p * d * d;
  }
  return v;
}

}  // namespace rainbow
