#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rainbow/count_table.hpp"
#include "rainbow/structure.hpp"

namespace rainbow {

/// Child seed for a parallel batch; splitmix64 over (master, index) so the
/// streams are uncorrelated and the derivation is stable across platforms.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Uniform integer in [0, bound) by rejection on the top bits; exact, no
/// floating-point bias. Requires bound >= 1.
BigInt uniform_below(std::mt19937_64& rng, const BigInt& bound);

/// Exact uniform generation over the structures counted by a table, by the
/// recursive method over the sequence-of-irreducibles decomposition:
///   (a) first block of length i with weight f(i) s(n-i);
///   (b) a length-1 block is an unpaired vertex;
///   (c) an irreducible block of length l >= 2 is a stack of t >= min_stack
///       arcs around an enclosable inner of length l - 2t, t chosen with
///       weight a(l - 2t);
///   (d) an enclosable inner of length L >= 2 is a reducible structure:
///       first block of length i < L with weight f(i) s(L-i), remainder
///       unconstrained. (An irreducible inner would extend the stack.)
/// All choices are drawn by exact big-integer thresholds.
class SamplerContext {
 public:
  SamplerContext(const CountTable& table, std::uint64_t seed);

  /// Uniform over the s(n) structures; requires n <= horizon.
  SecondaryStructure sample(int n);

  const CountTable& table() const { return *table_; }
  std::uint64_t seed() const { return seed_; }

 private:
  int choose_first_block(int len, const BigInt& total);
  void place_irreducible(int lo, int hi, std::vector<Arc>& arcs,
                         std::vector<std::pair<int, int>>& inner_queue);

  const CountTable* table_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

struct SampleRecord {
  int longest = 0;
  int second_longest = 0;
  int third_longest = 0;
  int n_rainbows = 0;
  int five_three_distance = 0;
  std::vector<int> k_rainbow_counts;  // aligned with the requested k list
};

struct SpectrumStats {
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<int> k_list;
  std::vector<SampleRecord> records;
  std::vector<std::string> dotbrackets;  // filled when keep_structures

  double mean_longest() const;
  double stddev_longest() const;
  double mean_second_longest() const;
  double stddev_second_longest() const;
  double mean_third_longest() const;
  double mean_k_count(std::size_t k_index) const;
};

/// Draws `count` structures and aggregates their spectra. Work is split
/// into fixed-size batches with seeds derived per batch index and merged
/// in index order, so the result does not depend on scheduling.
/// threads = 0 picks a hardware-based default.
SpectrumStats sample_batch(const CountTable& table, int n, int count,
                           const std::vector<int>& k_list, std::uint64_t seed,
                           int threads = 0, bool keep_structures = false);

struct ChiSquareResult {
  double statistic = 0;
  long dof = 0;
  double p_value = 0;
  bool pass = false;
  long draws = 0;
  long cells = 0;
};

/// Goodness-of-fit of sampled frequencies against the uniform law over all
/// s(n) structures; requires n enumerable (n <= 12) and draws >= 1.
ChiSquareResult chi_square_uniformity(const CountTable& table, int n,
                                      long draws, std::uint64_t seed,
                                      double significance = 0.001);

}  // namespace rainbow
