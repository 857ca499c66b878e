#include "rainbow/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <boost/math/distributions/chi_squared.hpp>

#include "rainbow/enumerate.hpp"

namespace rainbow {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 0x9E3779B97F4A7C15ull));
}

BigInt uniform_below(std::mt19937_64& rng, const BigInt& bound) {
  if (bound < 1) throw std::invalid_argument("uniform_below: bound must be >= 1");
  if (bound == 1) return 0;
  const unsigned bits = boost::multiprecision::msb(bound) + 1;
  const unsigned words = (bits + 63) / 64;
  const unsigned top_shift = words * 64 - bits;
  for (;;) {
    BigInt value = 0;
    for (unsigned w = 0; w < words; ++w) {
      value <<= 64;
      value |= BigInt(rng());
    }
    value >>= top_shift;
    if (value < bound) return value;
  }
}

SamplerContext::SamplerContext(const CountTable& table, std::uint64_t seed)
    : table_(&table), seed_(seed), rng_(seed) {}

// Walks the cumulative weights f(i) s(len - i); total must equal their sum.
int SamplerContext::choose_first_block(int len, const BigInt& total) {
  BigInt u = uniform_below(rng_, total);
  for (int i = 1; i <= len; ++i) {
    const BigInt& fi = table_->irreducible(i);
    if (fi == 0) continue;
    BigInt w = fi * table_->structures(len - i);
    if (u < w) return i;
    u -= w;
  }
  throw std::logic_error("block choice walked past its total");
}

void SamplerContext::place_irreducible(
    int lo, int hi, std::vector<Arc>& arcs,
    std::vector<std::pair<int, int>>& inner_queue) {
  const int len = hi - lo + 1;
  const int r = table_->params().min_stack;

  // Stack length t >= r with weight a(len - 2t); the weights sum to f(len).
  BigInt u = uniform_below(rng_, table_->irreducible(len));
  int t = -1;
  for (int cand = r; 2 * cand <= len; ++cand) {
    const BigInt& w = table_->allowed_inner(len - 2 * cand);
    if (w == 0) continue;
    if (u < w) {
      t = cand;
      break;
    }
    u -= w;
  }
  if (t < 0) throw std::logic_error("stack choice walked past f(len)");

  for (int q = 0; q < t; ++q) arcs.push_back({lo + q, hi - q});
  if (len - 2 * t >= 2) inner_queue.push_back({lo + t, hi - t});
}

SecondaryStructure SamplerContext::sample(int n) {
  if (n < 0 || n > table_->horizon())
    throw std::out_of_range("sample: n outside table horizon");

  std::vector<Arc> arcs;
  std::vector<std::pair<int, int>> inner_queue;

  // Top-level sequence of irreducible blocks.
  int lo = 1;
  int remaining = n;
  while (remaining > 0) {
    int i = choose_first_block(remaining, table_->structures(remaining));
    if (i > 1) place_irreducible(lo, lo + i - 1, arcs, inner_queue);
    lo += i;
    remaining -= i;
  }

  // Enclosed reducible fills: the first block is conditioned on i < L so
  // the stack above stays maximal; the remainder is unconstrained.
  while (!inner_queue.empty()) {
    auto [ilo, ihi] = inner_queue.back();
    inner_queue.pop_back();
    int len = ihi - ilo + 1;

    const BigInt reducible = table_->allowed_inner(len);
    int first = choose_first_block(len, reducible);  // never == len
    if (first > 1) place_irreducible(ilo, ilo + first - 1, arcs, inner_queue);
    ilo += first;
    len -= first;

    while (len > 0) {
      int i = choose_first_block(len, table_->structures(len));
      if (i > 1) place_irreducible(ilo, ilo + i - 1, arcs, inner_queue);
      ilo += i;
      len -= i;
    }
  }

  return SecondaryStructure(n, std::move(arcs));
}

double SpectrumStats::mean_longest() const {
  double acc = 0;
  for (const auto& r : records) acc += r.longest;
  return records.empty() ? 0.0 : acc / static_cast<double>(records.size());
}

namespace {

double stddev_of(const std::vector<SampleRecord>& records,
                 int SampleRecord::* field, double mean) {
  if (records.size() < 2) return 0.0;
  double acc = 0;
  for (const auto& r : records) {
    double d = static_cast<double>(r.*field) - mean;
    acc += d * d;
  }
  return std::sqrt(acc / static_cast<double>(records.size() - 1));
}

}  // namespace

double SpectrumStats::stddev_longest() const {
  return stddev_of(records, &SampleRecord::longest, mean_longest());
}

double SpectrumStats::mean_second_longest() const {
  double acc = 0;
  for (const auto& r : records) acc += r.second_longest;
  return records.empty() ? 0.0 : acc / static_cast<double>(records.size());
}

double SpectrumStats::stddev_second_longest() const {
  return stddev_of(records, &SampleRecord::second_longest,
                   mean_second_longest());
}

double SpectrumStats::mean_third_longest() const {
  double acc = 0;
  for (const auto& r : records) acc += r.third_longest;
  return records.empty() ? 0.0 : acc / static_cast<double>(records.size());
}

double SpectrumStats::mean_k_count(std::size_t k_index) const {
  double acc = 0;
  for (const auto& r : records) acc += r.k_rainbow_counts.at(k_index);
  return records.empty() ? 0.0 : acc / static_cast<double>(records.size());
}

SpectrumStats sample_batch(const CountTable& table, int n, int count,
                           const std::vector<int>& k_list, std::uint64_t seed,
                           int threads, bool keep_structures) {
  if (count < 1) throw std::invalid_argument("sample_batch: count must be >= 1");
  if (n < 0 || n > table.horizon())
    throw std::out_of_range("sample_batch: n outside table horizon");

  constexpr int kBatchSize = 1024;  // fixed so results are thread-agnostic
  const int n_batches = (count + kBatchSize - 1) / kBatchSize;

  struct BatchOut {
    std::vector<SampleRecord> records;
    std::vector<std::string> dotbrackets;
  };
  std::vector<BatchOut> outs(n_batches);

  auto run_batch = [&](int batch) {
    const int begin = batch * kBatchSize;
    const int size = std::min(kBatchSize, count - begin);
    SamplerContext ctx(table, derive_seed(seed, batch));
    BatchOut& out = outs[batch];
    out.records.reserve(size);
    for (int j = 0; j < size; ++j) {
      SecondaryStructure st = ctx.sample(n);
      RainbowSpectrum spec = rainbow_spectrum(st);
      SampleRecord rec;
      rec.longest = spec.longest(1);
      rec.second_longest = spec.longest(2);
      rec.third_longest = spec.longest(3);
      rec.n_rainbows = static_cast<int>(spec.rainbow_lengths.size());
      rec.five_three_distance = spec.five_three_distance;
      rec.k_rainbow_counts.reserve(k_list.size());
      for (int k : k_list) {
        rec.k_rainbow_counts.push_back(static_cast<int>(
            std::count(spec.rainbow_lengths.begin(), spec.rainbow_lengths.end(), k)));
      }
      out.records.push_back(std::move(rec));
      if (keep_structures) out.dotbrackets.push_back(to_dotbracket(st));
    }
  };

  int n_threads = threads > 0
                      ? threads
                      : static_cast<int>(std::min<unsigned>(
                            std::max(1u, std::thread::hardware_concurrency()), 8));
  n_threads = std::min(n_threads, n_batches);

  if (n_threads <= 1) {
    for (int b = 0; b < n_batches; ++b) run_batch(b);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) {
      pool.emplace_back([&] {
        for (int b = next.fetch_add(1); b < n_batches; b = next.fetch_add(1))
          run_batch(b);
      });
    }
    for (auto& th : pool) th.join();
  }

  SpectrumStats stats;
  stats.n = n;
  stats.seed = seed;
  stats.k_list = k_list;
  stats.records.reserve(count);
  for (auto& out : outs) {
    for (auto& rec : out.records) stats.records.push_back(std::move(rec));
    for (auto& db : out.dotbrackets) stats.dotbrackets.push_back(std::move(db));
  }
  return stats;
}

ChiSquareResult chi_square_uniformity(const CountTable& table, int n,
                                      long draws, std::uint64_t seed,
                                      double significance) {
  if (draws < 1) throw std::invalid_argument("chi_square: draws must be >= 1");
  if (n < 1 || n > 12)
    throw std::invalid_argument(
        "chi_square: n must be enumerable (1 <= n <= 12)");
  if (n > table.horizon())
    throw std::out_of_range("chi_square: n outside table horizon");

  std::unordered_map<std::string, long> index;
  long cells = 0;
  enumerate_all(table.params(), n, [&](const SecondaryStructure& st) {
    index.emplace(to_dotbracket(st), cells++);
  });
  if (BigInt(cells) != table.structures(n))
    throw std::logic_error("enumerator and count table disagree on s(n)");

  std::vector<long> observed(cells, 0);
  SamplerContext ctx(table, seed);
  for (long d = 0; d < draws; ++d) {
    auto it = index.find(to_dotbracket(ctx.sample(n)));
    if (it == index.end())
      throw std::logic_error("sampler produced a structure outside s(n)");
    ++observed[it->second];
  }

  const double expected =
      static_cast<double>(draws) / static_cast<double>(cells);
  double stat = 0;
  for (long c = 0; c < cells; ++c) {
    double d = static_cast<double>(observed[c]) - expected;
    stat += d * d / expected;
  }

  ChiSquareResult result;
  result.statistic = stat;
  result.dof = cells - 1;
  result.draws = draws;
  result.cells = cells;
  boost::math::chi_squared_distribution<double> dist(
      static_cast<double>(result.dof));
  result.p_value = boost::math::cdf(boost::math::complement(dist, stat));
  result.pass = result.p_value > significance;
  return result;
}

}  // namespace rainbow
