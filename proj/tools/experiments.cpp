#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <rainbow/asymptotics.hpp>
#include <rainbow/sampler.hpp>

namespace rainbow::cli {

namespace {

// Each experiment pairs the theoretical curve with Monte Carlo columns so
// plotting is a single external step.

Table fig4(ExperimentConfig cfg) {
  if (cfg.n_list.empty()) cfg.n_list = {100, 200, 300, 400};
  const int horizon = *std::max_element(cfg.n_list.begin(), cfg.n_list.end());
  auto table = get_table(cfg.params, horizon, cfg.cache);
  auto consts = singular_constants(cfg.params, cfg.digits);

  Table out;
  out.schema = "experiment-fig4-v1";
  out.header = {"n", "theory_mean", "theory_sd", "sample_mean", "sample_sd"};
  for (int n : cfg.n_list) {
    auto m = lemma1_moments(consts, n);
    auto stats = sample_batch(table, n, cfg.count, {}, cfg.seed, cfg.threads);
    PrecisionGuard guard(cfg.digits + 10);
    out.add_row({std::to_string(n), m.mean.str(10), HPReal(sqrt(m.variance)).str(10),
                 format_double(stats.mean_longest()),
                 format_double(stats.stddev_longest())});
  }
  return out;
}

Table fig6(ExperimentConfig cfg) {
  if (cfg.n == 0) cfg.n = 400;
  if (cfg.kmax == 0) cfg.kmax = 20;
  auto table = get_table(cfg.params, cfg.n, cfg.cache);
  auto consts = singular_constants(cfg.params, cfg.digits);
  auto stats = sample_batch(table, cfg.n, cfg.count, {}, cfg.seed, cfg.threads);

  std::map<int, long> hist;
  for (const auto& rec : stats.records) ++hist[cfg.n - rec.longest];

  Table out;
  out.schema = "experiment-fig6-v1";
  out.header = {"k", "limit_probability", "sample_frequency"};
  for (int k = 1; k <= cfg.kmax; ++k) {
    double freq = hist.count(k)
                      ? static_cast<double>(hist[k]) / static_cast<double>(cfg.count)
                      : 0.0;
    out.add_row({std::to_string(k), limit_longest_pmf(consts, table, k).str(10),
                 format_double(freq)});
  }
  return out;
}

Table fig9(ExperimentConfig cfg) {
  if (cfg.n_list.empty()) cfg.n_list = {100, 200, 300, 400};
  const int horizon = *std::max_element(cfg.n_list.begin(), cfg.n_list.end());
  auto table = get_table(cfg.params, horizon, cfg.cache);
  auto consts = singular_constants(cfg.params, cfg.digits);

  Table out;
  out.schema = "experiment-fig9-v1";
  out.header = {"n",         "alpha_sqrt_n",   "sample_mean_second",
                "sample_sd_second", "sample_mean_longest", "top2_mean_sum"};
  for (int n : cfg.n_list) {
    auto stats = sample_batch(table, n, cfg.count, {}, cfg.seed, cfg.threads);
    PrecisionGuard guard(cfg.digits + 10);
    HPReal asn = consts.alpha * sqrt(HPReal(n));
    double m1 = stats.mean_longest();
    double m2 = stats.mean_second_longest();
    out.add_row({std::to_string(n), asn.str(10), format_double(m2),
                 format_double(stats.stddev_second_longest()),
                 format_double(m1), format_double(m1 + m2)});
  }
  return out;
}

Table fig12(ExperimentConfig cfg) {
  if (!cfg.params_given) cfg.params = {4, 4};
  if (cfg.n_list.empty()) cfg.n_list = {600, 800, 1000};
  if (cfg.kmax == 0) cfg.kmax = 50;
  const int horizon =
      std::max(*std::max_element(cfg.n_list.begin(), cfg.n_list.end()),
               cfg.kmax + 1);
  auto table = get_table(cfg.params, horizon, cfg.cache);
  auto consts = singular_constants(cfg.params, cfg.digits);

  std::vector<int> k_list;
  for (int k = 1; k <= cfg.kmax; ++k) k_list.push_back(k);

  Table out;
  out.schema = "experiment-fig12-v1";
  out.header = {"k", "limit_mean"};
  for (int n : cfg.n_list)
    out.header.push_back("sample_mean_n" + std::to_string(n));

  std::vector<SpectrumStats> stats;
  for (int n : cfg.n_list)
    stats.push_back(sample_batch(table, n, cfg.count, k_list, cfg.seed,
                                 cfg.threads));

  for (int k = 1; k <= cfg.kmax; ++k) {
    auto m = expected_rainbows_k(consts, table.irreducible(k + 1), k);
    std::vector<std::string> row = {std::to_string(k), m.mean.str(10)};
    for (auto& s : stats)
      row.push_back(format_double(s.mean_k_count(k - 1)));
    out.add_row(std::move(row));
  }
  return out;
}

Table table1_uniform(ExperimentConfig cfg) {
  if (!cfg.params_given) cfg.params = {4, 4};
  auto table = get_table(cfg.params, 500, cfg.cache);
  auto consts = singular_constants(cfg.params, cfg.digits);

  Table out;
  out.schema = "experiment-table1-uniform-v1";
  out.header = {"k", "probability"};
  for (int t = 100; t <= 500; t += 100)
    out.add_row({std::to_string(t), limit_longest_cdf(consts, table, t).str(10)});
  return out;
}

}  // namespace

std::vector<std::string> experiment_names() {
  return {"fig4", "fig6", "fig9", "fig12", "table1-uniform"};
}

Table run_experiment(const std::string& name, const ExperimentConfig& config) {
  if (name == "fig4") return fig4(config);
  if (name == "fig6") return fig6(config);
  if (name == "fig9") return fig9(config);
  if (name == "fig12") return fig12(config);
  if (name == "table1-uniform") return table1_uniform(config);

  std::string known;
  for (const auto& n : experiment_names()) known += " " + n;
  throw std::invalid_argument("unknown experiment '" + name +
                              "'; available:" + known);
}

}  // namespace rainbow::cli
