// rainbow: exact counts, exact and limit rainbow-spectrum distributions,
// asymptotic constants, exact uniform sampling, and spectrum analysis of
// dot-bracket files, with named experiments emitting theory-vs-simulation
// CSV bundles.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <rainbow/asymptotics.hpp>
#include <rainbow/count_table.hpp>
#include <rainbow/distribution.hpp>
#include <rainbow/polynomial.hpp>
#include <rainbow/sampler.hpp>
#include <rainbow/structure.hpp>
#include <rainbow/table_io.hpp>

#include "cli_util.hpp"
#include "experiments.hpp"

namespace {

using namespace rainbow;
using cli::Table;

struct Common {
  int r = 1;
  int lambda = 1;
  int digits = 30;
  std::string cache_flag;
  std::string out;
  std::string format = "csv";

  Params params() const { return {r, lambda}; }
  std::optional<std::filesystem::path> cache() const {
    return cli::resolve_cache_dir(cache_flag);
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_output = true) {
  cmd->add_option("--r", c.r, "minimum stack length")->check(CLI::PositiveNumber);
  cmd->add_option("--lambda", c.lambda, "minimum arc length")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--digits", c.digits, "output precision in decimal digits")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--cache-dir", c.cache_flag,
                  "count-table cache directory (default $RAINBOW_CACHE_DIR)");
  if (with_output) {
    cmd->add_option("--out", c.out, "output path (default stdout)");
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
  }
}

// --- count -----------------------------------------------------------------

void run_count(const Common& c, int n, bool irreducible, int m) {
  if (irreducible && m >= 0)
    throw std::invalid_argument("--irreducible and --m are mutually exclusive");
  auto table = cli::get_table(c.params(), std::max(n, 1), c.cache());
  if (m >= 0) {
    std::cout << table.bounded_structure_counts(m, n)[n].str() << "\n";
    return;
  }
  const BigInt& value = irreducible ? table.irreducible(n) : table.structures(n);
  std::cout << value.str() << "\n";
}

// --- dist ------------------------------------------------------------------

struct DistFlags {
  bool exact = false;
  bool limit = false;
  int n = -1;
  int k = 0;
  int kmax = 0;
  int bmax = 0;
};

void require_mode(const DistFlags& d) {
  if (d.exact == d.limit)
    throw std::invalid_argument("choose exactly one of --exact / --limit");
  if (d.limit && d.n >= 0)
    std::cerr << "warning: --n is ignored in limit mode\n";
}

void run_dist_longest(const Common& c, const DistFlags& d) {
  require_mode(d);
  Table out;
  if (d.exact) {
    if (d.n < 0) throw std::invalid_argument("--exact requires --n");
    auto table = cli::get_table(c.params(), std::max(d.n, 1), c.cache());
    auto dist = exact_longest_pmf(table, d.n);
    out.schema = "dist-longest-exact-v1";
    out.header = {"outcome", "probability", "numerator", "denominator",
                  "cumulative"};
    Rational cumulative = 0;
    for (const auto& [y, p] : dist.pmf) {
      cumulative += p;
      out.add_row({std::to_string(y), decimal_string(p, c.digits),
                   numerator(p).str(), denominator(p).str(),
                   decimal_string(cumulative, c.digits)});
    }
  } else {
    if (d.kmax < 1) throw std::invalid_argument("--limit requires --kmax >= 1");
    auto table = cli::get_table(c.params(), std::max(d.kmax - 1, 1), c.cache());
    auto consts = singular_constants(c.params(), c.digits);
    out.schema = "dist-longest-limit-v1";
    out.header = {"k", "probability", "cumulative"};
    PrecisionGuard guard(consts.working_digits);
    HPReal cumulative = 0;
    for (int k = 1; k <= d.kmax; ++k) {
      HPReal p = limit_longest_pmf(consts, table, k);
      cumulative += p;
      out.add_row({std::to_string(k), p.str(c.digits),
                   cumulative.str(c.digits)});
    }
  }
  cli::emit(out, c.format, c.out);
}

void run_dist_krainbow(const Common& c, const DistFlags& d) {
  require_mode(d);
  if (d.k < 1) throw std::invalid_argument("--k >= 1 is required");
  Table out;
  if (d.exact) {
    if (d.n < 0) throw std::invalid_argument("--exact requires --n");
    auto table = cli::get_table(c.params(), std::max(d.n, 1), c.cache());
    auto dist = exact_k_rainbow_pmf(table, d.n, d.k);
    out.schema = "dist-krainbow-exact-v1";
    out.header = {"b", "probability", "numerator", "denominator"};
    for (const auto& [b, p] : dist.pmf)
      out.add_row({std::to_string(b), decimal_string(p, c.digits),
                   numerator(p).str(), denominator(p).str()});
  } else {
    if (d.bmax < 0) throw std::invalid_argument("--bmax must be >= 0");
    auto table = cli::get_table(c.params(), d.k + 1, c.cache());
    auto consts = singular_constants(c.params(), c.digits);
    HPReal t = nb_parameter(consts, table.irreducible(d.k + 1), d.k);
    out.schema = "dist-krainbow-limit-v1";
    out.header = {"b", "probability"};
    for (int b = 0; b <= d.bmax; ++b)
      out.add_row({std::to_string(b), nb_limit_pmf(t, b).str(c.digits)});
  }
  cli::emit(out, c.format, c.out);
}

// --- asym ------------------------------------------------------------------

void run_asym(const Common& c) {
  auto consts = singular_constants(c.params(), c.digits);
  if (c.format == "json") {
    cli::write_text(constants_to_json(consts) + "\n", c.out);
    return;
  }
  Table out;
  out.schema = "asym-constants-v1";
  out.header = {"name", "value"};
  PrecisionGuard guard(consts.working_digits);
  out.add_row({"r", std::to_string(c.r)});
  out.add_row({"lambda", std::to_string(c.lambda)});
  out.add_row({"digits", std::to_string(c.digits)});
  out.add_row({"rho", consts.rho.str(c.digits)});
  out.add_row({"tau", consts.tau.str(c.digits)});
  out.add_row({"delta_hat", consts.delta_hat.str(c.digits)});
  out.add_row({"c_F", consts.c_f.str(c.digits)});
  out.add_row({"c", consts.c.str(c.digits)});
  out.add_row({"alpha", consts.alpha.str(c.digits)});
  out.add_row({"beta", consts.beta.str(c.digits)});
  cli::emit(out, "csv", c.out);
}

// --- sample ----------------------------------------------------------------

void run_sample(const Common& c, int n, int count, std::uint64_t seed,
                const std::vector<int>& k_list, const std::string& stats_path,
                int threads) {
  auto table = cli::get_table(c.params(), std::max(n, 1), c.cache());
  auto stats = sample_batch(table, n, count, k_list, seed, threads,
                            /*keep_structures=*/true);

  std::string lines;
  for (const auto& db : stats.dotbrackets) {
    lines += db;
    lines += '\n';
  }
  cli::write_text(lines, c.out);

  if (!stats_path.empty()) {
    Table out;
    out.schema = "sample-stats-v1";
    out.header = {"sample_id",  "longest",
                  "second_longest", "third_longest",
                  "n_rainbows", "five_three_distance"};
    for (int k : k_list) out.header.push_back("x_" + std::to_string(k));
    for (size_t i = 0; i < stats.records.size(); ++i) {
      const auto& r = stats.records[i];
      std::vector<std::string> row = {
          std::to_string(i),
          std::to_string(r.longest),
          std::to_string(r.second_longest),
          std::to_string(r.third_longest),
          std::to_string(r.n_rainbows),
          std::to_string(r.five_three_distance)};
      for (int x : r.k_rainbow_counts) row.push_back(std::to_string(x));
      out.add_row(std::move(row));
    }
    cli::emit(out, c.format, stats_path);
  }
}

// --- spectrum ----------------------------------------------------------------

std::vector<SecondaryStructure> read_dotbracket_stream(std::istream& in) {
  std::vector<SecondaryStructure> result;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '>') continue;
    bool blank = true;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (blank) continue;
    try {
      result.push_back(parse_dotbracket(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(),
                       e.position());
    }
  }
  return result;
}

void run_spectrum(const Common& c, const std::string& in_path,
                  const std::vector<int>& k_list) {
  std::vector<SecondaryStructure> structures;
  if (in_path == "-") {
    structures = read_dotbracket_stream(std::cin);
  } else {
    std::ifstream in(in_path);
    if (!in) throw IoError("cannot open " + in_path);
    structures = read_dotbracket_stream(in);
  }

  Table out;
  if (k_list.empty()) {
    out.schema = "spectrum-v1";
    out.header = {"index",      "n",
                  "longest",    "second_longest",
                  "third_longest", "n_rainbows",
                  "external_unpaired", "five_three_distance"};
    for (size_t i = 0; i < structures.size(); ++i) {
      auto spec = rainbow_spectrum(structures[i]);
      out.add_row({std::to_string(i), std::to_string(structures[i].length()),
                   std::to_string(spec.longest(1)), std::to_string(spec.longest(2)),
                   std::to_string(spec.longest(3)),
                   std::to_string(spec.rainbow_lengths.size()),
                   std::to_string(spec.external_unpaired),
                   std::to_string(spec.five_three_distance)});
    }
  } else {
    // Long-rainbow comparison table: P(Y >= n - k) over the input corpus.
    out.schema = "spectrum-long-rainbow-v1";
    out.header = {"k", "p_long"};
    if (structures.empty()) throw std::invalid_argument("empty input corpus");
    for (int k : k_list) {
      long hits = 0;
      for (const auto& st : structures) {
        if (rainbow_spectrum(st).longest(1) >= st.length() - k) ++hits;
      }
      out.add_row({std::to_string(k),
                   cli::format_double(static_cast<double>(hits) /
                                      static_cast<double>(structures.size()))});
    }
  }
  cli::emit(out, c.format, c.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rainbow-spectrum statistics of RNA secondary structures: exact "
      "counts, exact and limit distributions, asymptotic constants, exact "
      "uniform sampling, and dot-bracket spectrum analysis"};
  app.require_subcommand(1);

  // count
  Common count_c;
  int count_n = 0;
  int count_m = -1;
  bool count_irreducible = false;
  auto* cmd_count = app.add_subcommand("count", "print s(n) or f(n)");
  add_common(cmd_count, count_c, /*with_output=*/false);
  cmd_count->add_option("--n", count_n, "sequence length")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_count->add_flag("--irreducible", count_irreducible,
                      "count irreducible structures f(n) instead of s(n)");
  cmd_count->add_option(
      "--m", count_m, "count only structures whose rainbows have length <= m");
  cmd_count->callback(
      [&] { run_count(count_c, count_n, count_irreducible, count_m); });

  // dist
  auto* cmd_dist = app.add_subcommand("dist", "exact or limit distributions");
  cmd_dist->require_subcommand(1);
  Common dist_c;
  DistFlags dist_f;
  auto* dist_longest =
      cmd_dist->add_subcommand("longest", "longest-rainbow law Y_n");
  auto* dist_krainbow =
      cmd_dist->add_subcommand("krainbow", "length-k rainbow count law X_{k,n}");
  for (CLI::App* sub : {dist_longest, dist_krainbow}) {
    add_common(sub, dist_c);
    sub->add_flag("--exact", dist_f.exact, "exact finite-n law");
    sub->add_flag("--limit", dist_f.limit, "n -> infinity limit law");
    sub->add_option("--n", dist_f.n, "sequence length (exact mode)");
  }
  dist_longest->add_option("--kmax", dist_f.kmax,
                           "largest k = n - Y_n in limit mode");
  dist_krainbow->add_option("--k", dist_f.k, "rainbow length k")->required();
  dist_krainbow->add_option("--bmax", dist_f.bmax,
                            "largest rainbow count in limit mode");
  dist_longest->callback([&] { run_dist_longest(dist_c, dist_f); });
  dist_krainbow->callback([&] { run_dist_krainbow(dist_c, dist_f); });

  // asym
  Common asym_c;
  asym_c.format = "json";
  auto* cmd_asym =
      app.add_subcommand("asym", "dominant-singularity constants as JSON");
  add_common(cmd_asym, asym_c);
  cmd_asym->callback([&] { run_asym(asym_c); });

  // sample
  Common sample_c;
  int sample_n = 0, sample_count = 10, sample_threads = 0;
  std::uint64_t sample_seed = 1;
  std::vector<int> sample_ks;
  std::string sample_stats;
  auto* cmd_sample =
      app.add_subcommand("sample", "exact uniform sampling to dot-bracket");
  add_common(cmd_sample, sample_c);
  cmd_sample->add_option("--n", sample_n, "sequence length")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_sample->add_option("--count", sample_count, "number of samples")
      ->check(CLI::PositiveNumber);
  cmd_sample->add_option("--seed", sample_seed, "PRNG seed");
  cmd_sample->add_option("--k", sample_ks,
                         "track counts of length-k rainbows (repeatable)");
  cmd_sample->add_option("--stats", sample_stats, "write per-sample spectrum CSV");
  cmd_sample->add_option("--threads", sample_threads,
                         "worker threads (0 = auto; result is identical)");
  cmd_sample->callback([&] {
    run_sample(sample_c, sample_n, sample_count, sample_seed, sample_ks,
               sample_stats, sample_threads);
  });

  // spectrum
  Common spectrum_c;
  std::string spectrum_in;
  std::vector<int> spectrum_ks;
  auto* cmd_spectrum = app.add_subcommand(
      "spectrum", "rainbow spectra of a dot-bracket file ('-' = stdin)");
  add_common(cmd_spectrum, spectrum_c);
  cmd_spectrum->add_option("--in", spectrum_in, "input dot-bracket file")
      ->required();
  cmd_spectrum->add_option(
      "--k", spectrum_ks,
      "emit P(Y >= n-k) comparison rows instead (repeatable)");
  cmd_spectrum->callback(
      [&] { run_spectrum(spectrum_c, spectrum_in, spectrum_ks); });

  // experiment
  Common exp_c;
  cli::ExperimentConfig exp_cfg;
  std::string exp_name;
  std::vector<int> exp_nlist;
  auto* cmd_exp = app.add_subcommand(
      "experiment", "named theory-vs-simulation CSV bundles");
  add_common(cmd_exp, exp_c);
  cmd_exp->add_option("name", exp_name, "fig4 | fig6 | fig9 | fig12 | table1-uniform")
      ->required();
  cmd_exp->add_option("--n", exp_cfg.n, "sequence length");
  cmd_exp->add_option("--n-list", exp_nlist, "sequence lengths")->delimiter(',');
  cmd_exp->add_option("--count", exp_cfg.count, "Monte Carlo sample size")
      ->check(CLI::PositiveNumber);
  cmd_exp->add_option("--seed", exp_cfg.seed, "PRNG seed");
  cmd_exp->add_option("--kmax", exp_cfg.kmax, "largest k");
  cmd_exp->add_option("--threads", exp_cfg.threads, "worker threads (0 = auto)");
  cmd_exp->callback([&] {
    exp_cfg.params = exp_c.params();
    exp_cfg.params_given =
        cmd_exp->count("--r") > 0 || cmd_exp->count("--lambda") > 0;
    exp_cfg.n_list = exp_nlist;
    exp_cfg.digits = exp_c.digits;
    exp_cfg.cache = exp_c.cache();
    cli::emit(cli::run_experiment(exp_name, exp_cfg), exp_c.format, exp_c.out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const rainbow::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const rainbow::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const rainbow::ComputationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const rainbow::RootIsolationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
