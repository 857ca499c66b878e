#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cli_util.hpp"

namespace rainbow::cli {

struct ExperimentConfig {
  Params params{1, 1};
  bool params_given = false;
  std::vector<int> n_list;
  int n = 0;
  int count = 10000;
  std::uint64_t seed = 1;
  int kmax = 0;
  int digits = 30;
  int threads = 0;
  std::optional<std::filesystem::path> cache;
};

std::vector<std::string> experiment_names();

/// Builds the named experiment's CSV bundle; throws std::invalid_argument
/// for an unknown name.
Table run_experiment(const std::string& name, const ExperimentConfig& config);

}  // namespace rainbow::cli
