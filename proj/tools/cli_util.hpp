#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <rainbow/count_table.hpp>
#include <rainbow/numeric.hpp>

namespace rainbow::cli {

/// --cache-dir flag if set, else $RAINBOW_CACHE_DIR, else no caching.
std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag);

/// Builds the table, or round-trips it through the (r, lambda, N)-keyed
/// JSON cache when a cache directory is configured.
CountTable get_table(const Params& params, int horizon,
                     const std::optional<std::filesystem::path>& cache);

/// Tabular output: a versioned schema comment, a header row, string cells.
struct Table {
  std::string schema;  // e.g. "dist-longest-exact-v1"
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
};

/// Writes as CSV (schema comment + header + rows) or as a JSON array of
/// objects, to `out_path` or stdout when the path is empty.
void emit(const Table& table, const std::string& format,
          const std::string& out_path);

void write_text(const std::string& text, const std::string& out_path);

std::string format_double(double v);

}  // namespace rainbow::cli
