#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rainbow/count_table.hpp"

namespace rainbow {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Versioned JSON document {format_version, params, N, s[], f[]} with the
/// big integers as decimal strings. a and b are recomputed on load.
std::string table_to_json(const CountTable& table);
CountTable table_from_json(std::string_view text);

void save_table(const CountTable& table, const std::filesystem::path& path);
CountTable load_table(const std::filesystem::path& path);

}  // namespace rainbow
