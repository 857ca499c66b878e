#include "cli_util.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include <rainbow/table_io.hpp>

namespace rainbow::cli {

namespace fs = std::filesystem;

std::optional<fs::path> resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return fs::path(flag);
  if (const char* env = std::getenv("RAINBOW_CACHE_DIR"); env && *env)
    return fs::path(env);
  return std::nullopt;
}

CountTable get_table(const Params& params, int horizon,
                     const std::optional<fs::path>& cache) {
  if (!cache) return CountTable::build(params, horizon);

  const fs::path file =
      *cache / ("table-r" + std::to_string(params.min_stack) + "-l" +
                std::to_string(params.min_arc) + "-N" + std::to_string(horizon) +
                ".json");
  if (fs::exists(file)) {
    try {
      CountTable t = load_table(file);
      if (t.params() == params && t.horizon() == horizon) return t;
    } catch (const IoError& e) {
      std::cerr << "warning: ignoring unreadable cache entry " << file << ": "
                << e.what() << "\n";
    }
  }
  CountTable t = CountTable::build(params, horizon);
  std::error_code ec;
  fs::create_directories(*cache, ec);
  if (!ec) {
    try {
      save_table(t, file);
    } catch (const IoError& e) {
      std::cerr << "warning: could not write cache entry: " << e.what() << "\n";
    }
  }
  return t;
}

void Table::add_row(std::vector<std::string> row) {
  rows.push_back(std::move(row));
}

namespace {

std::string render_csv(const Table& t) {
  std::ostringstream out;
  out << "# rainbow-csv " << t.schema << "\n";
  for (size_t i = 0; i < t.header.size(); ++i)
    out << (i ? "," : "") << t.header[i];
  out << "\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
  return out.str();
}

std::string render_json(const Table& t) {
  nlohmann::ordered_json doc;
  doc["schema"] = t.schema;
  auto& rows = doc["rows"] = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (size_t i = 0; i < t.header.size() && i < row.size(); ++i)
      obj[t.header[i]] = row[i];
    rows.push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

}  // namespace

void emit(const Table& table, const std::string& format,
          const std::string& out_path) {
  if (format != "csv" && format != "json")
    throw std::invalid_argument("format must be csv or json");
  write_text(format == "csv" ? render_csv(table) : render_json(table),
             out_path);
}

void write_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw IoError("cannot open " + out_path + " for writing");
  out << text;
  if (!out) throw IoError("write failed: " + out_path);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace rainbow::cli
