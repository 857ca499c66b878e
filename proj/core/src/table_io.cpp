#include "rainbow/table_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace rainbow {

namespace {

constexpr int kFormatVersion = 1;

BigInt parse_bigint(const std::string& text, const char* what) {
  try {
    return BigInt(text);
  } catch (const std::exception&) {
    throw IoError(std::string("invalid integer in ") + what + ": '" + text + "'");
  }
}

}  // namespace

std::string table_to_json(const CountTable& table) {
  nlohmann::ordered_json j;
  j["format_version"] = kFormatVersion;
  j["params"] = {{"r", table.params().min_stack},
                 {"lambda", table.params().min_arc}};
  j["N"] = table.horizon();
  auto& s = j["s"] = nlohmann::json::array();
  for (int n = 0; n <= table.horizon(); ++n) s.push_back(table.structures(n).str());
  auto& f = j["f"] = nlohmann::json::array();
  for (int n = 1; n <= table.horizon(); ++n) f.push_back(table.irreducible(n).str());
  return j.dump(2);
}

CountTable table_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("table JSON parse: ") + e.what());
  }

  try {
    if (!j.contains("format_version") || j["format_version"].get<int>() != kFormatVersion)
      throw IoError("unsupported table format_version");

    Params params{j.at("params").at("r").get<int>(),
                  j.at("params").at("lambda").get<int>()};
    const int horizon = j.at("N").get<int>();
    if (horizon < 1) throw IoError("table horizon must be >= 1");

    const auto& sj = j.at("s");
    const auto& fj = j.at("f");
    if (static_cast<int>(sj.size()) != horizon + 1)
      throw IoError("s[] must have N+1 entries");
    if (static_cast<int>(fj.size()) != horizon)
      throw IoError("f[] must have N entries");

    std::vector<BigInt> s, f;
    s.reserve(horizon + 1);
    f.reserve(horizon + 1);
    for (const auto& e : sj) s.push_back(parse_bigint(e.get<std::string>(), "s[]"));
    f.push_back(0);
    for (const auto& e : fj) f.push_back(parse_bigint(e.get<std::string>(), "f[]"));

    return CountTable::from_series(params, std::move(s), std::move(f));
  } catch (const IoError&) {
    throw;
  } catch (const std::exception& e) {
    throw IoError(std::string("table JSON: ") + e.what());
  }
}

void save_table(const CountTable& table, const std::filesystem::path& path) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << table_to_json(table) << '\n';
    if (!out) throw IoError("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("rename failed: " + path.string() + ": " + ec.message());
}

CountTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return table_from_json(buf.str());
}

}  // namespace rainbow
