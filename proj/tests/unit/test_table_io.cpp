#include <doctest.h>

#include <rainbow/table_io.hpp>

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>

using namespace rainbow;

TEST_SUITE("series") {

TEST_CASE("table JSON round trip") {
  auto t = CountTable::build({2, 3}, 40);
  auto rebuilt = table_from_json(table_to_json(t));

  CHECK(rebuilt.params() == t.params());
  CHECK(rebuilt.horizon() == t.horizon());
  for (int n = 0; n <= 40; ++n) {
    CHECK(rebuilt.structures(n) == t.structures(n));
    CHECK(rebuilt.irreducible(n) == t.irreducible(n));
    CHECK(rebuilt.allowed_inner(n) == t.allowed_inner(n));
  }
  for (int k = 1; k <= 41; ++k)
    CHECK(rebuilt.rainbow_weight(k) == t.rainbow_weight(k));
}

TEST_CASE("table JSON rejects malformed documents") {
  auto t = CountTable::build({1, 2}, 6);
  auto good = nlohmann::json::parse(table_to_json(t));

  CHECK_THROWS_AS(table_from_json("{not json"), IoError);
  CHECK_THROWS_AS(table_from_json("{}"), IoError);

  auto wrong_version = good;
  wrong_version["format_version"] = 99;
  CHECK_THROWS_AS(table_from_json(wrong_version.dump()), IoError);

  auto short_s = good;
  short_s["s"].erase(short_s["s"].size() - 1);
  CHECK_THROWS_AS(table_from_json(short_s.dump()), IoError);

  auto bad_int = good;
  bad_int["s"][3] = "12x4";
  CHECK_THROWS_AS(table_from_json(bad_int.dump()), IoError);

  auto tampered = good;
  tampered["f"][2] = "7";  // breaks s(n) = sum f(i) s(n-i)
  CHECK_THROWS_AS(table_from_json(tampered.dump()), IoError);
}

TEST_CASE("save and load files") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "rainbow-io-test";
  fs::create_directories(dir);
  auto path = dir / "table.json";

  auto t = CountTable::build({1, 4}, 25);
  save_table(t, path);
  auto loaded = load_table(path);
  CHECK(loaded.params() == t.params());
  CHECK(loaded.structures(25) == t.structures(25));

  CHECK_THROWS_AS(load_table(dir / "missing.json"), IoError);
  fs::remove_all(dir);
}

}  // TEST_SUITE
