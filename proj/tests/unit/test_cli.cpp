#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "wml");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = wml::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& tag) {
  std::random_device rd;
  fs::path p = fs::temp_directory_path() / ("wml-test-" + tag + "-" + std::to_string(rd()));
  fs::create_directories(p);
  return p;
}

std::size_t file_count(const fs::path& dir) {
  return static_cast<std::size_t>(std::distance(fs::directory_iterator(dir), fs::directory_iterator()));
}

}  // namespace

TEST_CASE("parse command", "[cli]") {
  Result r = run({"--format", "text", "parse", "[x,y]"});
  CHECK(r.code == 0);
  CHECK(r.out == "x1x2X1X2\n");
  Result j = run({"parse", "[x,y]^2"});
  CHECK(j.code == 0);
  auto json = nlohmann::json::parse(j.out);
  CHECK(json["proper_power"]["exponent"] == 2);
  CHECK(json["cyclic_reduction"]["core"] == "x1x2X1X2x1x2X1X2");
}

TEST_CASE("parse errors exit with code 2", "[cli]") {
  Result r = run({"parse", "[x,y"});
  CHECK(r.code == 2);
  CHECK(r.err.find("position") != std::string::npos);
  CHECK(run({"parse", "xq"}).code == 2);
  CHECK(run({"--rank", "1", "parse", "xy"}).code == 2);
  CHECK(run({"moment", "x", "-T", "1,0"}).code == 2);
  CHECK(run({"moment", "x", "-T", "a"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"moment", "[x,y]", "-T", "2,-2", "--numeric", "--n", "1"}).code == 2);
}

TEST_CASE("moment command", "[cli]") {
  Result sym = run({"--format", "text", "moment", "[x,y]", "-T", "1"});
  CHECK(sym.code == 0);
  CHECK(sym.out == "1/n\n");
  Result two = run({"--format", "text", "moment", "[x,y]", "-T", "1,-1"});
  CHECK(two.out == "n^2/(n^2 - 1)\n");
  Result num = run({"moment", "[x,y]", "-T", "1,-1", "--numeric", "--n", "3"});
  REQUIRE(num.code == 0);
  auto nj = nlohmann::json::parse(num.out);
  CHECK(nj["exact"] == "9/8");
  Result full = run({"moment", "[x,y^2]", "-T", "1"});
  auto fj = nlohmann::json::parse(full.out);
  CHECK(fj["value"]["text"] == "2/n");
  Result mc = run({"moment", "x", "-T", "1,-1", "--mc", "--n", "3", "--samples", "2000", "--seed", "5"});
  REQUIRE(mc.code == 0);
  auto mj = nlohmann::json::parse(mc.out);
  CHECK(mj.contains("standard_error"));
  CHECK(mc.out == run({"moment", "x", "-T", "1,-1", "--mc", "--n", "3", "--samples", "2000", "--seed", "5"}).out);
  CHECK(run({"moment", "x", "--mc"}).code == 2);
}

TEST_CASE("invariants command", "[cli]") {
  Result r = run({"invariants", "[x,y]"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["comm_crit_count"] == 1);
  CHECK(j["undecided"] == false);
  Result csv = run({"--csv", "invariants", "x^2y^2"});
  CHECK(csv.out.rfind("word,rank,pi,cl,comm_crit_count,proper_power\n", 0) == 0);
  Result capped = run({"--fringe-cap", "2", "invariants", "[x,y]"});
  CHECK(capped.code == 3);
  CHECK(nlohmann::json::parse(capped.out)["undecided"] == true);
  Result capped_verify = run({"--fringe-cap", "2", "verify", "[x,y]"});
  CHECK(capped_verify.code == 3);
}

TEST_CASE("surfaces command", "[cli]") {
  Result r = run({"-K", "2", "surfaces", "[x,y]", "[y,x]"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["spec_count"] == 16);
  CHECK(j.contains("spectrum"));
  Result l = run({"-K", "1", "surfaces", "[x,y]", "--list"});
  auto lj = nlohmann::json::parse(l.out);
  REQUIRE(lj["surfaces"].size() == 1);
  for (const char* k : {"annuli", "gluings", "components", "matchings"}) CHECK(lj["surfaces"][0].contains(k));
  CHECK(nlohmann::json::parse(run({"surfaces", "xy"}).out)["balanced"] == false);
  CHECK(run({"--spec-cap", "2", "surfaces", "[x,y]", "[y,x]"}).code == 3);
}

TEST_CASE("verify command", "[cli]") {
  Result r = run({"verify", "[x,y]", "-T", "1", "-T", "1,-1"});
  REQUIRE(r.code == 0);
  auto rows = nlohmann::json::parse(r.out);
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows)
    for (const auto& c : row["checks"])
      if (c["applicable"] == true) CHECK(c["pass"] == true);
  Result csv = run({"--format", "csv", "verify", "[x,y^2]"});
  CHECK(csv.code == 0);
  CHECK(csv.out.find("main_expansion") != std::string::npos);
}

TEST_CASE("cache replays results byte for byte", "[cli][cache]") {
  fs::path dir = fresh_dir("cache");
  Result a = run({"--cache-dir", dir.string(), "invariants", "[x,y^2]"});
  CHECK(file_count(dir) == 1);
  Result b = run({"--cache-dir", dir.string(), "invariants", "[x,y^2]"});
  CHECK(a.out == b.out);
  CHECK(a.code == b.code);
  Result m1 = run({"--cache-dir", dir.string(), "moment", "[x,y]", "-T", "2,-2"});
  Result m2 = run({"--cache-dir", dir.string(), "moment", "[x,y]", "-T", "2,-2"});
  CHECK(m1.out == m2.out);
  CHECK(file_count(dir) == 2);
  // a different cap is a different key
  run({"--cache-dir", dir.string(), "--genus-cap", "2", "invariants", "[x,y^2]"});
  CHECK(file_count(dir) == 3);
  // undecided results are not cached
  run({"--cache-dir", dir.string(), "--fringe-cap", "2", "invariants", "[x,y]"});
  CHECK(file_count(dir) == 3);

  fs::path env_dir = fresh_dir("env");
  ::setenv("WML_CACHE", env_dir.string().c_str(), 1);
  Result e1 = run({"invariants", "[x,y]"});
  ::unsetenv("WML_CACHE");
  CHECK(file_count(env_dir) == 1);
  CHECK(e1.out == run({"invariants", "[x,y]"}).out);
  fs::remove_all(dir);
  fs::remove_all(env_dir);
}

TEST_CASE("config file supplies defaults", "[cli]") {
  fs::path dir = fresh_dir("config");
  fs::path cfg = dir / "wml.toml";
  std::ofstream(cfg) << "format = \"text\"\nrank = 3\n";
  Result r = run({"--config", cfg.string(), "parse", "[x,z]"});
  CHECK(r.code == 0);
  CHECK(r.out == "x1x3X1X3\n");
  fs::remove_all(dir);
}
