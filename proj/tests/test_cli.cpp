#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "plasma/thresholds.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = plasma::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("plasma_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::vector<double>> csv_rows(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("eval writes the default 61 x 61 grid") {
  const fs::path dir = scratch("eval");
  const Run r = run({"eval", "--limit", "free-boundary", "--out", dir.string()});
  CHECK(r.code == 0);
  const auto rows = csv_rows(dir / "eval.csv");
  REQUIRE(rows.size() == 61 * 61);
  for (const auto& row : rows) {
    REQUIRE(row.size() == 4);
    CHECK(row[3] == 0.0);
    CHECK(row[2] == doctest::Approx(double(oracle::plasma_F(2 * row[0]))).epsilon(1e-14));
  }
  CHECK(slurp(dir / "eval.json").find("\"config_hash\"") != std::string::npos);
}

TEST_CASE("eval of the hard-edge kernel vanishes on the right half plane") {
  const fs::path dir = scratch("hard");
  REQUIRE(run({"eval", "--limit", "hard-edge", "--grid", "-1:1:0.25", "--out", dir.string()}).code == 0);
  for (const auto& row : csv_rows(dir / "eval.csv")) {
    if (row[0] >= 0) CHECK(row[2] == 0.0);
    else CHECK(row[2] > 0.0);
  }
}

TEST_CASE("eval of a finite-n kernel in the boundary frame") {
  const fs::path dir = scratch("finite");
  REQUIRE(run({"eval", "--finite", "ginibre", "--n", "256", "--grid", "0:0:1", "--out", dir.string()}).code == 0);
  const auto rows = csv_rows(dir / "eval.csv");
  REQUIRE(rows.size() == 1);
  CHECK(rows[0][2] == doctest::Approx(double(oracle::poisson_cdf(256, 255))).epsilon(1e-12));
}

TEST_CASE("verify exit codes") {
  const fs::path dir = scratch("verify");
  CHECK(run({"verify", "eighth", "--out", dir.string()}).code == 0);
  CHECK(fs::exists(dir / "verify-eighth.json"));
  CHECK(run({"verify", "ward", "--spec", "free-boundary:-2,-1,1,2", "--grid", "-1:0:1,0:0", "--out", dir.string()})
            .code == 1);
  CHECK(run({"verify", "positivity", "--spec", "free-boundary", "--points", "random:6", "--sets", "5", "--out",
             dir.string()})
            .code == 0);
  CHECK(run({"verify", "mass-one", "--spec", "constant:0.5", "--z", "0.3,0.2", "--out", dir.string()}).code == 1);
  CHECK(run({"verify", "mass-one", "--spec", "hard-edge", "--z", "0.5,0", "--out", dir.string()}).code == 3);
}

TEST_CASE("usage errors") {
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"eval", "--limit", "ginibre-bulk", "--bogus"}).code == 2);
  CHECK(run({"eval", "--limit", "ginibre-bulk", "--finite", "ginibre"}).code == 2);
  CHECK(run({"eval", "--limit", "mittag-leffler:0.3"}).code == 2);
  CHECK(run({"sample", "--n", "100000", "--trials", "100000"}).code == 2);
}

TEST_CASE("config files supply defaults and flags override them") {
  const fs::path dir = scratch("config");
  {
    std::ofstream cfg(dir / "run.toml");
    cfg << "[eval]\nlimit = \"ginibre-bulk\"\ngrid = \"-1:1:1\"\n";
  }
  REQUIRE(run({"--config", (dir / "run.toml").string(), "eval", "--out", dir.string()}).code == 0);
  CHECK(csv_rows(dir / "eval.csv").size() == 9);
  REQUIRE(run({"--config", (dir / "run.toml").string(), "eval", "--grid", "0:1:1", "--out", dir.string()}).code == 0);
  CHECK(csv_rows(dir / "eval.csv").size() == 4);
  {
    std::ofstream cfg(dir / "bad.toml");
    cfg << "[eval]\nunknown_key = 1\n";
  }
  CHECK(run({"--config", (dir / "bad.toml").string(), "eval", "--limit", "ginibre-bulk"}).code == 2);
}

TEST_CASE("outputs are byte-identical across runs and thread counts") {
  const fs::path a = scratch("det_a"), b = scratch("det_b");
  const std::vector<std::string> sample = {"sample", "--potential", "ginibre", "--n", "64", "--trials", "300",
                                           "--seed", "5"};
  auto with = [](std::vector<std::string> v, const std::string& threads, const fs::path& out) {
    v.insert(v.begin(), {"--threads", threads});
    v.insert(v.end(), {"--out", out.string()});
    return v;
  };
  run(with(sample, "1", a));
  run(with(sample, "4", b));
  CHECK(slurp(a / "sample.json") == slurp(b / "sample.json"));
  CHECK(slurp(a / "sample.csv") == slurp(b / "sample.csv"));
  const std::vector<std::string> ward = {"verify", "ward", "--spec", "free-boundary", "--grid", "-1:0:1,0:0"};
  run(with(ward, "1", a));
  run(with(ward, "3", b));
  CHECK(slurp(a / "verify-ward.json") == slurp(b / "verify-ward.json"));
  CHECK(slurp(a / "verify-ward.csv") == slurp(b / "verify-ward.csv"));
}

TEST_CASE("show-thresholds lists every key") {
  const Run r = run({"--show-thresholds"});
  CHECK(r.code == 0);
  for (const auto& t : plasma::thresholds()) CHECK(r.out.find(t.key) != std::string::npos);
}
