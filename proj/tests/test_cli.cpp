#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "tlab/io.hpp"
#include "tlab/summatory.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kCli = TLAB_CLI_PATH;

int run(const std::string& args, const std::string& stdout_file = "") {
  std::string cmd = kCli + " " + args;
  if (!stdout_file.empty()) cmd += " > " + stdout_file + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::path("cli_test_out") / name;
  fs::remove_all(dir);
  fs::create_directories(dir.parent_path());
  return dir;
}

}  // namespace

TEST_CASE("identities: default-style run passes and writes the report") {
  auto dir = fresh_dir("identities");
  const int rc = run("identities --limit 2000 --out " + dir.string(), dir.string() + ".log");
  CHECK(rc == 0);
  auto text = slurp(dir / "identities.csv");
  CHECK(text.rfind("name,range,max_violation,location,status\n", 0) == 0);
  CHECK(text.find("FAIL") == std::string::npos);
  CHECK(text.find("mobius_unit_law") != std::string::npos);
  CHECK(text.find("selberg_identity") != std::string::npos);
  CHECK(text.find("tatuzawa_iseki") != std::string::npos);
}

TEST_CASE("identities: N = 1 runs the trivial ranges") {
  auto dir = fresh_dir("identities_n1");
  const int rc = run("identities --limit 1 --out " + dir.string(), dir.string() + ".log");
  CHECK(rc == 0);
  CHECK(fs::exists(dir / "identities.csv"));
}

TEST_CASE("identities: collapsed tolerances force FAIL rows and exit 1") {
  auto dir = fresh_dir("identities_fail");
  const int rc = run("identities --limit 2000 --tol-scale 1e-30 --out " + dir.string(),
                     dir.string() + ".log");
  CHECK(rc == 1);
  CHECK(slurp(dir / "identities.csv").find("FAIL") != std::string::npos);
}

TEST_CASE("unwritable output path gives a nonzero exit") {
  const int rc = run("identities --limit 100 --out /dev/null/nope", "cli_test_out/unwritable.log");
  CHECK(rc != 0);
}

TEST_CASE("identical config and seed give byte-identical files") {
  auto d1 = fresh_dir("det1");
  auto d2 = fresh_dir("det2");
  REQUIRE(run("identities --limit 1500 --seed 77 --out " + d1.string(), d1.string() + ".log") == 0);
  REQUIRE(run("identities --limit 1500 --seed 77 --out " + d2.string(), d2.string() + ".log") == 0);
  CHECK(slurp(d1 / "identities.csv") == slurp(d2 / "identities.csv"));

  auto e1 = fresh_dir("det_est1");
  auto e2 = fresh_dir("det_est2");
  const std::string est = "estimates --limit 2000 --min-x 100 --max-x 2000 --samples 6 --out ";
  REQUIRE(run(est + e1.string(), e1.string() + ".log") == 0);
  REQUIRE(run(est + e2.string(), e2.string() + ".log") == 0);
  CHECK(slurp(e1 / "divisor_summatory.csv") == slurp(e2 / "divisor_summatory.csv"));

  auto j1 = fresh_dir("det_json1");
  auto j2 = fresh_dir("det_json2");
  const std::string tau = "tauberian --limit 5000 --min-x 100 --max-x 5000 --samples 5 "
                          "--seed 3 --format json --out ";
  REQUIRE(run(tau + j1.string(), j1.string() + ".log") == 0);
  REQUIRE(run(tau + j2.string(), j2.string() + ".log") == 0);
  CHECK(slurp(j1 / "theorem1_psi.json") == slurp(j2 / "theorem1_psi.json"));
  CHECK(slurp(j1 / "tauberian_psi_report.json") == slurp(j2 / "tauberian_psi_report.json"));
}

TEST_CASE("estimates: full file inventory with the series header") {
  auto dir = fresh_dir("estimates");
  const int rc = run("estimates --limit 2000 --min-x 100 --max-x 2000 --samples 6 --out " +
                         dir.string(),
                     dir.string() + ".log");
  CHECK(rc == 0);
  const char* names[] = {"harmonic_sum",       "log_over_n_sum",   "log_sum",
                         "log_ratio_sum",      "log_sq_sum",       "log_ratio_sq_sum",
                         "mobius_over_n",      "mobius_log_ratio", "mobius_log_ratio_sq",
                         "erdos_karamata",     "u_rearranged",     "divisor_summatory"};
  for (const char* n : names) {
    INFO(n);
    auto text = slurp(dir / (std::string(n) + ".csv"));
    REQUIRE(text.rfind("x,raw,main,remainder,normalized,normalizer\n", 0) == 0);
  }
}

TEST_CASE("estimates: json format mirrors the columns") {
  auto dir = fresh_dir("estimates_json");
  const int rc = run(
      "estimates --limit 2000 --min-x 100 --max-x 2000 --samples 5 --format json --out " +
          dir.string(),
      dir.string() + ".log");
  CHECK(rc == 0);
  auto doc = nlohmann::json::parse(slurp(dir / "harmonic_sum.json"));
  CHECK(doc["name"] == "harmonic_sum");
  CHECK(doc["normalizer"] == "1/x");
  CHECK(doc["columns"]["x"].size() == 5);
  CHECK(doc["columns"]["raw"].size() == 5);
  CHECK(doc["columns"]["normalized"].size() == 5);
}

TEST_CASE("tauberian: theorem1 series plus a report, all PASS") {
  auto dir = fresh_dir("tauberian");
  const int rc = run(
      "tauberian --limit 20000 --min-x 100 --max-x 20000 --samples 8 --label PSI --out " +
          dir.string(),
      dir.string() + ".log");
  CHECK(rc == 0);
  auto series = slurp(dir / "theorem1_psi.csv");
  CHECK(series.rfind("x,raw,main,remainder,normalized,normalizer\n", 0) == 0);
  auto report = slurp(dir / "tauberian_psi_report.csv");
  CHECK(report.find("bounded_ratio") != std::string::npos);
  CHECK(report.find("shifted_monotonicity") != std::string::npos);
  CHECK(report.find("crossing_pairs") != std::string::npos);
  CHECK(report.find("dichotomy_fixtures") != std::string::npos);
  CHECK(report.find("FAIL") == std::string::npos);
}

TEST_CASE("json reports carry status and parse cleanly") {
  auto dir = fresh_dir("reports_json");
  const int rc = run("identities --limit 800 --format json --out " + dir.string(),
                     dir.string() + ".log");
  CHECK(rc == 0);
  auto doc = nlohmann::json::parse(slurp(dir / "identities.json"));
  REQUIRE(doc.contains("reports"));
  REQUIRE(doc["reports"].size() >= 6);
  for (const auto& row : doc["reports"]) {
    CHECK(row["status"] == "PASS");
    CHECK(row.contains("max_violation"));
    CHECK(row.contains("range"));
  }
}

TEST_CASE("identities with default limit passes") {
  auto dir = fresh_dir("identities_default");
  const int rc = run("identities --out " + dir.string(), dir.string() + ".log");
  CHECK(rc == 0);
  CHECK(slurp(dir / "identities.csv").find("1..100000") != std::string::npos);
}

TEST_CASE("summatory prints the four values with timings") {
  const std::string log = "cli_test_out/summatory.log";
  const int rc = run("summatory 1000", log);
  CHECK(rc == 0);
  auto text = slurp(log);
  CHECK(text.find("M(1000)") != std::string::npos);
  CHECK(text.find("psi(1000)") != std::string::npos);
  CHECK(text.find("pi(1000)") != std::string::npos);
  CHECK(text.find("D(1000)") != std::string::npos);
  CHECK(text.find("ms)") != std::string::npos);
  // values agree with the library
  CHECK(text.find("= " + std::to_string(tlab::summatory::mertens_sublinear(1000.0))) !=
        std::string::npos);
  CHECK(text.find("= 168") != std::string::npos);  // pi(1000)
  std::ostringstream d;
  d << "= " << tlab::summatory::divisor_summatory(1000.0);
  CHECK(text.find(d.str()) != std::string::npos);
  CHECK(text.find("= " + tlab::io::format_g15(tlab::summatory::psi_sublinear(1000.0))) !=
        std::string::npos);
}

TEST_CASE("config file via TLAB_CONFIG, flags still override") {
  auto dir = fresh_dir("config_env");
  const fs::path cfg = "cli_test_out/env.cfg";
  {
    std::ofstream out(cfg);
    out << "limit=500\n";
    out << "out=" << dir.string() << "\n";
  }
  setenv("TLAB_CONFIG", cfg.c_str(), 1);
  const int rc = run("identities", dir.string() + ".log");
  unsetenv("TLAB_CONFIG");
  CHECK(rc == 0);
  auto text = slurp(dir / "identities.csv");
  CHECK(text.find("1..500") != std::string::npos);

  // a flag beats the config file
  auto dir2 = fresh_dir("config_env2");
  setenv("TLAB_CONFIG", cfg.c_str(), 1);
  const int rc2 = run("identities --limit 600 --out " + dir2.string(), dir2.string() + ".log");
  unsetenv("TLAB_CONFIG");
  CHECK(rc2 == 0);
  CHECK(slurp(dir2 / "identities.csv").find("1..600") != std::string::npos);
}

TEST_CASE("usage errors exit nonzero") {
  CHECK(run("identities --limit 100 --format yaml", "cli_test_out/usage1.log") != 0);
  CHECK(run("nonsense", "cli_test_out/usage2.log") != 0);
  CHECK(run("summatory 0.2", "cli_test_out/usage3.log") != 0);
  CHECK(run("tauberian --limit 5000 --label WRONG", "cli_test_out/usage4.log") != 0);
}
