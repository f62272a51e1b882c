// tlab — build arithmetic tables, verify identities, and emit remainder
// series for the classical summatory functions.  Subcommands: identities,
// estimates, tauberian, summatory.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "tlab/arith.hpp"
#include "tlab/config.hpp"
#include "tlab/estimates.hpp"
#include "tlab/io.hpp"
#include "tlab/suites.hpp"
#include "tlab/summatory.hpp"
#include "tlab/tauberian.hpp"

namespace fs = std::filesystem;
using namespace tlab;

namespace {

fs::path series_path(const RunConfig& cfg, const std::string& stem) {
  return fs::path(cfg.out) / (stem + (cfg.format == "json" ? ".json" : ".csv"));
}

void write_series(const RunConfig& cfg, const RemainderSeries& series,
                  const std::string& stem) {
  const auto path = series_path(cfg, stem);
  if (cfg.format == "json")
    io::write_series_json(path, series);
  else
    io::write_series_csv(path, series);
}

void write_reports(const RunConfig& cfg, const std::vector<VerificationReport>& reports,
                   const std::string& stem) {
  const auto path = series_path(cfg, stem);
  if (cfg.format == "json")
    io::write_reports_json(path, reports);
  else
    io::write_reports_csv(path, reports);
}

int summarize(const std::vector<VerificationReport>& reports) {
  int failed = 0;
  for (const auto& r : reports) {
    std::printf("%-28s %s  (max violation %.6g at %.6g)\n", r.name.c_str(),
                r.pass ? "PASS" : "FAIL", r.max_violation, r.location);
    if (!r.pass) ++failed;
  }
  return failed;
}

int cmd_identities(const RunConfig& cfg) {
  auto reports = suites::identity_suite(cfg.limit, cfg.seed, cfg.tol_scale);
  write_reports(cfg, reports, "identities");
  return summarize(reports) > 0 ? 1 : 0;
}

int cmd_estimates(const RunConfig& cfg) {
  auto xs = cfg.sample_points();
  auto consts = estimates::compute_constants();
  auto table = arith::build_arith_table(cfg.limit);
  int rc = 0;
  using EK = estimates::ElementaryKind;
  for (EK kind : {EK::harmonic, EK::log_over_n, EK::log_n, EK::log_x_over_n,
                  EK::log_sq_n, EK::log_sq_x_over_n}) {
    auto series = estimates::elementary_series(kind, xs, consts);
    write_series(cfg, series, series.name);
    std::printf("wrote %s (%zu rows)\n", series.name.c_str(), series.records.size());
  }
  using MK = estimates::MobiusKind;
  for (MK kind : {MK::over_n, MK::log_weighted, MK::log_sq_weighted}) {
    auto series = estimates::mobius_series(kind, xs, table);
    write_series(cfg, series, series.name);
    std::printf("wrote %s (%zu rows)\n", series.name.c_str(), series.records.size());
  }
  auto ek = estimates::erdos_karamata_series(xs, table);
  write_series(cfg, ek, ek.name);
  std::printf("wrote %s (%zu rows)\n", ek.name.c_str(), ek.records.size());
  auto u = estimates::u_series(xs, table);
  write_series(cfg, u, u.name);
  std::printf("wrote %s (%zu rows)\n", u.name.c_str(), u.records.size());
  auto div = estimates::divisor_series(xs, consts);
  write_series(cfg, div, div.name);
  std::printf("wrote %s (%zu rows)\n", div.name.c_str(), div.records.size());
  return rc;
}

int cmd_tauberian(const RunConfig& cfg) {
  tauberian::InstanceLabel label;
  if (cfg.label == "PSI")
    label = tauberian::InstanceLabel::psi;
  else if (cfg.label == "MERTENS_PLUS_FLOOR")
    label = tauberian::InstanceLabel::mertens_plus_floor;
  else
    throw std::invalid_argument("label must be PSI or MERTENS_PLUS_FLOOR");
  const std::string stem = cfg.label == "PSI" ? "psi" : "mertens_plus_floor";

  auto inst = tauberian::build_instance(label, cfg.limit);
  auto xs = cfg.sample_points();

  auto rows = tauberian::theorem1_report(inst, xs);
  RemainderSeries t1;
  t1.name = "theorem1_" + stem;
  t1.normalizer = "1";
  for (const auto& r : rows)
    t1.records.push_back({r.x, r.lhs, r.rhs, r.lhs - r.rhs, r.lhs - r.rhs});
  write_series(cfg, t1, t1.name);

  std::vector<VerificationReport> reports = tauberian::prop_estim_checks(inst, xs);

  const double t_max = std::log(cfg.effective_max_x());
  auto profile = tauberian::exp_transform(inst, t_max, cfg.delta);
  reports.push_back(tauberian::check_shifted_monotonicity(profile));

  auto params = tauberian::WindowParams::from_profile(profile);
  auto pairs = tauberian::qualifying_crossing_pairs(profile, params);
  int pair_failures = 0;
  double first_fail = 0.0;
  for (const auto& [a, b] : pairs) {
    auto res = tauberian::crossing_pair_check(profile, a, b, params);
    if (!res.pass && pair_failures++ == 0) first_fail = a;
  }
  {
    std::ostringstream range, notes;
    range << pairs.size() << " crossing pairs on the profile";
    notes << "S1 = " << params.s1 << ", S2 = " << params.s2 << ", e = " << params.e;
    reports.push_back(make_report("crossing_pairs", range.str(), double(pair_failures),
                                  first_fail, 0.0, notes.str()));
  }
  reports.push_back(suites::isoperimetric_fixture_suite(100, cfg.seed, cfg.delta));
  reports.push_back(suites::dichotomy_fixture_suite(100, cfg.seed, cfg.delta));
  write_reports(cfg, reports, "tauberian_" + stem + "_report");
  return summarize(reports) > 0 ? 1 : 0;
}

int cmd_summatory(const RunConfig& cfg, double x) {
  using clock = std::chrono::steady_clock;
  auto timed = [](auto&& fn) {
    const auto start = clock::now();
    auto value = fn();
    const double ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
    return std::make_pair(value, ms);
  };
  auto [m, m_ms] = timed([&] { return summatory::mertens_sublinear(x); });
  std::printf("M(%s)   = %lld  (%.1f ms)\n", io::format_g15(x).c_str(),
              static_cast<long long>(m), m_ms);
  auto [p, p_ms] = timed([&] { return summatory::psi_sublinear(x); });
  std::printf("psi(%s) = %s  (%.1f ms)\n", io::format_g15(x).c_str(),
              io::format_g15(p).c_str(), p_ms);
  auto [pi, pi_ms] = timed([&] {
    auto primes = arith::prime_list(static_cast<std::uint64_t>(x));
    return summatory::prime_count(primes, x);
  });
  std::printf("pi(%s)  = %llu  (%.1f ms)\n", io::format_g15(x).c_str(),
              static_cast<unsigned long long>(pi), pi_ms);
  auto [d, d_ms] = timed([&] { return summatory::divisor_summatory(x); });
  std::printf("D(%s)   = %lld  (%.1f ms)\n", io::format_g15(x).c_str(),
              static_cast<long long>(d), d_ms);
  (void)cfg;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tlab: arithmetic-function identities, summatory engines and "
               "Tauberian-condition checks"};
  app.fallthrough();
  app.set_config("--config")->envname("TLAB_CONFIG");

  RunConfig cfg;
  app.add_option("--limit", cfg.limit, "sieve/table limit N");
  app.add_option("--samples", cfg.samples, "number of log-spaced sample points");
  app.add_option("--min-x", cfg.min_x, "smallest sample point");
  app.add_option("--max-x", cfg.max_x, "largest sample point (default: limit)");
  app.add_option("--delta", cfg.delta, "grid step for exponential profiles");
  app.add_option("--tol-scale", cfg.tol_scale, "multiplier on verification tolerances");
  app.add_option("--format", cfg.format, "output format: csv or json");
  app.add_option("--out", cfg.out, "output directory");
  app.add_option("--seed", cfg.seed, "seed for sampled checks and fixtures");
  app.add_option("--label", cfg.label, "instance label: PSI or MERTENS_PLUS_FLOOR");

  auto* identities = app.add_subcommand("identities", "exact identity suite");
  auto* estimates_cmd = app.add_subcommand("estimates", "remainder series ladder");
  auto* tauberian_cmd = app.add_subcommand("tauberian", "integral inequality and window checks");
  auto* summatory_cmd = app.add_subcommand("summatory", "evaluate M, psi, pi, D at x");
  double summatory_x = 0.0;
  summatory_cmd->add_option("x", summatory_x, "evaluation point")->required();
  app.require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.validate();
    if (summatory_cmd->parsed()) {
      if (!(summatory_x >= 1.0)) throw std::invalid_argument("summatory: x must be >= 1");
      return cmd_summatory(cfg, summatory_x);
    }
    std::filesystem::create_directories(cfg.out);
    if (identities->parsed()) return cmd_identities(cfg);
    if (estimates_cmd->parsed()) return cmd_estimates(cfg);
    if (tauberian_cmd->parsed()) return cmd_tauberian(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
