#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "tlab/numeric.hpp"
#include "tlab/suites.hpp"
#include "tlab/summatory.hpp"
#include "tlab/tauberian.hpp"

using namespace tlab;
using namespace tlab::tauberian;

namespace {

TauberianInstance zero_instance() {
  TauberianInstance inst;
  inst.f = transforms::StepFunction({}, {});
  inst.a = 0.0;
  inst.limit = 1'000'000;
  return inst;
}

double parse_first_violation(const std::string& notes) {
  const auto pos = notes.find("first violation at t = ");
  REQUIRE(pos != std::string::npos);
  return std::atof(notes.c_str() + pos + 23);
}

}  // namespace

TEST_CASE("build_instance values") {
  auto psi = build_instance(InstanceLabel::psi, 1000);
  const double psi10 = summatory::psi_sieve(10)[10];
  CHECK(psi.f.value(10.0) == doctest::Approx(psi10).epsilon(1e-12));
  CHECK(psi.a == 1.0);
  CHECK(psi.f.non_decreasing());

  auto mpf = build_instance(InstanceLabel::mertens_plus_floor, 1000);
  CHECK(mpf.f.value(10.0) == 9.0);  // M(10) = -1
  CHECK(mpf.f.non_decreasing());
  for (double s : mpf.f.sizes()) REQUIRE(s >= 0.0);

  CHECK_THROWS_AS(build_instance(InstanceLabel::custom, 1000), std::invalid_argument);
}

TEST_CASE("theorem1_report closed form at x = 2 and degenerate instance") {
  auto psi = build_instance(InstanceLabel::psi, 100);
  const double xs[] = {2.0};
  auto rows = theorem1_report(psi, xs);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].lhs == doctest::Approx((2.0 - std::log(2.0)) / 2.0).epsilon(1e-12));
  CHECK(rows[0].rhs == doctest::Approx(1.0).epsilon(1e-12));  // log2/log2
  CHECK(rows[0].lhs < rows[0].rhs);

  auto zero = zero_instance();
  const double xs2[] = {5.0, 100.0};
  auto rows2 = theorem1_report(zero, xs2);
  CHECK(rows2[0].lhs == 0.0);
  CHECK(rows2[0].rhs == 0.0);

  const double bad[] = {1.0};
  CHECK_THROWS_AS(theorem1_report(psi, bad), std::domain_error);
}

TEST_CASE("theorem1 band and decay on both instances up to 1e5") {
  for (auto label : {InstanceLabel::psi, InstanceLabel::mertens_plus_floor}) {
    auto inst = build_instance(label, 100'000);
    auto xs = log_spaced(1e4, 1e5, 11);
    auto rows = theorem1_report(inst, xs);
    for (const auto& r : rows) REQUIRE(r.lhs - r.rhs <= 0.1);
    auto small = log_spaced(1e2, 1e3, 7);
    auto small_rows = theorem1_report(inst, small);
    double small_max = 0.0;
    for (const auto& r : small_rows) small_max = std::max(small_max, r.lhs);
    REQUIRE(rows.back().lhs < small_max);
  }
}

TEST_CASE("prop_estim_checks: bands hold for the psi instance") {
  auto inst = build_instance(InstanceLabel::psi, 100'000);
  auto xs = log_spaced(1e3, 1e5, 21);
  auto reports = prop_estim_checks(inst, xs);
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) {
    INFO(r.name, ": ", r.notes);
    CHECK(r.pass);
  }

  auto zero = zero_instance();
  auto zero_reports = prop_estim_checks(zero, xs);
  for (const auto& r : zero_reports) {
    CHECK(r.pass);
    CHECK(r.max_violation == 0.0);
  }
}

TEST_CASE("prop_estim_checks flags unbounded growth") {
  // f(x) ~ floor(x)^2 grows superlinearly, so f/x explodes and trends up
  std::vector<double> locs, sizes;
  for (int n = 1; n <= 2000; ++n) {
    locs.push_back(double(n));
    sizes.push_back(double(2 * n - 1));  // f(n) = n^2
  }
  TauberianInstance inst;
  inst.f = transforms::StepFunction(std::move(locs), std::move(sizes));
  inst.a = 1.0;
  inst.limit = 2000;
  auto xs = log_spaced(10.0, 2000.0, 15);
  auto reports = prop_estim_checks(inst, xs);
  CHECK_FALSE(reports[0].pass);  // bounded_ratio
  CHECK(reports[0].max_violation > 1.0);
}

TEST_CASE("weighted inversion residual: zero at x = 1, band, decay") {
  auto table = arith::build_arith_table(100'000);
  auto inst = build_instance(InstanceLabel::psi, 100'000);
  const double xs1[] = {1.0};
  auto s1 = weighted_inversion_residual(inst, xs1, table);
  CHECK(s1.records[0].raw == 0.0);

  const double xs2[] = {10'000.0};
  auto s2 = weighted_inversion_residual(inst, xs2, table);
  CHECK(std::abs(s2.records[0].normalized) <= 0.2);

  auto xs3 = log_spaced(1e3, 1e5, 13);
  auto s3 = weighted_inversion_residual(inst, xs3, table);
  double early = 0.0;
  for (const auto& r : s3.records)
    if (r.x <= 1e4) early = std::max(early, std::abs(r.normalized));
  CHECK(std::abs(s3.records.back().normalized) <= early);
}

TEST_CASE("exp_transform: degenerate and psi profiles") {
  auto zero = zero_instance();
  auto zp = exp_transform(zero, 2.0, 1e-2);
  for (double v : zp.s.values) REQUIRE(v == 0.0);
  CHECK(zp.m == 0.0);
  CHECK(zp.m_prime == 0.0);

  auto inst = build_instance(InstanceLabel::psi, 10'000);
  auto profile = exp_transform(inst, std::log(10'000.0), 1e-3);
  CHECK(profile.s.values[0] == doctest::Approx(-1.0).epsilon(1e-12));  // psi(1) - 1
  CHECK(profile.m == 1.0);

  // m_prime bounds the closed-form integral at every grid point, and the
  // grid Riemann sum tracks the closed form
  double riemann = 0.0, max_gap = 0.0;
  for (std::size_t i = 0; i + 1 < profile.s.size(); ++i) {
    riemann += profile.s.values[i] * profile.s.dt;
    const double closed = transforms::integral_g_over_t2(
        inst.f, 1.0, std::exp(profile.s.t_at(i + 1)), false);
    REQUIRE(std::abs(closed) <= profile.m_prime * (1.0 + 1e-12));
    max_gap = std::max(max_gap, std::abs(riemann - closed));
  }
  CHECK(max_gap <= 0.01);

  CHECK_THROWS_AS(exp_transform(inst, -1.0, 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(exp_transform(inst, 1.0, 0.5), std::invalid_argument);
}

TEST_CASE("shifted monotonicity: exact for psi with M = 1, fails with M = 0") {
  auto inst = build_instance(InstanceLabel::psi, 10'000);
  auto profile = exp_transform(inst, std::log(10'000.0), 1e-3);
  auto ok = check_shifted_monotonicity(profile);
  INFO(ok.notes);
  CHECK(ok.pass);

  auto shifted = profile;
  shifted.m = 0.0;  // k = psi(e^t) - e^t, strictly decreasing on [1, 2)
  auto bad = check_shifted_monotonicity(shifted);
  CHECK_FALSE(bad.pass);
  const double first = parse_first_violation(bad.notes);
  CHECK(first > 0.0);
  CHECK(first < std::log(2.0));
}

TEST_CASE("s_bounds closed forms and the h minimizer") {
  auto b = s_bounds(1.0, 1.0, 1.0);
  CHECK(b.upper ==
        doctest::Approx((2.0 + std::exp(-1.0)) / (1.0 - std::exp(-1.0))).epsilon(1e-12));
  CHECK(b.lower ==
        doctest::Approx(-std::exp(1.0) / (std::exp(1.0) - 1.0)).epsilon(1e-12));

  auto z = s_bounds(0.0, 0.0, 2.0);
  CHECK(z.upper == 0.0);
  CHECK(z.lower == 0.0);

  CHECK_THROWS_AS(s_bounds(1.0, 1.0, 0.0), std::domain_error);

  auto best = minimize_sup_bound(1.0, 1.0);
  auto at_ends =
      std::min(std::max(s_bounds(1.0, 1.0, 1e-2).upper, -s_bounds(1.0, 1.0, 1e-2).lower),
               std::max(s_bounds(1.0, 1.0, 1e2).upper, -s_bounds(1.0, 1.0, 1e2).lower));
  CHECK(best.bound <= at_ends);
  CHECK(best.h > 0.0);
}

TEST_CASE("window params from the psi profile") {
  auto inst = build_instance(InstanceLabel::psi, 100'000);
  auto profile = exp_transform(inst, std::log(100'000.0), 1e-3);
  auto params = WindowParams::from_profile(profile);
  CHECK(params.s_cap > 0.0);
  CHECK(params.s1 == doctest::Approx(0.8 * params.s_cap));
  CHECK(params.s2 == doctest::Approx(0.4 * params.s_cap));
  CHECK(params.e > 0.0);
  CHECK(params.e == doctest::Approx(std::log((params.s1 + 1.0) / (params.s2 + 1.0))));
  CHECK_NOTHROW(params.validate(profile.m_prime));
  // the admissible window dwarfs any buildable domain for this instance
  CHECK(params.h > profile.s.t_end());
}

TEST_CASE("band_measure: constants and window errors") {
  ExpProfile flat;
  flat.s.t0 = 0.0;
  flat.s.dt = 1e-3;
  flat.s.values.assign(5001, 0.0);  // s == 0 on [0, 5]
  WindowParams p;
  p.s1 = 0.5;
  p.s2 = 0.25;
  p.e = std::log(2.0);
  p.h = 1.0;
  CHECK(std::abs(band_measure(flat, 0.5, p) - p.h) <= 2e-3);

  for (auto& v : flat.s.values) v = 2.0 * p.s1;
  CHECK(band_measure(flat, 0.5, p) == 0.0);

  CHECK_THROWS_AS(band_measure(flat, 4.5, p), std::out_of_range);
}

TEST_CASE("band measure on the psi profile: all fitting windows qualify") {
  auto inst = build_instance(InstanceLabel::psi, 100'000);
  auto profile = exp_transform(inst, std::log(100'000.0), 1e-3);
  auto params = WindowParams::from_profile(profile);
  WindowParams fitting = params;
  fitting.h = 8.0;  // the admissible h does not fit any buildable domain
  const double t_end = profile.s.t_end();
  for (int i = 0; i < 20; ++i) {
    const double x = (t_end - fitting.h) * double(i) / 19.0;
    REQUIRE(band_measure(profile, x, fitting) >= params.e - 2.0 * profile.s.dt);
  }
}

TEST_CASE("isoperimetric_check: constant function at the boundary") {
  // k == 2 on [0, 2] with C1 = 2, C2 = 1: qualifying set [0, log 2]
  SampledFn k;
  k.t0 = 0.0;
  k.dt = 1e-3;
  k.values.assign(2001, 2.0);
  auto res = isoperimetric_check(k, 2.0, 1.0);
  CHECK(res.bound == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(res.measure == doctest::Approx(std::log(2.0)).epsilon(0.01));
  CHECK(res.pass);
}

TEST_CASE("isoperimetric_check names the failing precondition") {
  SampledFn k;
  k.t0 = 0.0;
  k.dt = 1e-2;
  k.values = {1.0, 2.0, 3.0};
  CHECK_THROWS_WITH_AS(isoperimetric_check(k, 1.0, 2.0), "isoperimetric_check: need C1 > C2 > 0",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(isoperimetric_check(k, 2.0, 1.0),
                       "isoperimetric_check: k(t1) >= C1 e^{t1} fails", std::invalid_argument);
  k.values = {3.0, 0.5, 1.0};  // endpoints fine, interior dips
  CHECK_THROWS_WITH_AS(isoperimetric_check(k, 2.0, 1.0),
                       "isoperimetric_check: k is not non-decreasing", std::invalid_argument);
}

TEST_CASE("isoperimetric property on seeded fixtures") {
  auto report = suites::isoperimetric_fixture_suite(100, 2025, 1e-3);
  INFO(report.notes);
  CHECK(report.pass);
}

TEST_CASE("crossing pairs on the psi profile all satisfy the measure bound") {
  auto inst = build_instance(InstanceLabel::psi, 100'000);
  auto profile = exp_transform(inst, std::log(100'000.0), 1e-3);
  auto params = WindowParams::from_profile(profile);
  auto pairs = qualifying_crossing_pairs(profile, params);
  REQUIRE(pairs.size() > 10);
  for (const auto& [t1, t2] : pairs) {
    auto res = crossing_pair_check(profile, t1, t2, params);
    REQUIRE(res.pass);
  }
}

TEST_CASE("crossing_pair_check: S1 = S2 passes trivially, bad pairs throw") {
  auto inst = build_instance(InstanceLabel::psi, 10'000);
  auto profile = exp_transform(inst, std::log(10'000.0), 1e-3);
  WindowParams p;
  p.s1 = p.s2 = 0.01;
  p.e = 0.0;
  // find a grid point with s >= 0.01 followed by one with s <= 0.01
  const auto& v = profile.s.values;
  std::size_t i = 0;
  while (i < v.size() && v[i] < 0.01) ++i;
  std::size_t j = i;
  while (j < v.size() && v[j] > 0.01) ++j;
  REQUIRE(j < v.size());
  auto res = crossing_pair_check(profile, profile.s.t_at(i), profile.s.t_at(j), p);
  CHECK(res.bound == 0.0);
  CHECK(res.pass);

  CHECK_THROWS_AS(crossing_pair_check(profile, 1.0, 0.5, p), std::invalid_argument);
}

TEST_CASE("window dichotomy: branch I on a flat profile") {
  ExpProfile flat;
  flat.s.t0 = 0.0;
  flat.s.dt = 1e-3;
  flat.s.values.assign(3001, 0.0);
  flat.m_prime = 0.0;
  WindowParams p;
  p.s1 = 0.5;
  p.s2 = 0.25;
  p.e = std::log(2.0);
  p.h = 2.0 * p.e * 1.05;
  auto res = window_dichotomy(flat, 0.1, p);
  CHECK(res.branch == DichotomyResult::Branch::window_measure);
  CHECK(res.measure >= p.h - 2e-3);
}

TEST_CASE("window dichotomy: branch II on a square wave") {
  // s alternates +-2 S1 on half-periods of 0.5; |int_0^x s| <= 0.5
  ExpProfile wave;
  wave.s.t0 = 0.0;
  wave.s.dt = 1e-3;
  const double s1 = 0.5;
  const int half = 500;
  for (int block = 0; block < 24; ++block)
    for (int i = 0; i < half; ++i)
      wave.s.values.push_back(block % 2 == 0 ? 2.0 * s1 : -2.0 * s1);
  wave.m_prime = 0.5;
  WindowParams p;
  p.s1 = s1;
  p.s2 = 0.25;
  p.e = std::log(2.0);
  p.h = 2.0 * (p.e + wave.m_prime / p.s1 + wave.m_prime / p.s2) * 1.02;
  REQUIRE(p.h < wave.s.t_end());
  auto res = window_dichotomy(wave, 0.2, p);
  REQUIRE(res.branch == DichotomyResult::Branch::crossing);
  CHECK(res.t1 < res.t2);
  CHECK(wave.s.values[std::size_t((res.t1 - wave.s.t0) / wave.s.dt + 0.5)] >= p.s1);
  CHECK(wave.s.values[std::size_t((res.t2 - wave.s.t0) / wave.s.dt + 0.5)] <= p.s2);
}

TEST_CASE("window dichotomy rejects inadmissible windows") {
  ExpProfile flat;
  flat.s.t0 = 0.0;
  flat.s.dt = 1e-3;
  flat.s.values.assign(2001, 0.0);
  flat.m_prime = 1.0;
  WindowParams p;
  p.s1 = 0.5;
  p.s2 = 0.25;
  p.e = std::log(2.0);
  p.h = 1.0;  // far below 2(e + M'/S1 + M'/S2)
  CHECK_THROWS_AS(window_dichotomy(flat, 0.0, p), std::invalid_argument);
}

TEST_CASE("dichotomy property on seeded fixtures") {
  auto report = suites::dichotomy_fixture_suite(100, 909, 1e-3);
  INFO(report.notes);
  CHECK(report.pass);
}
