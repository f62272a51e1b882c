#include "tlab/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "tlab/numeric.hpp"
#include "tlab/summatory.hpp"
#include "tlab/transforms.hpp"

namespace tlab::suites {

namespace {

using transforms::RealFn;
using transforms::StepFunction;

StepFunction psi_step(std::uint64_t limit) {
  auto lambda = arith::mangoldt_sieve(limit);
  std::vector<double> locs, sizes;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (lambda[n] == 0.0) continue;
    locs.push_back(double(n));
    sizes.push_back(lambda[n]);
  }
  return StepFunction(std::move(locs), std::move(sizes));
}

StepFunction mertens_plus_floor_step(std::uint64_t limit) {
  auto mu = arith::mobius_sieve(limit);
  std::vector<double> locs, sizes;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (mu[n] + 1 == 0) continue;
    locs.push_back(double(n));
    sizes.push_back(double(mu[n]) + 1.0);
  }
  return StepFunction(std::move(locs), std::move(sizes));
}

arith::DenseArithFn random_dense(std::uint64_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  arith::DenseArithFn f{n, std::vector<double>(n + 1, 0.0), false};
  for (std::uint64_t i = 1; i <= n; ++i) f.values[i] = dist(rng);
  return f;
}

}  // namespace

std::vector<VerificationReport> identity_suite(std::uint64_t limit, std::uint64_t seed,
                                               double tol_scale) {
  std::vector<VerificationReport> out;
  auto table = arith::build_arith_table(limit);

  {
    auto conv = arith::dirichlet_convolve(arith::mobius_fn(table), arith::one_fn(limit));
    double worst = 0.0, at = 1.0;
    for (std::uint64_t n = 1; n <= limit; ++n) {
      const double want = n == 1 ? 1.0 : 0.0;
      const double diff = std::abs(conv.values[n] - want);
      if (diff > worst) {
        worst = diff;
        at = double(n);
      }
    }
    std::ostringstream range;
    range << "n in 1.." << limit;
    out.push_back(make_report("mobius_unit_law", range.str(), worst, at, 0.0,
                              "(mu * 1)(n) vs delta(n), exact integer arithmetic"));
  }

  out.push_back(arith::verify_mangoldt_sum(table, limit, tol_scale));
  out.push_back(arith::verify_selberg(table, limit, tol_scale));

  {
    const std::uint64_t nc = std::min<std::uint64_t>(limit, 2000);
    std::mt19937_64 rng(seed);
    double worst_comm = 0.0, at_comm = 1.0, worst_assoc = 0.0, at_assoc = 1.0;
    for (int trial = 0; trial < 3; ++trial) {
      auto f = random_dense(nc, rng);
      auto g = random_dense(nc, rng);
      auto h = random_dense(nc, rng);
      auto fg = arith::dirichlet_convolve(f, g);
      auto gf = arith::dirichlet_convolve(g, f);
      auto fg_h = arith::dirichlet_convolve(fg, h);
      auto f_gh = arith::dirichlet_convolve(f, arith::dirichlet_convolve(g, h));
      for (std::uint64_t n = 1; n <= nc; ++n) {
        const double tol_c =
            tol_scale * 1e-9 * (1.0 + std::abs(fg.values[n]));
        const double rc = std::abs(fg.values[n] - gf.values[n]) / tol_c;
        if (rc > worst_comm) {
          worst_comm = rc;
          at_comm = double(n);
        }
        const double tol_a =
            tol_scale * 1e-9 * (1.0 + std::abs(fg_h.values[n]));
        const double ra = std::abs(fg_h.values[n] - f_gh.values[n]) / tol_a;
        if (ra > worst_assoc) {
          worst_assoc = ra;
          at_assoc = double(n);
        }
      }
    }
    std::ostringstream range;
    range << "3 random triples, n in 1.." << nc;
    out.push_back(make_report("convolution_commutative", range.str(), worst_comm, at_comm,
                              1.0, "violation relative to 1e-9*(1+|value|)"));
    out.push_back(make_report("convolution_associative", range.str(), worst_assoc,
                              at_assoc, 1.0, "violation relative to 1e-9*(1+|value|)"));
  }

  {
    const std::uint64_t xmax = std::min<std::uint64_t>(limit, 10'000);
    std::mt19937_64 rng(seed + 1);
    std::uniform_real_distribution<double> xdist(1.0, double(xmax));
    std::vector<double> xs(50);
    for (auto& x : xs) x = xdist(rng);
    std::sort(xs.begin(), xs.end());

    std::vector<std::pair<std::string, RealFn>> family;
    family.emplace_back("1", RealFn::constant_one());
    family.emplace_back("id", RealFn::identity());
    family.emplace_back("psi", RealFn::step(psi_step(xmax)));
    family.emplace_back("mertens_plus_floor", RealFn::step(mertens_plus_floor_step(xmax)));

    double worst_rt = 0.0, at_rt = 1.0;
    double worst_ti = 0.0, at_ti = 1.0;
    for (const auto& [name, f] : family) {
      auto big_f = RealFn::mobius_transform_of(f);
      for (double x : xs) {
        const double back = transforms::inverse_mobius_transform(big_f, x, table);
        const double want = f(x);
        const double rt =
            std::abs(back - want) / (tol_scale * 1e-9 * (1.0 + std::abs(want)));
        if (rt > worst_rt) {
          worst_rt = rt;
          at_rt = x;
        }
        auto [lhs, rhs] = transforms::tatuzawa_iseki_residual(f, x, table);
        const double ti =
            std::abs(lhs - rhs) / (tol_scale * 1e-7 * (1.0 + std::abs(lhs)));
        if (ti > worst_ti) {
          worst_ti = ti;
          at_ti = x;
        }
      }
    }
    std::ostringstream range;
    range << "f in {1, id, psi, M+floor}, 50 sampled x in 1.." << xmax;
    out.push_back(make_report("mobius_roundtrip", range.str(), worst_rt, at_rt, 1.0,
                              "violation relative to 1e-9*(1+|f(x)|)"));
    out.push_back(make_report("tatuzawa_iseki", range.str(), worst_ti, at_ti, 1.0,
                              "violation relative to 1e-7*(1+|lhs|)"));
  }

  return out;
}

VerificationReport isoperimetric_fixture_suite(int count, std::uint64_t seed,
                                               double grid_step) {
  int failures = 0;
  double first_fail = -1.0;
  double min_margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < count; ++i) {
    std::mt19937_64 rng(seed + std::uint64_t(i));
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double t1 = 3.0 * uni(rng);
    const double rho = 1.05 + 4.95 * uni(rng);
    const double c2 = 0.2 + 4.8 * uni(rng);
    const double c1 = rho * c2;
    const double u = 1.0 + 0.2 * uni(rng);
    const double w = 0.8 + 0.2 * uni(rng);
    const double len = std::log(rho) * 1.2 + 0.5 + uni(rng);
    const auto n = static_cast<std::size_t>(std::ceil(len / grid_step));
    tauberian::SampledFn k;
    k.t0 = t1;
    k.dt = grid_step;
    const double t2 = t1 + grid_step * double(n);
    const double k_lo = c1 * std::exp(t1) * u;
    const double k_hi = c2 * std::exp(t2) * w;
    std::vector<double> inner(n > 1 ? n - 1 : 0);
    for (auto& v : inner) v = k_lo + (k_hi - k_lo) * uni(rng);
    std::sort(inner.begin(), inner.end());
    k.values.push_back(k_lo);
    k.values.insert(k.values.end(), inner.begin(), inner.end());
    k.values.push_back(k_hi);
    auto res = tauberian::isoperimetric_check(k, c1, c2);
    min_margin = std::min(min_margin, res.measure - (res.bound - 2.0 * grid_step));
    if (!res.pass) {
      ++failures;
      if (first_fail < 0.0) first_fail = double(i);
    }
  }
  std::ostringstream range, notes;
  range << count << " seeded fixtures, grid step " << grid_step;
  notes << "min margin over bound-2dt: " << min_margin;
  return make_report("isoperimetric_fixtures", range.str(), double(failures),
                     first_fail < 0.0 ? 0.0 : first_fail, 0.0, notes.str());
}

DichotomyFixture make_dichotomy_fixture(std::uint64_t seed, double grid_step) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double v_scale = 0.5 + 1.5 * uni(rng);
  const double s1 = (0.55 + 0.3 * uni(rng)) * v_scale;
  const double s2 = (0.25 + 0.45 * uni(rng)) * s1;
  const double m_prime = (0.3 + 1.2 * uni(rng)) * s2;
  const double e = std::log(s1 / s2);
  const double h = 2.0 * (e + m_prime / s1 + m_prime / s2) * 1.02;
  const double domain = h * (1.15 + 0.25 * uni(rng));

  // Piecewise-linear antiderivative bounded by m_prime, breakpoints on the
  // grid; s is its slope, so |int_0^x s| <= m_prime holds exactly.
  DichotomyFixture fx;
  fx.profile.s.t0 = 0.0;
  fx.profile.s.dt = grid_step;
  fx.profile.m = 0.0;
  fx.profile.m_prime = m_prime;
  const auto total = static_cast<std::size_t>(std::ceil(domain / grid_step)) + 1;
  std::vector<double> slopes;
  slopes.reserve(total);
  double p_prev = 0.0;
  while (slopes.size() < total) {
    const auto seg = static_cast<std::size_t>(20 + 380 * uni(rng));
    const double p_next = m_prime * (2.0 * uni(rng) - 1.0);
    const double slope = (p_next - p_prev) / (grid_step * double(seg));
    for (std::size_t i = 0; i < seg && slopes.size() < total; ++i) slopes.push_back(slope);
    p_prev = p_next;
  }
  fx.profile.s.values = std::move(slopes);

  fx.params.s_cap = 0.0;  // no limsup proxy for synthetic fixtures
  fx.params.s1 = s1;
  fx.params.s2 = s2;
  fx.params.e = e;
  fx.params.h = h;
  const double x_max = fx.profile.s.t_end() - h;
  fx.x = grid_step * std::floor(uni(rng) * x_max / grid_step);
  return fx;
}

VerificationReport dichotomy_fixture_suite(int count, std::uint64_t seed,
                                           double grid_step) {
  int failures = 0;
  double first_fail = -1.0;
  int branch_i = 0, branch_ii = 0;
  std::string first_note;
  for (int i = 0; i < count; ++i) {
    auto fx = make_dichotomy_fixture(seed + std::uint64_t(i), grid_step);
    auto res = tauberian::window_dichotomy(fx.profile, fx.x, fx.params);
    switch (res.branch) {
      case tauberian::DichotomyResult::Branch::window_measure: ++branch_i; break;
      case tauberian::DichotomyResult::Branch::crossing: ++branch_ii; break;
      default:
        ++failures;
        if (first_fail < 0.0) {
          first_fail = double(i);
          first_note = res.note;
        }
    }
  }
  std::ostringstream range, notes;
  range << count << " seeded fixtures, grid step " << grid_step;
  notes << "branch I: " << branch_i << ", branch II: " << branch_ii;
  if (!first_note.empty()) notes << "; first failure: " << first_note;
  return make_report("dichotomy_fixtures", range.str(), double(failures),
                     first_fail < 0.0 ? 0.0 : first_fail, 0.0, notes.str());
}

}  // namespace tlab::suites
