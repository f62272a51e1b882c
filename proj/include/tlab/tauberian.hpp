#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tlab/arith.hpp"
#include "tlab/report.hpp"
#include "tlab/transforms.hpp"

namespace tlab::tauberian {

enum class InstanceLabel { psi, mertens_plus_floor, custom };

// A non-decreasing step function f together with the constants of its
// transform's expansion F(x) = A x log x + B x + C x/log x + ...
struct TauberianInstance {
  transforms::StepFunction f;
  double a = 0;
  double b = 0;
  double c = 0;
  InstanceLabel label = InstanceLabel::custom;
  std::uint64_t limit = 0;  // f carries all jumps at n <= limit
};

// psi: jumps Lambda(n); mertens_plus_floor: jumps mu(n) + 1.  Both have A = 1.
TauberianInstance build_instance(InstanceLabel label, std::uint64_t limit);

// lhs = |f(x) - A x| / x,  rhs = (1/log x) int_1^x |f(t) - A t| / t^2 dt.
struct Theorem1Row {
  double x = 0;
  double lhs = 0;
  double rhs = 0;
};
std::vector<Theorem1Row> theorem1_report(const TauberianInstance& inst,
                                         std::span<const double> xs);

// Sup of f(x)/x, of |int df/t - A log x| and of the signed tail integral
// over xs, each against an empirical band, each flagged for a growth trend
// (top-decade max > 2x full-range max).
struct PropEstimBands {
  double f_over_x = 1.2;
  double stieltjes_drift = 3.0;
  double signed_integral = 2.0;
};
std::vector<VerificationReport> prop_estim_checks(const TauberianInstance& inst,
                                                  std::span<const double> xs,
                                                  const PropEstimBands& bands = {});

// raw = g(x) log x + sum_{n<=x} Lambda(n) g(x/n) with g = f - A id;
// normalized by x log x.
RemainderSeries weighted_inversion_residual(const TauberianInstance& inst,
                                            std::span<const double> xs,
                                            const arith::ArithTable& table);

// Uniformly sampled function on [t0, t0 + dt*(size-1)].
struct SampledFn {
  double t0 = 0;
  double dt = 0;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
  double t_at(std::size_t i) const { return t0 + dt * static_cast<double>(i); }
  double t_end() const { return values.empty() ? t0 : t_at(values.size() - 1); }
};

// s(t) = e^{-t} (f(e^t) - A e^t) on a uniform grid, together with M = A and
// M' = max over the grid of |int_0^t s|, the inner integral in closed form.
struct ExpProfile {
  SampledFn s;
  double m = 0;
  double m_prime = 0;
};
ExpProfile exp_transform(const TauberianInstance& inst, double t_max, double grid_step);

// Verifies k(t) = e^t (s(t) + M) is non-decreasing between consecutive grid
// points, with slack 1e-9 e^t; reports the worst and the first violation.
VerificationReport check_shifted_monotonicity(const ExpProfile& profile);

// Closed-form bounds on s(t) implied by the two hypotheses, as a function
// of the averaging window h.
struct SBounds {
  double lower = 0;
  double upper = 0;
};
SBounds s_bounds(double m, double m_prime, double h);

// Grid search for the h minimizing max(upper, -lower).
struct HSearchResult {
  double h = 0;
  double bound = 0;
};
HSearchResult minimize_sup_bound(double m, double m_prime, double h_min = 1e-2,
                                 double h_max = 1e2, int count = 200);

// Window parameters: thresholds 0 < S2 < S1 < S, required measure
// e = log((S1+M)/(S2+M)) and window length h >= 2(e + M'/S1 + M'/S2).
struct WindowParams {
  double s_cap = 0;
  double s1 = 0;
  double s2 = 0;
  double h = 0;
  double e = 0;

  // S = max |s| over the last quarter of the profile domain,
  // S1 = s1_frac * S, S2 = s2_frac * S, h at its admissible minimum.
  static WindowParams from_profile(const ExpProfile& profile, double s1_frac = 0.8,
                                   double s2_frac = 0.4);
  void validate(double m_prime) const;
};

// Grid measure of {t in [x, x+h] : |s(t)| <= S1}.
double band_measure(const ExpProfile& profile, double x, const WindowParams& params);

struct IsoperimetricResult {
  double measure = 0;
  double bound = 0;
  bool pass = false;
};

// For non-decreasing k with k(t1) >= C1 e^{t1} and k(t2) <= C2 e^{t2}, the
// time spent between the envelopes C2 e^t <= k <= C1 e^t is at least
// log(C1/C2); checked on the grid with 2*dt slack.
IsoperimetricResult isoperimetric_check(const SampledFn& k, double c1, double c2);

// The same bound for s via k = e^t (s + M), C1 = S1 + M, C2 = S2 + M,
// on [t1, t2] with s(t1) >= S1 and s(t2) <= S2.
IsoperimetricResult crossing_pair_check(const ExpProfile& profile, double t1, double t2,
                                        const WindowParams& params);

// All (t1, t2) pairs on the grid with s(t1) >= S1 followed by the first
// later t2 with s(t2) <= S2.
std::vector<std::pair<double, double>> qualifying_crossing_pairs(
    const ExpProfile& profile, const WindowParams& params);

// Every admissible window [x, x+h] either has band measure >= e or contains
// a crossing pair; thresholds for the search are relaxed by
// 2*dt*max|adjacent sample difference|, and branch I additionally accepts a
// measure within the grid-counting error of e.
struct DichotomyResult {
  enum class Branch { window_measure, crossing, counterexample };
  Branch branch = Branch::counterexample;
  double measure = 0;
  double t1 = 0;
  double t2 = 0;
  std::string note;
};
DichotomyResult window_dichotomy(const ExpProfile& profile, double x,
                                 const WindowParams& params);

}  // namespace tlab::tauberian
