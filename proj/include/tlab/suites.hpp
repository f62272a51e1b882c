#pragma once

#include <cstdint>
#include <vector>

#include "tlab/report.hpp"
#include "tlab/tauberian.hpp"

namespace tlab::suites {

// Exact-identity sweep: convolution unit law, Lambda * 1 = log, Selberg's
// identity, convolution laws on random inputs, Mobius round-trips and the
// weighted-inversion balance.  Tolerance-based rows scale with tol_scale.
std::vector<VerificationReport> identity_suite(std::uint64_t limit, std::uint64_t seed,
                                               double tol_scale = 1.0);

// Random non-decreasing step functions between exponential envelopes; every
// fixture must spend measure >= log(C1/C2) - 2*dt between them.
VerificationReport isoperimetric_fixture_suite(int count, std::uint64_t seed,
                                               double grid_step);

// Random bounded-antiderivative profiles; the window dichotomy must return
// a branch on each.
VerificationReport dichotomy_fixture_suite(int count, std::uint64_t seed,
                                           double grid_step);

// A single dichotomy fixture, exposed so tests can drive the pieces.
struct DichotomyFixture {
  tauberian::ExpProfile profile;
  tauberian::WindowParams params;
  double x = 0;  // window start
};
DichotomyFixture make_dichotomy_fixture(std::uint64_t seed, double grid_step);

}  // namespace tlab::suites
