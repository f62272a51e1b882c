#pragma once

#include <cstdint>
#include <span>

#include "tlab/arith.hpp"
#include "tlab/report.hpp"

namespace tlab::estimates {

// gamma is Euler's constant; c is the constant term of
// sum_{n<=x} (log n)/n - log^2(x)/2 (the first Stieltjes constant,
// approximately -0.0728158).
struct Constants {
  double gamma = 0;
  double c = 0;
};

// Euler-Maclaurin accelerated harmonic sum:
// H_N - log N - 1/(2N) + 1/(12N^2).  Truncation error is O(N^-4).
double compute_gamma(std::uint64_t n = 1'000'000);

// Independent route through the sawtooth integral: gamma =
// 1 - sum_{k>=1} [log((k+1)/k) - 1/(k+1)], with the tail past N summed
// in closed form to O(N^-3).
double compute_gamma_integral_form(std::uint64_t n = 1'000'000);

// Raw partial sum H_n - log n; converges with an O(1/n) remainder.
double compute_gamma_partial(std::uint64_t n);

// sum_{k<=N} (log k)/k - log^2(N)/2 - log(N)/(2N).
double compute_c(std::uint64_t n = 10'000'000);

Constants compute_constants();

// The six elementary sums.  raw / main / normalizer per kind:
//   harmonic         sum 1/n            log x + gamma          1/x
//   log_over_n       sum log(n)/n       log^2(x)/2 + c         (1+log x)/x
//   log_n            sum log n          x log x - x            log x
//   log_x_over_n     sum log(x/n)       x                      log x
//   log_sq_n         sum log^2 n        x(log^2 x - 2log x+2)  log^2 x
//   log_sq_x_over_n  sum log^2(x/n)     2x                     log^2 x
enum class ElementaryKind {
  harmonic,
  log_over_n,
  log_n,
  log_x_over_n,
  log_sq_n,
  log_sq_x_over_n,
};
RemainderSeries elementary_series(ElementaryKind kind, std::span<const double> xs,
                                  const Constants& consts);

// The Mobius-weighted sums; mains are 0, 0 and 2 log x, all normalized by 1.
enum class MobiusKind { over_n, log_weighted, log_sq_weighted };
RemainderSeries mobius_series(MobiusKind kind, std::span<const double> xs,
                              const arith::ArithTable& table);

// sum_{n<=x} (Lambda(n) + K(n)); main 2x, normalized by x/log x.
RemainderSeries erdos_karamata_series(std::span<const double> xs,
                                      const arith::ArithTable& table);

// U(x) = sum_{n<=x} mu(n) sum_{m<=x/n} log^2 m; main 2x log x, normalized by x.
RemainderSeries u_series(std::span<const double> xs, const arith::ArithTable& table);

// sum_{m<=x} floor(x/m); main x log x + (2 gamma - 1) x, normalized by sqrt x.
RemainderSeries divisor_series(std::span<const double> xs, const Constants& consts);

}  // namespace tlab::estimates
