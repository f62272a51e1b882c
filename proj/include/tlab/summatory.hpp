#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "tlab/arith.hpp"
#include "tlab/report.hpp"

namespace tlab::summatory {

// Prefix sums: entry v holds M(v) resp. psi(v); entry 0 is 0.
std::vector<std::int64_t> mertens_sieve(std::uint64_t n);
std::vector<double> psi_sieve(std::uint64_t n);

// Memoized sublinear evaluator for M(x) or psi(x).
//
// Both rest on the same inversion: summing the function over the points
// x/n collapses to something explicit (floor(x) for M, log floor(x)! for
// psi), which turns into a recursion over the O(sqrt x) distinct values
// floor(x/n).  Values at or below `threshold` come from a sieve table;
// everything above is memoized.
//
// A single instance mutates its memo and is meant for one thread;
// separate instances are independent.
class SummatoryOracle {
 public:
  enum class Kind { mertens, chebyshev_psi };

  // threshold 0 picks max(1024, floor(x_hint^(2/3))).
  SummatoryOracle(Kind kind, std::uint64_t x_hint, std::uint64_t threshold = 0);

  std::int64_t mertens(std::uint64_t x);
  double psi(std::uint64_t x);

  Kind kind() const { return kind_; }
  std::uint64_t threshold() const { return threshold_; }

 private:
  double log_factorial(std::uint64_t v) const;

  Kind kind_;
  std::uint64_t threshold_;
  std::vector<std::int64_t> mertens_base_;
  std::vector<double> psi_base_;
  std::vector<double> log_sum_;  // exact prefix sums of log r, up to 1e6
  std::unordered_map<std::uint64_t, std::int64_t> memo_int_;
  std::unordered_map<std::uint64_t, double> memo_real_;
};

// One-shot wrappers.
std::int64_t mertens_sublinear(double x);
double psi_sublinear(double x);

// sum_{m<=x} floor(x/m) by the hyperbola method, O(sqrt x).
std::int64_t divisor_summatory(double x);

std::uint64_t prime_count(const arith::PrimeList& primes, double x);
std::uint64_t nth_prime(const arith::PrimeList& primes, std::uint64_t n);

// Three ratio series sampled at the same xs: psi(x)/x, pi(x) log x / x and,
// with n = pi(x), p_n / (n log n).  The third series skips records with
// pi(x) < 2 where its denominator degenerates.
struct PntRatios {
  RemainderSeries psi_over_x;
  RemainderSeries pi_log_over_x;
  RemainderSeries nth_prime_ratio;
};
PntRatios pnt_ratio_series(std::span<const double> xs);

}  // namespace tlab::summatory
