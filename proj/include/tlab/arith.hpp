#pragma once

#include <cstdint>
#include <vector>

#include "tlab/report.hpp"

namespace tlab::arith {

inline constexpr std::uint64_t kDefaultTableCap = 20'000'000;

// Standalone sieves; all arrays are 1-indexed with slot 0 unused.
std::vector<std::int8_t> mobius_sieve(std::uint64_t n);
std::vector<double> mangoldt_sieve(std::uint64_t n);

struct PrimeList {
  std::uint64_t limit = 0;  // every prime <= limit is present
  std::vector<std::uint32_t> values;
};
PrimeList prime_list(std::uint64_t n);

// Dense tables of mu and Lambda plus the prime list, immutable once built.
struct ArithTable {
  std::uint64_t limit = 0;
  std::vector<std::int8_t> mu;
  std::vector<double> lambda;
  std::vector<std::uint32_t> primes;
};

ArithTable build_arith_table(std::uint64_t n, std::uint64_t cap = kDefaultTableCap);

// mu(n) from nothing but mu(1) = 1 and sum_{d|n} mu(d) = 0 for n > 1.
// Quadratic-ish; this is the oracle the sieve is checked against.
int mobius_recursive(std::uint64_t n);

// A real (or exact-integer) arithmetic function tabulated on 1..limit.
struct DenseArithFn {
  std::uint64_t limit = 0;
  std::vector<double> values;  // size limit + 1, values[0] unused
  bool exact = false;          // integer-valued; comparisons may skip tolerances
};

DenseArithFn delta_fn(std::uint64_t n);
DenseArithFn one_fn(std::uint64_t n);
DenseArithFn log_fn(std::uint64_t n);
DenseArithFn mobius_fn(const ArithTable& table);
DenseArithFn mangoldt_fn(const ArithTable& table);

DenseArithFn dirichlet_convolve(const DenseArithFn& f, const DenseArithFn& g);

// Lambda(n) = -sum_{d|n} mu(d) log d, built without the prime-power formula.
DenseArithFn mangoldt_from_definition(std::uint64_t n);

// K(1) = 0, K(n) = (Lambda * Lambda)(n) / log n.
DenseArithFn k_function(const ArithTable& table);

// |Lambda(n) log n + (Lambda*Lambda)(n) - sum_{d|n} mu(d) log^2(n/d)|
// against 1e-6 log^2(n+2) per point; report stores the worst ratio.
VerificationReport verify_selberg(const ArithTable& table, std::uint64_t n,
                                  double tol_scale = 1.0);

// |sum_{d|n} Lambda(d) - log n| against 1e-9 (1 + log n) per point.
VerificationReport verify_mangoldt_sum(const ArithTable& table, std::uint64_t n,
                                       double tol_scale = 1.0);

}  // namespace tlab::arith
