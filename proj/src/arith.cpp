#include "tlab/arith.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace tlab::arith {

namespace {

std::vector<std::uint32_t> small_primes(std::uint64_t n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!composite[i]) primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

void check_positive(std::uint64_t n, const char* who) {
  if (n == 0) throw std::domain_error(std::string(who) + ": n must be >= 1");
}

void check_cap(std::uint64_t n, std::uint64_t cap, const char* who) {
  if (n > cap) {
    std::ostringstream msg;
    msg << who << ": N = " << n << " exceeds the memory cap " << cap;
    throw std::length_error(msg.str());
  }
}

}  // namespace

std::vector<std::int8_t> mobius_sieve(std::uint64_t n) {
  check_positive(n, "mobius_sieve");
  check_cap(n, kDefaultTableCap, "mobius_sieve");
  std::vector<std::int8_t> mu(n + 1, 0);
  mu[1] = 1;
  // Linear (Euler) sieve: each m > 1 is struck exactly once, by its
  // smallest prime factor.
  std::vector<std::uint32_t> primes;
  std::vector<std::uint32_t> spf(n + 1, 0);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
      mu[i] = -1;
    }
    for (std::uint32_t p : primes) {
      if (p > spf[i] || i * p > n) break;
      spf[i * p] = p;
      mu[i * p] = (p == spf[i]) ? std::int8_t(0) : std::int8_t(-mu[i]);
    }
  }
  return mu;
}

std::vector<double> mangoldt_sieve(std::uint64_t n) {
  check_positive(n, "mangoldt_sieve");
  check_cap(n, kDefaultTableCap, "mangoldt_sieve");
  std::vector<double> lambda(n + 1, 0.0);
  if (n < 2) return lambda;
  auto primes = small_primes(n);
  for (std::uint32_t p : primes) {
    const double lp = std::log(static_cast<double>(p));
    for (std::uint64_t q = p; q <= n; q *= p) {
      lambda[q] = lp;
      if (q > n / p) break;
    }
  }
  return lambda;
}

PrimeList prime_list(std::uint64_t n) {
  check_positive(n, "prime_list");
  check_cap(n, kDefaultTableCap, "prime_list");
  PrimeList out;
  out.limit = n;
  if (n >= 2) out.values = small_primes(n);
  return out;
}

ArithTable build_arith_table(std::uint64_t n, std::uint64_t cap) {
  check_positive(n, "build_arith_table");
  check_cap(n, cap, "build_arith_table");
  ArithTable t;
  t.limit = n;
  t.mu = mobius_sieve(n);
  t.lambda = mangoldt_sieve(n);
  t.primes = prime_list(n).values;
  return t;
}

namespace {

// Divisors of n by trial division, ascending.
std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int mobius_recursive_memo(std::uint64_t n, std::unordered_map<std::uint64_t, int>& memo) {
  if (n == 1) return 1;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  int acc = 0;
  for (std::uint64_t d : divisors_of(n)) {
    if (d == n) break;
    acc -= mobius_recursive_memo(d, memo);
  }
  memo.emplace(n, acc);
  return acc;
}

}  // namespace

int mobius_recursive(std::uint64_t n) {
  check_positive(n, "mobius_recursive");
  std::unordered_map<std::uint64_t, int> memo;
  return mobius_recursive_memo(n, memo);
}

DenseArithFn delta_fn(std::uint64_t n) {
  check_positive(n, "delta_fn");
  DenseArithFn f{n, std::vector<double>(n + 1, 0.0), true};
  f.values[1] = 1.0;
  return f;
}

DenseArithFn one_fn(std::uint64_t n) {
  check_positive(n, "one_fn");
  DenseArithFn f{n, std::vector<double>(n + 1, 1.0), true};
  f.values[0] = 0.0;
  return f;
}

DenseArithFn log_fn(std::uint64_t n) {
  check_positive(n, "log_fn");
  DenseArithFn f{n, std::vector<double>(n + 1, 0.0), false};
  for (std::uint64_t i = 1; i <= n; ++i) f.values[i] = std::log(static_cast<double>(i));
  return f;
}

DenseArithFn mobius_fn(const ArithTable& table) {
  DenseArithFn f{table.limit, std::vector<double>(table.limit + 1, 0.0), true};
  for (std::uint64_t i = 1; i <= table.limit; ++i) f.values[i] = table.mu[i];
  return f;
}

DenseArithFn mangoldt_fn(const ArithTable& table) {
  DenseArithFn f{table.limit, table.lambda, false};
  return f;
}

DenseArithFn dirichlet_convolve(const DenseArithFn& f, const DenseArithFn& g) {
  if (f.limit != g.limit)
    throw std::invalid_argument("dirichlet_convolve: operands have different limits");
  const std::uint64_t n = f.limit;
  DenseArithFn out{n, std::vector<double>(n + 1, 0.0), f.exact && g.exact};
  for (std::uint64_t a = 1; a <= n; ++a) {
    const double fa = f.values[a];
    if (fa == 0.0) continue;
    for (std::uint64_t b = 1; a * b <= n; ++b) out.values[a * b] += fa * g.values[b];
  }
  return out;
}

DenseArithFn mangoldt_from_definition(std::uint64_t n) {
  check_positive(n, "mangoldt_from_definition");
  auto mu = mobius_sieve(n);
  DenseArithFn out{n, std::vector<double>(n + 1, 0.0), false};
  for (std::uint64_t d = 2; d <= n; ++d) {
    if (mu[d] == 0) continue;
    const double w = -double(mu[d]) * std::log(static_cast<double>(d));
    for (std::uint64_t m = d; m <= n; m += d) out.values[m] += w;
  }
  return out;
}

namespace {

// (Lambda * Lambda)(n) for all n <= limit; only prime-power factors
// contribute, so the pair loop runs over those.
std::vector<double> mangoldt_square(const ArithTable& table) {
  const std::uint64_t n = table.limit;
  std::vector<std::uint32_t> pp;
  for (std::uint64_t i = 2; i <= n; ++i)
    if (table.lambda[i] > 0.0) pp.push_back(static_cast<std::uint32_t>(i));
  std::vector<double> conv(n + 1, 0.0);
  for (std::uint32_t a : pp) {
    const double la = table.lambda[a];
    for (std::uint32_t b : pp) {
      const std::uint64_t ab = std::uint64_t(a) * b;
      if (ab > n) break;
      conv[ab] += la * table.lambda[b];
    }
  }
  return conv;
}

}  // namespace

DenseArithFn k_function(const ArithTable& table) {
  auto conv = mangoldt_square(table);
  DenseArithFn out{table.limit, std::vector<double>(table.limit + 1, 0.0), false};
  for (std::uint64_t i = 2; i <= table.limit; ++i)
    out.values[i] = conv[i] / std::log(static_cast<double>(i));
  return out;
}

VerificationReport verify_selberg(const ArithTable& table, std::uint64_t n,
                                  double tol_scale) {
  if (n > table.limit) throw std::out_of_range("verify_selberg: n exceeds table limit");
  auto conv = mangoldt_square(table);
  // rhs[n] = sum_{d|n} mu(d) log^2(n/d), accumulated sieve-style.
  std::vector<double> rhs(n + 1, 0.0);
  std::vector<double> log2m(n + 1, 0.0);
  for (std::uint64_t m = 2; m <= n; ++m) {
    const double l = std::log(static_cast<double>(m));
    log2m[m] = l * l;
  }
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (table.mu[d] == 0) continue;
    const double md = table.mu[d];
    for (std::uint64_t m = 1; d * m <= n; ++m) rhs[d * m] += md * log2m[m];
  }
  double worst = 0.0;
  std::uint64_t worst_n = 1;
  double worst_diff = 0.0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    const double li = std::log(static_cast<double>(i));
    const double lhs = table.lambda[i] * li + conv[i];
    const double diff = std::abs(lhs - rhs[i]);
    const double l2 = std::log(static_cast<double>(i + 2));
    const double tol = tol_scale * 1e-6 * l2 * l2;
    const double ratio = diff / tol;
    if (ratio > worst) {
      worst = ratio;
      worst_n = i;
      worst_diff = diff;
    }
  }
  std::ostringstream range, notes;
  range << "n in 1.." << n;
  notes << "violation is |lhs-rhs| / (" << tol_scale << "*1e-6*log^2(n+2)); worst |lhs-rhs| = "
        << worst_diff;
  return make_report("selberg_identity", range.str(), worst, double(worst_n), 1.0,
                     notes.str());
}

VerificationReport verify_mangoldt_sum(const ArithTable& table, std::uint64_t n,
                                       double tol_scale) {
  if (n > table.limit) throw std::out_of_range("verify_mangoldt_sum: n exceeds table limit");
  std::vector<double> acc(n + 1, 0.0);
  for (std::uint64_t d = 2; d <= n; ++d) {
    const double ld = table.lambda[d];
    if (ld == 0.0) continue;
    for (std::uint64_t m = d; m <= n; m += d) acc[m] += ld;
  }
  double worst = 0.0;
  std::uint64_t worst_n = 1;
  double worst_diff = 0.0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    const double li = std::log(static_cast<double>(i));
    const double diff = std::abs(acc[i] - li);
    const double tol = tol_scale * 1e-9 * (1.0 + li);
    const double ratio = diff / tol;
    if (ratio > worst) {
      worst = ratio;
      worst_n = i;
      worst_diff = diff;
    }
  }
  std::ostringstream range, notes;
  range << "n in 1.." << n;
  notes << "violation is |sum - log n| / (" << tol_scale
        << "*1e-9*(1+log n)); worst |sum - log n| = " << worst_diff;
  return make_report("mangoldt_conv_log", range.str(), worst, double(worst_n), 1.0,
                     notes.str());
}

}  // namespace tlab::arith
