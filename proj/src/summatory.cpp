#include "tlab/summatory.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tlab/numeric.hpp"

namespace tlab::summatory {

namespace {

constexpr std::uint64_t kExactLogSumLimit = 1'000'000;

std::uint64_t floor_to_u64(double x, const char* who) {
  if (!(x >= 1.0)) throw std::domain_error(std::string(who) + ": x must be >= 1");
  return static_cast<std::uint64_t>(x);
}

}  // namespace

std::vector<std::int64_t> mertens_sieve(std::uint64_t n) {
  auto mu = arith::mobius_sieve(n);
  std::vector<std::int64_t> out(n + 1, 0);
  for (std::uint64_t i = 1; i <= n; ++i) out[i] = out[i - 1] + mu[i];
  return out;
}

std::vector<double> psi_sieve(std::uint64_t n) {
  auto lambda = arith::mangoldt_sieve(n);
  std::vector<double> out(n + 1, 0.0);
  KahanSum acc;
  for (std::uint64_t i = 1; i <= n; ++i) {
    acc.add(lambda[i]);
    out[i] = acc.value();
  }
  return out;
}

SummatoryOracle::SummatoryOracle(Kind kind, std::uint64_t x_hint, std::uint64_t threshold)
    : kind_(kind) {
  if (x_hint == 0) throw std::domain_error("SummatoryOracle: x_hint must be >= 1");
  if (threshold == 0) {
    const double t = std::pow(static_cast<double>(x_hint), 2.0 / 3.0);
    threshold = std::max<std::uint64_t>(1024, static_cast<std::uint64_t>(t));
  }
  threshold_ = std::min(threshold, std::max<std::uint64_t>(x_hint, 1024));
  if (kind_ == Kind::mertens) {
    mertens_base_ = mertens_sieve(threshold_);
  } else {
    psi_base_ = psi_sieve(threshold_);
    const std::uint64_t ls = std::min(x_hint, kExactLogSumLimit);
    log_sum_.resize(ls + 1, 0.0);
    KahanSum acc;
    for (std::uint64_t r = 1; r <= ls; ++r) {
      acc.add(std::log(static_cast<double>(r)));
      log_sum_[r] = acc.value();
    }
  }
}

double SummatoryOracle::log_factorial(std::uint64_t v) const {
  if (v < log_sum_.size()) return log_sum_[v];
  return std::lgamma(static_cast<double>(v) + 1.0);
}

std::int64_t SummatoryOracle::mertens(std::uint64_t x) {
  if (kind_ != Kind::mertens)
    throw std::logic_error("SummatoryOracle: mertens() on a psi oracle");
  if (x == 0) return 0;
  if (x <= threshold_) return mertens_base_[x];
  auto it = memo_int_.find(x);
  if (it != memo_int_.end()) return it->second;
  // M(x) = 1 - sum_{2<=n<=x} M(floor(x/n)), grouped by equal quotient.
  std::int64_t r = 1;
  std::uint64_t n = 2;
  while (n <= x) {
    const std::uint64_t q = x / n;
    const std::uint64_t last = x / q;
    r -= static_cast<std::int64_t>(last - n + 1) * mertens(q);
    n = last + 1;
  }
  memo_int_.emplace(x, r);
  return r;
}

double SummatoryOracle::psi(std::uint64_t x) {
  if (kind_ != Kind::chebyshev_psi)
    throw std::logic_error("SummatoryOracle: psi() on a mertens oracle");
  if (x == 0) return 0.0;
  if (x <= threshold_) return psi_base_[x];
  auto it = memo_real_.find(x);
  if (it != memo_real_.end()) return it->second;
  // psi(x) = sum_{r<=x} log r - sum_{2<=n<=x} psi(floor(x/n)).
  double r = log_factorial(x);
  std::uint64_t n = 2;
  while (n <= x) {
    const std::uint64_t q = x / n;
    const std::uint64_t last = x / q;
    r -= static_cast<double>(last - n + 1) * psi(q);
    n = last + 1;
  }
  memo_real_.emplace(x, r);
  return r;
}

std::int64_t mertens_sublinear(double x) {
  const std::uint64_t xi = floor_to_u64(x, "mertens_sublinear");
  SummatoryOracle oracle(SummatoryOracle::Kind::mertens, xi);
  return oracle.mertens(xi);
}

double psi_sublinear(double x) {
  const std::uint64_t xi = floor_to_u64(x, "psi_sublinear");
  SummatoryOracle oracle(SummatoryOracle::Kind::chebyshev_psi, xi);
  return oracle.psi(xi);
}

std::int64_t divisor_summatory(double x) {
  const std::uint64_t xi = floor_to_u64(x, "divisor_summatory");
  std::uint64_t s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(xi)));
  while ((s + 1) * (s + 1) <= xi) ++s;
  while (s * s > xi) --s;
  std::int64_t acc = 0;
  for (std::uint64_t m = 1; m <= s; ++m) acc += static_cast<std::int64_t>(xi / m);
  return 2 * acc - static_cast<std::int64_t>(s * s);
}

std::uint64_t prime_count(const arith::PrimeList& primes, double x) {
  const std::uint64_t xi = floor_to_u64(x, "prime_count");
  if (xi > primes.limit) {
    std::ostringstream msg;
    msg << "prime_count: x = " << xi << " beyond sieved limit " << primes.limit;
    throw std::out_of_range(msg.str());
  }
  auto it = std::upper_bound(primes.values.begin(), primes.values.end(), xi);
  return static_cast<std::uint64_t>(it - primes.values.begin());
}

std::uint64_t nth_prime(const arith::PrimeList& primes, std::uint64_t n) {
  if (n == 0) throw std::domain_error("nth_prime: n must be >= 1");
  if (n > primes.values.size()) {
    std::ostringstream msg;
    msg << "nth_prime: n = " << n << " beyond the " << primes.values.size()
        << " primes sieved (limit " << primes.limit << ")";
    throw std::out_of_range(msg.str());
  }
  return primes.values[n - 1];
}

PntRatios pnt_ratio_series(std::span<const double> xs) {
  PntRatios out;
  out.psi_over_x.name = "psi_over_x";
  out.pi_log_over_x.name = "pi_log_over_x";
  out.nth_prime_ratio.name = "nth_prime_ratio";
  out.psi_over_x.normalizer = out.pi_log_over_x.normalizer =
      out.nth_prime_ratio.normalizer = "1";
  if (xs.empty()) return out;
  double prev = 0.0;
  for (double x : xs) {
    if (!(x >= 2.0)) throw std::domain_error("pnt_ratio_series: xs must be >= 2");
    if (x <= prev) throw std::invalid_argument("pnt_ratio_series: xs must be increasing");
    prev = x;
  }
  const std::uint64_t max_x = static_cast<std::uint64_t>(xs.back());
  auto primes = arith::prime_list(max_x);
  SummatoryOracle psi_oracle(SummatoryOracle::Kind::chebyshev_psi, max_x);
  for (double x : xs) {
    const std::uint64_t xi = static_cast<std::uint64_t>(x);
    const double lx = std::log(x);
    const double psi_x = psi_oracle.psi(xi);
    const std::uint64_t n = prime_count(primes, x);
    auto push = [x](RemainderSeries& s, double raw) {
      s.records.push_back({x, raw, 1.0, raw - 1.0, raw - 1.0});
    };
    push(out.psi_over_x, psi_x / x);
    push(out.pi_log_over_x, static_cast<double>(n) * lx / x);
    if (n >= 2) {
      const double pn = static_cast<double>(nth_prime(primes, n));
      const double nd = static_cast<double>(n);
      push(out.nth_prime_ratio, pn / (nd * std::log(nd)));
    }
  }
  return out;
}

}  // namespace tlab::summatory
