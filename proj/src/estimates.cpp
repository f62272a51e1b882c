#include "tlab/estimates.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tlab/numeric.hpp"
#include "tlab/summatory.hpp"

namespace tlab::estimates {

namespace {

void check_xs(std::span<const double> xs, double min_x, const char* who) {
  double prev = 0.0;
  for (double x : xs) {
    if (!(x >= min_x)) throw std::domain_error(std::string(who) + ": x below domain");
    if (x <= prev) throw std::invalid_argument(std::string(who) + ": xs must be increasing");
    prev = x;
  }
}

SeriesRecord record(double x, double raw, double main, double normalizer) {
  const double rem = raw - main;
  return {x, raw, main, rem,
          normalizer != 0.0 ? rem / normalizer
                            : std::numeric_limits<double>::quiet_NaN()};
}

}  // namespace

double compute_gamma(std::uint64_t n) {
  if (n == 0) throw std::domain_error("compute_gamma: n must be >= 1");
  KahanSum h;
  for (std::uint64_t k = 1; k <= n; ++k) h.add(1.0 / static_cast<double>(k));
  const double nd = static_cast<double>(n);
  return h.value() - std::log(nd) - 1.0 / (2.0 * nd) + 1.0 / (12.0 * nd * nd);
}

double compute_gamma_integral_form(std::uint64_t n) {
  if (n == 0) throw std::domain_error("compute_gamma_integral_form: n must be >= 1");
  KahanSum s;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    s.add(std::log1p(1.0 / kd) - 1.0 / (kd + 1.0));
  }
  const double nd = static_cast<double>(n);
  // tail of the series past n, to O(n^-4)
  const double tail = 1.0 / (2.0 * nd) - 7.0 / (12.0 * nd * nd) + 2.0 / (3.0 * nd * nd * nd);
  return 1.0 - (s.value() + tail);
}

double compute_gamma_partial(std::uint64_t n) {
  if (n == 0) throw std::domain_error("compute_gamma_partial: n must be >= 1");
  KahanSum h;
  for (std::uint64_t k = 1; k <= n; ++k) h.add(1.0 / static_cast<double>(k));
  return h.value() - std::log(static_cast<double>(n));
}

double compute_c(std::uint64_t n) {
  if (n < 2) throw std::domain_error("compute_c: n must be >= 2");
  KahanSum s;
  for (std::uint64_t k = 2; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    s.add(std::log(kd) / kd);
  }
  const double ln = std::log(static_cast<double>(n));
  return s.value() - ln * ln / 2.0 - ln / (2.0 * static_cast<double>(n));
}

Constants compute_constants() { return {compute_gamma(), compute_c()}; }

RemainderSeries elementary_series(ElementaryKind kind, std::span<const double> xs,
                                  const Constants& consts) {
  check_xs(xs, 1.0, "elementary_series");
  RemainderSeries out;
  switch (kind) {
    case ElementaryKind::harmonic:
      out.name = "harmonic_sum";
      out.normalizer = "1/x";
      break;
    case ElementaryKind::log_over_n:
      out.name = "log_over_n_sum";
      out.normalizer = "(1+log x)/x";
      break;
    case ElementaryKind::log_n:
      out.name = "log_sum";
      out.normalizer = "log x";
      break;
    case ElementaryKind::log_x_over_n:
      out.name = "log_ratio_sum";
      out.normalizer = "log x";
      break;
    case ElementaryKind::log_sq_n:
      out.name = "log_sq_sum";
      out.normalizer = "log^2 x";
      break;
    case ElementaryKind::log_sq_x_over_n:
      out.name = "log_ratio_sq_sum";
      out.normalizer = "log^2 x";
      break;
    default:
      throw std::invalid_argument("elementary_series: unknown kind");
  }
  for (double x : xs) {
    const auto n_max = static_cast<std::uint64_t>(x);
    const double lx = std::log(x);
    KahanSum acc;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      const double nd = static_cast<double>(n);
      switch (kind) {
        case ElementaryKind::harmonic: acc.add(1.0 / nd); break;
        case ElementaryKind::log_over_n: acc.add(std::log(nd) / nd); break;
        case ElementaryKind::log_n: acc.add(std::log(nd)); break;
        case ElementaryKind::log_x_over_n: acc.add(std::log(x / nd)); break;
        case ElementaryKind::log_sq_n: {
          const double l = std::log(nd);
          acc.add(l * l);
          break;
        }
        case ElementaryKind::log_sq_x_over_n: {
          const double l = std::log(x / nd);
          acc.add(l * l);
          break;
        }
      }
    }
    double main = 0.0, norm = 0.0;
    switch (kind) {
      case ElementaryKind::harmonic:
        main = lx + consts.gamma;
        norm = 1.0 / x;
        break;
      case ElementaryKind::log_over_n:
        main = lx * lx / 2.0 + consts.c;
        norm = (1.0 + lx) / x;
        break;
      case ElementaryKind::log_n:
        main = x * lx - x;
        norm = lx;
        break;
      case ElementaryKind::log_x_over_n:
        main = x;
        norm = lx;
        break;
      case ElementaryKind::log_sq_n:
        main = x * (lx * lx - 2.0 * lx + 2.0);
        norm = lx * lx;
        break;
      case ElementaryKind::log_sq_x_over_n:
        main = 2.0 * x;
        norm = lx * lx;
        break;
    }
    out.records.push_back(record(x, acc.value(), main, norm));
  }
  return out;
}

RemainderSeries mobius_series(MobiusKind kind, std::span<const double> xs,
                              const arith::ArithTable& table) {
  check_xs(xs, 1.0, "mobius_series");
  if (!xs.empty() && static_cast<std::uint64_t>(xs.back()) > table.limit)
    throw std::out_of_range("mobius_series: table smaller than max x");
  RemainderSeries out;
  switch (kind) {
    case MobiusKind::over_n: out.name = "mobius_over_n"; break;
    case MobiusKind::log_weighted: out.name = "mobius_log_ratio"; break;
    case MobiusKind::log_sq_weighted: out.name = "mobius_log_ratio_sq"; break;
    default: throw std::invalid_argument("mobius_series: unknown kind");
  }
  out.normalizer = "1";
  for (double x : xs) {
    const auto n_max = static_cast<std::uint64_t>(x);
    const double lx = std::log(x);
    KahanSum acc;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      if (table.mu[n] == 0) continue;
      const double nd = static_cast<double>(n);
      const double base = double(table.mu[n]) / nd;
      switch (kind) {
        case MobiusKind::over_n: acc.add(base); break;
        case MobiusKind::log_weighted: acc.add(base * std::log(x / nd)); break;
        case MobiusKind::log_sq_weighted: {
          const double l = std::log(x / nd);
          acc.add(base * l * l);
          break;
        }
      }
    }
    const double main = (kind == MobiusKind::log_sq_weighted) ? 2.0 * lx : 0.0;
    out.records.push_back(record(x, acc.value(), main, 1.0));
  }
  return out;
}

RemainderSeries erdos_karamata_series(std::span<const double> xs,
                                      const arith::ArithTable& table) {
  check_xs(xs, 1.0, "erdos_karamata_series");
  if (!xs.empty() && static_cast<std::uint64_t>(xs.back()) > table.limit)
    throw std::out_of_range("erdos_karamata_series: table smaller than max x");
  RemainderSeries out;
  out.name = "erdos_karamata";
  out.normalizer = "x/log x";
  if (xs.empty()) return out;
  const auto n_max = static_cast<std::uint64_t>(xs.back());
  auto k = arith::k_function(table);
  std::vector<double> prefix(n_max + 1, 0.0);
  KahanSum acc;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    acc.add(table.lambda[n] + k.values[n]);
    prefix[n] = acc.value();
  }
  for (double x : xs) {
    const double lx = std::log(x);
    const double raw = prefix[static_cast<std::uint64_t>(x)];
    out.records.push_back(record(x, raw, 2.0 * x, lx > 0.0 ? x / lx : 0.0));
  }
  return out;
}

RemainderSeries u_series(std::span<const double> xs, const arith::ArithTable& table) {
  check_xs(xs, 1.0, "u_series");
  if (!xs.empty() && static_cast<std::uint64_t>(xs.back()) > table.limit)
    throw std::out_of_range("u_series: table smaller than max x");
  RemainderSeries out;
  out.name = "u_rearranged";
  out.normalizer = "x";
  if (xs.empty()) return out;
  const auto n_max = static_cast<std::uint64_t>(xs.back());
  // prefix sums of log^2 m, built once
  std::vector<double> l2(n_max + 1, 0.0);
  KahanSum acc;
  for (std::uint64_t m = 2; m <= n_max; ++m) {
    const double l = std::log(static_cast<double>(m));
    acc.add(l * l);
    l2[m] = acc.value();
  }
  for (double x : xs) {
    const auto xi = static_cast<std::uint64_t>(x);
    KahanSum u;
    for (std::uint64_t n = 1; n <= xi; ++n) {
      if (table.mu[n] == 0) continue;
      u.add(double(table.mu[n]) * l2[static_cast<std::uint64_t>(x / double(n))]);
    }
    out.records.push_back(record(x, u.value(), 2.0 * x * std::log(x), x));
  }
  return out;
}

RemainderSeries divisor_series(std::span<const double> xs, const Constants& consts) {
  check_xs(xs, 1.0, "divisor_series");
  RemainderSeries out;
  out.name = "divisor_summatory";
  out.normalizer = "sqrt x";
  for (double x : xs) {
    const double raw = static_cast<double>(summatory::divisor_summatory(x));
    const double main = x * std::log(x) + (2.0 * consts.gamma - 1.0) * x;
    out.records.push_back(record(x, raw, main, std::sqrt(x)));
  }
  return out;
}

}  // namespace tlab::estimates
