#include "tlab/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tlab/numeric.hpp"

namespace tlab::transforms {

StepFunction::StepFunction(std::vector<double> locations, std::vector<double> sizes) {
  if (locations.size() != sizes.size())
    throw std::invalid_argument("StepFunction: locations/sizes length mismatch");
  loc_.reserve(locations.size());
  size_.reserve(sizes.size());
  for (std::size_t i = 0; i < locations.size(); ++i) {
    const double l = locations[i];
    if (!(l >= 1.0)) throw std::invalid_argument("StepFunction: jump locations must be >= 1");
    if (i > 0 && !(l > locations[i - 1]))
      throw std::invalid_argument("StepFunction: jump locations must be strictly increasing");
    if (sizes[i] == 0.0) continue;
    loc_.push_back(l);
    size_.push_back(sizes[i]);
  }
  cum_value_.resize(loc_.size());
  cum_over_t_.resize(loc_.size());
  KahanSum v, w;
  for (std::size_t i = 0; i < loc_.size(); ++i) {
    v.add(size_[i]);
    w.add(size_[i] / loc_[i]);
    cum_value_[i] = v.value();
    cum_over_t_[i] = w.value();
    if (size_[i] < 0.0) non_decreasing_ = false;
  }
}

double StepFunction::value(double x) const {
  auto it = std::upper_bound(loc_.begin(), loc_.end(), x);
  if (it == loc_.begin()) return 0.0;
  return cum_value_[static_cast<std::size_t>(it - loc_.begin()) - 1];
}

double StepFunction::stieltjes_over_t(double x) const {
  auto it = std::upper_bound(loc_.begin(), loc_.end(), x);
  if (it == loc_.begin()) return 0.0;
  return cum_over_t_[static_cast<std::size_t>(it - loc_.begin()) - 1];
}

namespace {

// int_u^v (c - A t)/t^2 dt = c (1/u - 1/v) - A log(v/u).
inline double piece_signed(double u, double v, double c, double a) {
  return c * (1.0 / u - 1.0 / v) - a * std::log(v / u);
}

inline double piece(double u, double v, double c, double a, bool absolute) {
  if (v <= u) return 0.0;
  if (!absolute) return piece_signed(u, v, c, a);
  if (a > 0.0) {
    const double ts = c / a;  // the integrand changes sign here
    if (ts > u && ts < v)
      return std::abs(piece_signed(u, ts, c, a)) + std::abs(piece_signed(ts, v, c, a));
  }
  return std::abs(piece_signed(u, v, c, a));
}

}  // namespace

std::vector<double> integral_g_over_t2_batch(const StepFunction& f, double a,
                                             std::span<const double> xs, bool absolute) {
  std::vector<double> out;
  out.reserve(xs.size());
  const auto& loc = f.locations();
  const auto& size = f.sizes();
  double cur_t = 1.0;
  double cur_c = 0.0;
  std::size_t j = 0;
  while (j < loc.size() && loc[j] <= 1.0) cur_c += size[j++];
  KahanSum acc;
  double prev_x = 1.0;
  for (double x : xs) {
    if (!(x >= 1.0)) throw std::domain_error("integral_g_over_t2: x must be >= 1");
    if (x < prev_x) throw std::invalid_argument("integral_g_over_t2_batch: xs must be ascending");
    prev_x = x;
    while (j < loc.size() && loc[j] <= x) {
      acc.add(piece(cur_t, loc[j], cur_c, a, absolute));
      cur_t = loc[j];
      cur_c += size[j];
      ++j;
    }
    acc.add(piece(cur_t, x, cur_c, a, absolute));
    cur_t = std::max(cur_t, x);
    out.push_back(acc.value());
  }
  return out;
}

double integral_g_over_t2(const StepFunction& f, double a, double x, bool absolute) {
  const double xs[1] = {x};
  return integral_g_over_t2_batch(f, a, xs, absolute)[0];
}

RealFn RealFn::constant_one() { return RealFn(Impl{OneTag{}}); }
RealFn RealFn::identity() { return RealFn(Impl{IdTag{}}); }
RealFn RealFn::x_log_x() { return RealFn(Impl{XLogXTag{}}); }
RealFn RealFn::floor_fn() { return RealFn(Impl{FloorTag{}}); }
RealFn RealFn::step(StepFunction f) { return RealFn(Impl{std::move(f)}); }
RealFn RealFn::table(std::vector<double> values) { return RealFn(Impl{std::move(values)}); }
RealFn RealFn::callable(std::function<double(double)> f) {
  return RealFn(Impl{std::move(f)});
}

RealFn RealFn::mobius_transform_of(RealFn f) {
  return callable([g = std::move(f)](double x) { return mobius_transform(g, x); });
}

double RealFn::operator()(double x) const {
  if (x < 1.0) return 0.0;
  return std::visit(
      [x](const auto& impl) -> double {
        using T = std::decay_t<decltype(impl)>;
        if constexpr (std::is_same_v<T, OneTag>) {
          return 1.0;
        } else if constexpr (std::is_same_v<T, IdTag>) {
          return x;
        } else if constexpr (std::is_same_v<T, XLogXTag>) {
          return x * std::log(x);
        } else if constexpr (std::is_same_v<T, FloorTag>) {
          return std::floor(x);
        } else if constexpr (std::is_same_v<T, StepFunction>) {
          return impl.value(x);
        } else if constexpr (std::is_same_v<T, std::vector<double>>) {
          const auto i = static_cast<std::size_t>(x);
          return i < impl.size() ? impl[i] : (impl.empty() ? 0.0 : impl.back());
        } else {
          return impl(x);
        }
      },
      impl_);
}

double mobius_transform(const RealFn& f, double x) {
  if (!(x >= 1.0)) throw std::domain_error("mobius_transform: x must be >= 1");
  const auto n_max = static_cast<std::uint64_t>(x);
  KahanSum acc;
  for (std::uint64_t n = 1; n <= n_max; ++n) acc.add(f(x / static_cast<double>(n)));
  return acc.value();
}

double inverse_mobius_transform(const RealFn& big_f, double x,
                                const arith::ArithTable& table) {
  if (!(x >= 1.0)) throw std::domain_error("inverse_mobius_transform: x must be >= 1");
  const auto n_max = static_cast<std::uint64_t>(x);
  if (n_max > table.limit)
    throw std::out_of_range("inverse_mobius_transform: table smaller than floor(x)");
  KahanSum acc;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (table.mu[n] == 0) continue;
    acc.add(double(table.mu[n]) * big_f(x / static_cast<double>(n)));
  }
  return acc.value();
}

std::pair<double, double> tatuzawa_iseki_residual(const RealFn& f, double x,
                                                  const arith::ArithTable& table) {
  if (!(x >= 1.0)) throw std::domain_error("tatuzawa_iseki_residual: x must be >= 1");
  const auto n_max = static_cast<std::uint64_t>(x);
  if (n_max > table.limit)
    throw std::out_of_range("tatuzawa_iseki_residual: table smaller than floor(x)");
  const double lx = std::log(x);
  KahanSum lhs;
  lhs.add(f(x) * lx);
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    if (table.lambda[n] == 0.0) continue;
    lhs.add(table.lambda[n] * f(x / static_cast<double>(n)));
  }
  KahanSum rhs;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    if (table.mu[n] == 0) continue;
    const double xn = x / static_cast<double>(n);
    rhs.add(double(table.mu[n]) * std::log(xn) * mobius_transform(f, xn));
  }
  return {lhs.value(), rhs.value()};
}

}  // namespace tlab::transforms
