#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "tlab/arith.hpp"

namespace tlab::transforms {

// Right-continuous jump function on [1, inf): value(x) = sum of the sizes of
// all jumps at locations <= x, so a jump at exactly x is included.  Zero-size
// jumps are dropped on construction.
class StepFunction {
 public:
  StepFunction() = default;
  StepFunction(std::vector<double> locations, std::vector<double> sizes);

  double value(double x) const;

  // int_{1-0}^x df(t)/t = sum of size/loc over jumps with loc <= x.
  double stieltjes_over_t(double x) const;

  bool non_decreasing() const { return non_decreasing_; }
  std::size_t jump_count() const { return loc_.size(); }
  const std::vector<double>& locations() const { return loc_; }
  const std::vector<double>& sizes() const { return size_; }

 private:
  std::vector<double> loc_;
  std::vector<double> size_;
  std::vector<double> cum_value_;
  std::vector<double> cum_over_t_;
  bool non_decreasing_ = true;
};

// int_1^x (f(t) - A t)/t^2 dt, exactly, piece by piece; with `absolute` the
// integrand is |f(t) - A t|/t^2 and each piece is split at its sign change.
double integral_g_over_t2(const StepFunction& f, double a, double x, bool absolute);

// Same integral at several ascending x in one sweep over the jumps.
std::vector<double> integral_g_over_t2_batch(const StepFunction& f, double a,
                                             std::span<const double> xs, bool absolute);

// A real function on [1, inf), extended by 0 on [0, 1).
class RealFn {
 public:
  static RealFn constant_one();
  static RealFn identity();
  static RealFn x_log_x();
  static RealFn floor_fn();
  static RealFn step(StepFunction f);
  static RealFn table(std::vector<double> values);  // value at floor(x), 1-indexed
  static RealFn callable(std::function<double(double)> f);
  // Lazy F(x) = sum_{n<=x} f(x/n); handy for round-trip checks.
  static RealFn mobius_transform_of(RealFn f);

  double operator()(double x) const;

 private:
  struct OneTag {};
  struct IdTag {};
  struct XLogXTag {};
  struct FloorTag {};
  using Impl = std::variant<OneTag, IdTag, XLogXTag, FloorTag, StepFunction,
                            std::vector<double>, std::function<double(double)>>;
  explicit RealFn(Impl impl) : impl_(std::move(impl)) {}
  Impl impl_;
};

// F(x) = sum_{n<=x} f(x/n).
double mobius_transform(const RealFn& f, double x);

// f(x) = sum_{n<=x} mu(n) F(x/n).
double inverse_mobius_transform(const RealFn& big_f, double x,
                                const arith::ArithTable& table);

// lhs = f(x) log x + sum_{n<=x} Lambda(n) f(x/n),
// rhs = sum_{n<=x} mu(n) log(x/n) F(x/n)  with F the transform of f.
std::pair<double, double> tatuzawa_iseki_residual(const RealFn& f, double x,
                                                  const arith::ArithTable& table);

inline double stieltjes_over_t(const StepFunction& f, double x) {
  return f.stieltjes_over_t(x);
}

}  // namespace tlab::transforms
