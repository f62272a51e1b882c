#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace tlab {

// Compensated accumulator.  The estimate sweeps add up to 1e7 terms and the
// remainders under test are many orders below the raw sums, so plain
// left-to-right summation would leak rounding into the normalized columns.
struct KahanSum {
  double sum = 0;
  double comp = 0;

  void add(double v) {
    double y = v - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

// count log-spaced points on [lo, hi], endpoints included.
inline std::vector<double> log_spaced(double lo, double hi, int count) {
  if (!(lo > 0) || !(hi >= lo)) throw std::invalid_argument("log_spaced: need 0 < lo <= hi");
  if (count < 1) throw std::invalid_argument("log_spaced: count must be >= 1");
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    xs.push_back(lo);
    return xs;
  }
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < count; ++i)
    xs.push_back(std::exp(llo + (lhi - llo) * double(i) / double(count - 1)));
  xs.front() = lo;
  xs.back() = hi;
  return xs;
}

}  // namespace tlab
