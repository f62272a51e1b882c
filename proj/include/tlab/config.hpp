#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tlab/numeric.hpp"

namespace tlab {

// Shared CLI configuration; every field maps to a flag of the same name and
// to a key in the optional config file (TLAB_CONFIG).
struct RunConfig {
  std::uint64_t limit = 100'000;
  int samples = 40;
  double min_x = 100.0;
  double max_x = 0.0;  // 0 = use limit
  double delta = 1e-3;
  double tol_scale = 1.0;
  std::string format = "csv";  // csv | json
  std::string out = "tlab-out";
  std::uint64_t seed = 12345;
  std::string label = "PSI";  // PSI | MERTENS_PLUS_FLOOR

  void validate() const {
    if (limit < 1) throw std::invalid_argument("config: limit must be >= 1");
    if (samples < 1) throw std::invalid_argument("config: samples must be >= 1");
    if (!(min_x >= 2.0)) throw std::invalid_argument("config: min-x must be >= 2");
    if (!(delta > 0.0)) throw std::invalid_argument("config: delta must be > 0");
    if (!(tol_scale > 0.0)) throw std::invalid_argument("config: tol-scale must be > 0");
    if (format != "csv" && format != "json")
      throw std::invalid_argument("config: format must be csv or json");
  }

  double effective_max_x() const { return max_x > 0.0 ? max_x : double(limit); }

  // Only the sampling subcommands constrain min-x/max-x against the limit.
  std::vector<double> sample_points() const {
    const double hi = effective_max_x();
    if (hi < min_x) throw std::invalid_argument("config: max-x must be >= min-x");
    if (hi > double(limit))
      throw std::invalid_argument("config: max-x must not exceed limit");
    return log_spaced(min_x, hi, samples);
  }
};

}  // namespace tlab
