#pragma once

#include <string>
#include <vector>

namespace tlab {

// One sampled point of a remainder-tracked series.  `remainder` is always
// raw - main as stored; `normalized` is remainder divided by the series'
// remainder scale at x (NaN when the scale vanishes, e.g. log x at x = 1).
struct SeriesRecord {
  double x = 0;
  double raw = 0;
  double main = 0;
  double remainder = 0;
  double normalized = 0;
};

struct RemainderSeries {
  std::string name;
  std::string normalizer;  // human-readable remainder scale, e.g. "1/x"
  std::vector<SeriesRecord> records;
};

// Outcome of one verification sweep.  Checks with a per-point tolerance
// store the worst violation / tolerance ratio and declare tolerance 1;
// exact checks store the raw violation and tolerance 0.  `pass` is always
// max_violation <= tolerance.
struct VerificationReport {
  std::string name;
  std::string range;
  double max_violation = 0;
  double location = 0;
  double tolerance = 0;
  bool pass = true;
  std::string notes;
};

inline VerificationReport make_report(std::string name, std::string range,
                                      double max_violation, double location,
                                      double tolerance, std::string notes = {}) {
  VerificationReport r;
  r.name = std::move(name);
  r.range = std::move(range);
  r.max_violation = max_violation;
  r.location = location;
  r.tolerance = tolerance;
  r.pass = max_violation <= tolerance;
  r.notes = std::move(notes);
  return r;
}

}  // namespace tlab
