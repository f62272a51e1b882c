#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "tlab/report.hpp"

namespace tlab::io {

// 15 significant digits, '.' decimal separator, locale-independent.
std::string format_g15(double v);

// Series files: header x,raw,main,remainder,normalized,normalizer.
void write_series_csv(const std::filesystem::path& path, const RemainderSeries& series);
void write_series_json(const std::filesystem::path& path, const RemainderSeries& series);

// Report files: header name,range,max_violation,location,status.
void write_reports_csv(const std::filesystem::path& path,
                       std::span<const VerificationReport> reports);
void write_reports_json(const std::filesystem::path& path,
                        std::span<const VerificationReport> reports);

}  // namespace tlab::io
