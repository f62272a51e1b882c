#include "tlab/io.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace tlab::io {

namespace {

using ordered_json = nlohmann::ordered_json;

std::ofstream open_or_throw(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file: " + path.string());
  return out;
}

void finish_or_throw(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::string format_g15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

void write_series_csv(const std::filesystem::path& path, const RemainderSeries& series) {
  auto out = open_or_throw(path);
  out << "x,raw,main,remainder,normalized,normalizer\n";
  for (const auto& r : series.records) {
    out << format_g15(r.x) << ',' << format_g15(r.raw) << ',' << format_g15(r.main)
        << ',' << format_g15(r.remainder) << ',' << format_g15(r.normalized) << ','
        << csv_escape(series.normalizer) << '\n';
  }
  finish_or_throw(out, path);
}

void write_series_json(const std::filesystem::path& path, const RemainderSeries& series) {
  ordered_json x = ordered_json::array();
  ordered_json raw = ordered_json::array();
  ordered_json main = ordered_json::array();
  ordered_json rem = ordered_json::array();
  ordered_json norm = ordered_json::array();
  for (const auto& r : series.records) {
    x.push_back(r.x);
    raw.push_back(r.raw);
    main.push_back(r.main);
    rem.push_back(r.remainder);
    norm.push_back(r.normalized);
  }
  ordered_json cols;
  cols["x"] = std::move(x);
  cols["raw"] = std::move(raw);
  cols["main"] = std::move(main);
  cols["remainder"] = std::move(rem);
  cols["normalized"] = std::move(norm);
  ordered_json doc;
  doc["name"] = series.name;
  doc["normalizer"] = series.normalizer;
  doc["columns"] = std::move(cols);
  auto out = open_or_throw(path);
  out << doc.dump(2) << '\n';
  finish_or_throw(out, path);
}

void write_reports_csv(const std::filesystem::path& path,
                       std::span<const VerificationReport> reports) {
  auto out = open_or_throw(path);
  out << "name,range,max_violation,location,status\n";
  for (const auto& r : reports) {
    out << csv_escape(r.name) << ',' << csv_escape(r.range) << ','
        << format_g15(r.max_violation) << ',' << format_g15(r.location) << ','
        << (r.pass ? "PASS" : "FAIL") << '\n';
  }
  finish_or_throw(out, path);
}

void write_reports_json(const std::filesystem::path& path,
                        std::span<const VerificationReport> reports) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json row;
    row["name"] = r.name;
    row["range"] = r.range;
    row["max_violation"] = r.max_violation;
    row["location"] = r.location;
    row["status"] = r.pass ? "PASS" : "FAIL";
    row["tolerance"] = r.tolerance;
    row["notes"] = r.notes;
    arr.push_back(std::move(row));
  }
  ordered_json doc;
  doc["reports"] = std::move(arr);
  auto out = open_or_throw(path);
  out << doc.dump(2) << '\n';
  finish_or_throw(out, path);
}

}  // namespace tlab::io
