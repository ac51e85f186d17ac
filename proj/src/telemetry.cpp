#include "rlvr/telemetry.hpp"

#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace rlvr {

namespace {

// Shortest round-trip formatting keeps the CSV byte-stable across runs that
// compute identical doubles.
std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("double formatting failed");
  return std::string(buf, ptr);
}

}  // namespace

TelemetryWriter::TelemetryWriter(const std::string& path, bool append)
    : path_(path),
      out_(path, append ? std::ios::app : std::ios::trunc) {
  if (!out_) throw std::runtime_error("cannot open telemetry CSV: " + path);
  if (!append) {
    out_ << kTelemetryHeader << "\n";
    out_.flush();
  }
}

void TelemetryWriter::write(const TelemetryRecord& record) {
  out_ << format_telemetry_row(record) << "\n";
  out_.flush();
  if (!out_) throw std::runtime_error("I/O failure writing telemetry: " + path_);
}

std::string format_telemetry_row(const TelemetryRecord& record) {
  std::ostringstream row;
  row << record.step << ',' << format_double(record.mean_reward) << ','
      << format_double(record.mean_entropy) << ','
      << format_double(record.mean_response_len) << ','
      << format_double(record.clip_fraction) << ',' << record.wall_ms;
  return row.str();
}

std::vector<TelemetryRecord> read_telemetry_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open telemetry CSV: " + path);
  std::string line;
  if (!std::getline(in, line) || line != kTelemetryHeader) {
    throw std::runtime_error("telemetry CSV missing documented header: " +
                             path);
  }
  std::vector<TelemetryRecord> records;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    TelemetryRecord r;
    double wall = 0.0;
    const int fields =
        std::sscanf(line.c_str(), "%d,%lf,%lf,%lf,%lf,%lf", &r.step,
                    &r.mean_reward, &r.mean_entropy, &r.mean_response_len,
                    &r.clip_fraction, &wall);
    if (fields != 6) {
      std::ostringstream msg;
      msg << path << ":" << line_no << ": malformed telemetry row";
      throw std::runtime_error(msg.str());
    }
    r.wall_ms = static_cast<std::int64_t>(wall);
    records.push_back(r);
  }
  return records;
}

}  // namespace rlvr
