#ifndef RLVR_TELEMETRY_HPP_
#define RLVR_TELEMETRY_HPP_

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace rlvr {

// One row per training step, mirroring the three training-dynamics panels
// (entropy, reward, length) plus clip statistics and wall time.
struct TelemetryRecord {
  int step = 0;
  double mean_reward = 0.0;
  double mean_entropy = 0.0;       // nats, averaged over sampled tokens
  double mean_response_len = 0.0;  // tokens
  double clip_fraction = 0.0;
  std::int64_t wall_ms = 0;
};

inline constexpr const char* kTelemetryHeader =
    "step,mean_reward,mean_entropy,mean_response_len,clip_fraction,wall_ms";

// Appends rows incrementally and flushes after each one, so a crashed run
// leaves a readable prefix.
class TelemetryWriter {
 public:
  explicit TelemetryWriter(const std::string& path, bool append = false);
  void write(const TelemetryRecord& record);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ofstream out_;
};

std::string format_telemetry_row(const TelemetryRecord& record);

// Strict reader for the documented header; throws std::runtime_error on a
// missing/incorrect header or malformed rows.
std::vector<TelemetryRecord> read_telemetry_csv(const std::string& path);

}  // namespace rlvr

#endif  // RLVR_TELEMETRY_HPP_
