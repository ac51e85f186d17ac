#ifndef RLVR_CHECKPOINT_HPP_
#define RLVR_CHECKPOINT_HPP_

#include <cstdint>
#include <string>

#include "rlvr/policy.hpp"

namespace rlvr {

// Policy checkpoint, little-endian binary:
//   bytes 0..7   magic "RLVRCKPT"
//   u32          format version (1)
//   u32          vocab size V
//   u32          context width k
//   u32          embed dim d
//   u64          training step the snapshot was taken at
//   f64 * V(2d+1) parameters
// A JSON sidecar (same path + ".json") records the config snapshot.
inline constexpr char kCheckpointMagic[9] = "RLVRCKPT";
inline constexpr std::uint32_t kCheckpointVersion = 1;

struct CheckpointMeta {
  std::uint64_t step = 0;
  std::string config_json;  // sidecar payload, may be empty
};

void save_checkpoint(const ToyPolicy& policy, const std::string& path,
                     const CheckpointMeta& meta);

// Loads into a fresh policy over the standard vocabulary. Throws
// std::runtime_error with a layout diagnostic on any structural problem.
ToyPolicy load_checkpoint(const std::string& path, CheckpointMeta* meta = nullptr);

}  // namespace rlvr

#endif  // RLVR_CHECKPOINT_HPP_
