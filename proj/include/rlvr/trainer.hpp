#ifndef RLVR_TRAINER_HPP_
#define RLVR_TRAINER_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rlvr/grpo.hpp"
#include "rlvr/policy.hpp"
#include "rlvr/tasks.hpp"
#include "rlvr/telemetry.hpp"
#include "rlvr/verifier.hpp"

namespace rlvr {

// Fixed hyperparameters for the whole run: single-stage, no schedules, no
// stage transitions. desk() is sized for laptop runs; paper_scale() carries
// the full-scale values. use_kl and use_entropy_bonus exist only so that
// validate() can reject them: the objective has no KL or entropy term.
struct TrainConfig {
  int train_batch_size = 32;
  int mini_batch_size = 8;
  int rollout_n = 8;  // G rollouts per prompt
  double learning_rate = 1e-2;  // constant; there is no schedule
  double temperature = 1.0;
  int max_prompt_len = 64;
  int max_response_len = 64;
  ClipRange clip{0.8, 1.28};
  int total_steps = 300;
  std::uint64_t seed = 1;
  OverlongPenaltyConfig overlong{};  // disabled unless the ablation is on
  VerifierProfile::Name verifier_profile = VerifierProfile::Name::kStrict;
  bool use_kl = false;
  bool use_entropy_bonus = false;
  bool std_normalize_advantages = true;
  int checkpoint_interval = 50;

  // Policy shape.
  int context_width = 8;
  int embed_dim = 16;
  double init_scale = 1.0;

  static TrainConfig desk() { return TrainConfig{}; }
  static TrainConfig paper_scale();

  void validate() const;
  VerifierProfile profile() const;
};

// G rollouts per task, sampled on per-(step, slot, rollout) substreams so
// results do not depend on worker count, then verified, shaped, and
// group-normalized. The pre-update policy produces every number here.
std::vector<RolloutGroup> collect_groups(const ToyPolicy& policy,
                                         std::span<const Task> batch,
                                         const TrainConfig& cfg, int step);
std::vector<RolloutGroup> collect_groups_serial(const ToyPolicy& policy,
                                                std::span<const Task> batch,
                                                const TrainConfig& cfg,
                                                int step);

struct UpdateStats {
  int updates = 0;
  double clip_fraction = 0.0;  // token-weighted over the step's updates
  double last_loss = 0.0;
};

// train_batch_size / mini_batch_size sequential SGD steps at the constant
// learning rate, old log-probs frozen from collection.
UpdateStats update_from_groups(ToyPolicy& policy,
                               std::span<const RolloutGroup> groups,
                               const TrainConfig& cfg);

TelemetryRecord train_step(ToyPolicy& policy, std::span<const Task> batch,
                           const TrainConfig& cfg, int step);

struct TrainPaths {
  std::string telemetry_csv;   // empty: keep telemetry in memory only
  std::string checkpoint_dir;  // empty: no checkpoints
};

struct TrainResult {
  std::vector<TelemetryRecord> telemetry;
  std::vector<std::string> checkpoints;  // retained files, oldest first
  std::string best_checkpoint;
};

// Runs total_steps steps over a seeded shuffle of the pool (reshuffled each
// pass), appending telemetry incrementally and checkpointing every
// checkpoint_interval steps (last 3 kept plus best by mean reward).
// start_step > 0 resumes after that many completed steps and reproduces the
// same tail as an uninterrupted run.
TrainResult train(ToyPolicy& policy, const std::vector<Task>& pool,
                  const TrainConfig& cfg, const TrainPaths& paths,
                  int start_step = 0);

// Deterministic task order: pass `index / pool size` picks a seeded
// permutation, so any position in the stream is addressable for resume.
class ShuffledTaskStream {
 public:
  ShuffledTaskStream(const std::vector<Task>& pool, std::uint64_t seed);
  const Task& at(std::uint64_t global_index);

 private:
  const std::vector<Task>& pool_;
  std::uint64_t seed_;
  std::uint64_t cached_epoch_;
  std::vector<std::size_t> perm_;
};

}  // namespace rlvr

#endif  // RLVR_TRAINER_HPP_
