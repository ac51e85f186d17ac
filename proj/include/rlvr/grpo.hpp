#ifndef RLVR_GRPO_HPP_
#define RLVR_GRPO_HPP_

#include <span>
#include <string>
#include <vector>

#include "rlvr/policy.hpp"
#include "rlvr/vocab.hpp"

namespace rlvr {

// One prompt's G rollouts with everything the surrogate loss needs. The five
// per-rollout lists stay parallel; old_logprobs are recorded at sampling time
// and frozen for the whole collection phase.
struct RolloutGroup {
  std::string prompt_id;
  TokenSeq prompt_tokens;
  std::vector<TokenSeq> responses;
  std::vector<std::vector<double>> old_logprobs;
  std::vector<double> rewards;
  std::vector<double> advantages;
  std::vector<bool> truncated_flags;

  std::size_t size() const { return responses.size(); }
  void validate() const;  // throws on mismatched shapes or G < 2
};

// Asymmetric clip range; [1 - eps_low, 1 + eps_high] with the upward bound
// larger than the downward one ("clip higher").
struct ClipRange {
  double low = 0.8;
  double high = 1.28;

  void validate() const;
};

struct OverlongPenaltyConfig {
  bool enabled = false;
  int window = 4096;
  int max_response_len = 15000;

  void validate() const;
};

// Group-normalized advantages: (r - mean) / (popstd + 1e-6). A zero-variance
// group carries no learning signal and returns exact zeros.
std::vector<double> normalize_group(const std::vector<double>& rewards,
                                    bool std_normalize = true);

inline constexpr double kAdvantageEps = 1e-6;

// Soft overlong shaping: zero up to max_response_len - window, then linear
// down to -1 at max_response_len, clamped to [-1, 0]. Applied to the reward
// BEFORE group normalization so it flows through advantages. Identity when
// disabled.
double apply_overlong_penalty(double base_reward, int response_len,
                              const OverlongPenaltyConfig& cfg);

struct SurrogateResult {
  double loss = 0.0;
  std::vector<double> grad;
  double clip_fraction = 0.0;   // share of tokens where the clamp binds
  std::size_t token_count = 0;

  bool bitwise_equal(const SurrogateResult& other) const;
};

// Token-level clipped surrogate over a batch of groups, token-mean
// aggregation, no KL term, no entropy bonus:
//   rho_t  = exp(new_logprob_t - old_logprob_t)
//   term_t = min(rho_t * A_i, clamp(rho_t, low, high) * A_i)
//   loss   = -(sum term_t) / (total token count)
// The gradient is the exact analytic gradient of the loss: tokens where the
// clamped branch binds contribute nothing.
//
// Both implementations reduce per-group partial results in group order, so
// they agree bit for bit with each other at any worker count. The serial one
// is the reference the tests and the benchmark compare against.
SurrogateResult surrogate_loss_and_grad_serial(
    const ToyPolicy& policy, std::span<const RolloutGroup> groups,
    const ClipRange& clip);
SurrogateResult surrogate_loss_and_grad(const ToyPolicy& policy,
                                        std::span<const RolloutGroup> groups,
                                        const ClipRange& clip);

}  // namespace rlvr

#endif  // RLVR_GRPO_HPP_
