#include "rlvr/grpo.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "rlvr/parallel.hpp"

namespace rlvr {

void RolloutGroup::validate() const {
  const std::size_t g = responses.size();
  if (g < 2) throw std::invalid_argument("rollout group needs G >= 2");
  if (old_logprobs.size() != g || rewards.size() != g ||
      advantages.size() != g || truncated_flags.size() != g) {
    throw std::invalid_argument("rollout group lists have mismatched lengths");
  }
  for (std::size_t i = 0; i < g; ++i) {
    if (old_logprobs[i].size() != responses[i].size()) {
      throw std::invalid_argument(
          "old_logprobs length does not match response length");
    }
  }
}

void ClipRange::validate() const {
  if (!(0.0 < low && low < 1.0 && 1.0 < high)) {
    throw std::invalid_argument("clip range must satisfy 0 < low < 1 < high");
  }
}

void OverlongPenaltyConfig::validate() const {
  if (!enabled) return;
  if (!(0 < window && window < max_response_len)) {
    throw std::invalid_argument(
        "overlong penalty needs 0 < window < max_response_len");
  }
}

std::vector<double> normalize_group(const std::vector<double>& rewards,
                                    bool std_normalize) {
  const std::size_t n = rewards.size();
  if (n < 2) throw std::invalid_argument("reward group needs size >= 2");

  double mean = 0.0;
  for (double r : rewards) mean += r;
  mean /= static_cast<double>(n);

  bool all_equal = true;
  for (double r : rewards) {
    if (r != rewards[0]) {
      all_equal = false;
      break;
    }
  }
  if (all_equal) return std::vector<double>(n, 0.0);

  std::vector<double> advantages(n);
  double denom = 1.0;
  if (std_normalize) {
    double var = 0.0;
    for (double r : rewards) var += (r - mean) * (r - mean);
    var /= static_cast<double>(n);  // population variance
    denom = std::sqrt(var) + kAdvantageEps;
  }
  for (std::size_t i = 0; i < n; ++i) {
    advantages[i] = (rewards[i] - mean) / denom;
  }
  return advantages;
}

double apply_overlong_penalty(double base_reward, int response_len,
                              const OverlongPenaltyConfig& cfg) {
  if (!cfg.enabled) return base_reward;
  cfg.validate();
  if (response_len < 0) throw std::invalid_argument("response_len < 0");
  const double threshold = cfg.max_response_len - cfg.window;
  double penalty = 0.0;
  if (response_len > threshold) {
    penalty = (threshold - response_len) / static_cast<double>(cfg.window);
    penalty = std::max(-1.0, std::min(0.0, penalty));
  }
  return base_reward + penalty;
}

bool SurrogateResult::bitwise_equal(const SurrogateResult& other) const {
  if (grad.size() != other.grad.size() || token_count != other.token_count) {
    return false;
  }
  if (std::memcmp(&loss, &other.loss, sizeof(double)) != 0) return false;
  if (std::memcmp(&clip_fraction, &other.clip_fraction, sizeof(double)) != 0) {
    return false;
  }
  return grad.empty() ||
         std::memcmp(grad.data(), other.grad.data(),
                     grad.size() * sizeof(double)) == 0;
}

namespace {

struct GroupPartial {
  double term_sum = 0.0;
  std::vector<double> grad_sum;  // d(sum of terms)/dtheta
  std::size_t tokens = 0;
  std::size_t clipped = 0;
};

// Unnormalized surrogate contribution of one group. The division by the
// batch-wide token count happens in the ordered reduction.
GroupPartial group_partial(const ToyPolicy& policy, const RolloutGroup& group,
                           const ClipRange& clip) {
  GroupPartial out;
  out.grad_sum.assign(policy.params().size(), 0.0);

  TokenSeq context;
  for (std::size_t i = 0; i < group.size(); ++i) {
    const TokenSeq& response = group.responses[i];
    const double advantage = group.advantages[i];
    context = group.prompt_tokens;
    for (std::size_t t = 0; t < response.size(); ++t) {
      const TokenId token = response[t];
      const double new_lp = policy.logprob(context, token);
      const double rho = std::exp(new_lp - group.old_logprobs[i][t]);
      const double clamped = std::min(clip.high, std::max(clip.low, rho));
      const double unclipped_term = rho * advantage;
      const double clipped_term = clamped * advantage;
      ++out.tokens;
      if (unclipped_term <= clipped_term) {
        out.term_sum += unclipped_term;
        // d term / dtheta = advantage * rho * d new_lp / dtheta
        policy.accumulate_grad_logprob(context, token, advantage * rho,
                                       out.grad_sum);
      } else {
        out.term_sum += clipped_term;  // constant in theta: no gradient
        ++out.clipped;
      }
      context.push_back(token);
    }
  }
  return out;
}

SurrogateResult reduce_partials(const ToyPolicy& policy,
                                const std::vector<GroupPartial>& partials) {
  SurrogateResult result;
  result.grad.assign(policy.params().size(), 0.0);
  double term_sum = 0.0;
  std::size_t clipped = 0;
  for (const GroupPartial& p : partials) {  // fixed order: group index
    term_sum += p.term_sum;
    result.token_count += p.tokens;
    clipped += p.clipped;
    for (std::size_t j = 0; j < result.grad.size(); ++j) {
      result.grad[j] += p.grad_sum[j];
    }
  }
  if (result.token_count == 0) {
    return result;
  }
  const double inv = -1.0 / static_cast<double>(result.token_count);
  result.loss = inv * term_sum;
  for (double& g : result.grad) g *= inv;
  result.clip_fraction =
      static_cast<double>(clipped) / static_cast<double>(result.token_count);
  return result;
}

}  // namespace

SurrogateResult surrogate_loss_and_grad_serial(
    const ToyPolicy& policy, std::span<const RolloutGroup> groups,
    const ClipRange& clip) {
  clip.validate();
  for (const RolloutGroup& group : groups) group.validate();
  std::vector<GroupPartial> partials(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    partials[g] = group_partial(policy, groups[g], clip);
  }
  return reduce_partials(policy, partials);
}

SurrogateResult surrogate_loss_and_grad(const ToyPolicy& policy,
                                        std::span<const RolloutGroup> groups,
                                        const ClipRange& clip) {
  clip.validate();
  for (const RolloutGroup& group : groups) group.validate();
  std::vector<GroupPartial> partials(groups.size());
  parallel_for(groups.size(), [&](std::size_t g) {
    partials[g] = group_partial(policy, groups[g], clip);
  });
  return reduce_partials(policy, partials);
}

}  // namespace rlvr
