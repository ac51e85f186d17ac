#include "rlvr/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rlvr {

void SamplerSettings::validate() const {
  if (!(temperature > 0.0)) throw std::invalid_argument("temperature <= 0");
  if (!(top_p > 0.0 && top_p <= 1.0)) {
    throw std::invalid_argument("top_p outside (0, 1]");
  }
  if (max_response_len < 1) throw std::invalid_argument("max_response_len < 1");
}

namespace {

// Picks the next token from `logits` under the settings, consuming one
// uniform draw. Kept free of policy state so tests can drive it directly.
TokenId pick_token(const std::vector<double>& logits, double temperature,
                   double top_p, double u) {
  const int v_count = static_cast<int>(logits.size());
  std::vector<double> p(v_count);
  {
    std::vector<double> scaled(v_count);
    for (int v = 0; v < v_count; ++v) scaled[v] = logits[v] / temperature;
    const double lse = log_sum_exp(scaled);
    for (int v = 0; v < v_count; ++v) p[v] = std::exp(scaled[v] - lse);
  }

  std::vector<int> order(v_count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&p](int a, int b) {
    if (p[a] != p[b]) return p[a] > p[b];
    return a < b;  // tie-break by token id
  });

  // Inclusive nucleus: keep through the first token reaching top_p.
  int kept = v_count;
  double cum = 0.0;
  for (int i = 0; i < v_count; ++i) {
    cum += p[order[i]];
    if (cum >= top_p) {
      kept = i + 1;
      break;
    }
  }
  double mass = 0.0;
  for (int i = 0; i < kept; ++i) mass += p[order[i]];

  const double target = u * mass;
  double acc = 0.0;
  for (int i = 0; i < kept; ++i) {
    acc += p[order[i]];
    if (target < acc) return order[i];
  }
  return order[kept - 1];
}

}  // namespace

SampledResponse sample_response(const ToyPolicy& policy,
                                const TokenSeq& prompt,
                                const SamplerSettings& settings, Philox& rng) {
  settings.validate();
  const Vocab& vocab = policy.vocab();

  SampledResponse out;
  TokenSeq context = prompt;
  for (int step = 0; step < settings.max_response_len; ++step) {
    const std::vector<double> z = policy.logits(context);
    const double lse = log_sum_exp(z);

    double entropy = 0.0;
    for (double zi : z) {
      const double lp = zi - lse;
      entropy -= std::exp(lp) * lp;
    }
    out.entropy_sum += entropy;

    const TokenId chosen =
        pick_token(z, settings.temperature, settings.top_p, rng.next_double());
    out.tokens.push_back(chosen);
    out.logprobs.push_back(z[chosen] - lse);
    if (chosen == vocab.eos()) return out;
    context.push_back(chosen);
  }
  out.truncated = true;
  return out;
}

}  // namespace rlvr
