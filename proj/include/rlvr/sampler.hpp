#ifndef RLVR_SAMPLER_HPP_
#define RLVR_SAMPLER_HPP_

#include <cstdint>
#include <vector>

#include "rlvr/policy.hpp"
#include "rlvr/rng.hpp"
#include "rlvr/vocab.hpp"

namespace rlvr {

struct SamplerSettings {
  double temperature = 1.0;
  double top_p = 1.0;
  int max_response_len = 64;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SampledResponse {
  TokenSeq tokens;                 // ends with EOS unless truncated
  std::vector<double> logprobs;    // temperature-1 policy logprob per token
  double entropy_sum = 0.0;        // sum of policy entropies at each prefix
  bool truncated = false;          // hit max_response_len without EOS
};

// Autoregressive sampling: temperature scaling, then nucleus truncation
// (tokens sorted by probability, ties broken by token id; the token that
// first pushes cumulative probability to >= top_p is included). Stops at EOS
// or max_response_len. Recorded logprobs are the untruncated temperature-1
// policy log-probabilities of the chosen tokens, captured at sampling time.
SampledResponse sample_response(const ToyPolicy& policy,
                                const TokenSeq& prompt,
                                const SamplerSettings& settings, Philox& rng);

}  // namespace rlvr

#endif  // RLVR_SAMPLER_HPP_
