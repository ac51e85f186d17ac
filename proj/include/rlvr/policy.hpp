#ifndef RLVR_POLICY_HPP_
#define RLVR_POLICY_HPP_

#include <span>
#include <vector>

#include "rlvr/rng.hpp"
#include "rlvr/vocab.hpp"

namespace rlvr {

// Differentiable autoregressive policy over a small vocabulary.
//
// Architecture: token embeddings of dimension `embed_dim`, averaged over the
// last `context_width` tokens of the prefix, followed by one affine map to
// V logits. Parameter count is V * (2 * embed_dim + 1), laid out flat as
//   [ E: V x d ][ W: V x d ][ b: V ]
// with row-major rows per token id. Evaluation is deterministic given the
// parameters; all sampling randomness lives in the caller's RNG stream.
class ToyPolicy {
 public:
  ToyPolicy(Vocab vocab, int context_width, int embed_dim);

  static std::size_t param_count(int vocab_size, int embed_dim) {
    return static_cast<std::size_t>(vocab_size) * (2 * embed_dim + 1);
  }

  const Vocab& vocab() const { return vocab_; }
  int vocab_size() const { return vocab_.size(); }
  int context_width() const { return context_width_; }
  int embed_dim() const { return embed_dim_; }

  std::vector<double>& params() { return params_; }
  const std::vector<double>& params() const { return params_; }

  // Uniform(-scale/2, scale/2) init for E and W, zero bias. Zero E and W
  // would freeze the bilinear path (their gradients vanish at zero), so the
  // default is a small random init that stays near the uniform distribution.
  void init_params(std::uint64_t seed, double scale = 1.0);

  // Next-token logits for a prefix. Defined for every prefix, including the
  // empty one (zero context vector).
  std::vector<double> logits(std::span<const TokenId> prefix) const;

  // log softmax(logits(prefix))[token], at temperature 1.
  double logprob(std::span<const TokenId> prefix, TokenId token) const;

  // Shannon entropy (nats) of the next-token distribution; in [0, ln V].
  double entropy(std::span<const TokenId> prefix) const;

  // Analytic d/dtheta of logprob(prefix, token), same layout as params().
  std::vector<double> grad_logprob(std::span<const TokenId> prefix,
                                   TokenId token) const;

  // Adds weight * grad_logprob(prefix, token) into grad (sized param_count).
  // Shared by grad_logprob and the surrogate-loss backward pass.
  void accumulate_grad_logprob(std::span<const TokenId> prefix, TokenId token,
                               double weight, std::span<double> grad) const;

  // Parameter block offsets into the flat vector.
  std::size_t embed_offset() const { return 0; }
  std::size_t weight_offset() const {
    return static_cast<std::size_t>(vocab_.size()) * embed_dim_;
  }
  std::size_t bias_offset() const { return 2 * weight_offset(); }

 private:
  void check_token(TokenId t) const;
  // Mean embedding of the last min(k, len) prefix tokens; zero if empty.
  void context_vector(std::span<const TokenId> prefix,
                      std::span<double> h) const;

  Vocab vocab_;
  int context_width_;
  int embed_dim_;
  std::vector<double> params_;
};

// log softmax helper shared with the sampler: returns log(sum(exp(x))) in a
// numerically stable way.
double log_sum_exp(std::span<const double> x);

}  // namespace rlvr

#endif  // RLVR_POLICY_HPP_
