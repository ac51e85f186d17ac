#include "rlvr/policy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rlvr {

ToyPolicy::ToyPolicy(Vocab vocab, int context_width, int embed_dim)
    : vocab_(std::move(vocab)),
      context_width_(context_width),
      embed_dim_(embed_dim),
      params_(param_count(vocab_.size(), embed_dim), 0.0) {
  if (context_width < 1) throw std::invalid_argument("context_width < 1");
  if (embed_dim < 1) throw std::invalid_argument("embed_dim < 1");
  if (vocab_.size() < 2 || vocab_.size() > 64) {
    throw std::invalid_argument("vocab size must be in [2, 64]");
  }
}

void ToyPolicy::init_params(std::uint64_t seed, double scale) {
  Philox rng = make_stream(seed, RngDomain::kParamInit);
  const std::size_t vd = weight_offset();
  for (std::size_t i = 0; i < 2 * vd; ++i) {
    params_[i] = (rng.next_double() - 0.5) * scale;
  }
  std::fill(params_.begin() + 2 * vd, params_.end(), 0.0);
}

void ToyPolicy::check_token(TokenId t) const {
  if (!vocab_.valid(t)) throw std::invalid_argument("token id out of range");
}

void ToyPolicy::context_vector(std::span<const TokenId> prefix,
                               std::span<double> h) const {
  std::fill(h.begin(), h.end(), 0.0);
  const std::size_t len = prefix.size();
  const std::size_t m = std::min<std::size_t>(len, context_width_);
  if (m == 0) return;
  const double* embed = params_.data() + embed_offset();
  for (std::size_t i = len - m; i < len; ++i) {
    check_token(prefix[i]);
    const double* row = embed + static_cast<std::size_t>(prefix[i]) * embed_dim_;
    for (int j = 0; j < embed_dim_; ++j) h[j] += row[j];
  }
  const double inv = 1.0 / static_cast<double>(m);
  for (int j = 0; j < embed_dim_; ++j) h[j] *= inv;
}

std::vector<double> ToyPolicy::logits(std::span<const TokenId> prefix) const {
  const int v_count = vocab_.size();
  std::vector<double> h(embed_dim_);
  context_vector(prefix, h);
  std::vector<double> out(v_count);
  const double* weight = params_.data() + weight_offset();
  const double* bias = params_.data() + bias_offset();
  for (int v = 0; v < v_count; ++v) {
    const double* row = weight + static_cast<std::size_t>(v) * embed_dim_;
    double acc = bias[v];
    for (int j = 0; j < embed_dim_; ++j) acc += row[j] * h[j];
    out[v] = acc;
  }
  return out;
}

double log_sum_exp(std::span<const double> x) {
  const double m = *std::max_element(x.begin(), x.end());
  double s = 0.0;
  for (double v : x) s += std::exp(v - m);
  return m + std::log(s);
}

double ToyPolicy::logprob(std::span<const TokenId> prefix, TokenId token) const {
  check_token(token);
  const std::vector<double> z = logits(prefix);
  return z[token] - log_sum_exp(z);
}

double ToyPolicy::entropy(std::span<const TokenId> prefix) const {
  const std::vector<double> z = logits(prefix);
  const double lse = log_sum_exp(z);
  double h = 0.0;
  for (double zi : z) {
    const double lp = zi - lse;
    h -= std::exp(lp) * lp;
  }
  return h;
}

std::vector<double> ToyPolicy::grad_logprob(std::span<const TokenId> prefix,
                                            TokenId token) const {
  std::vector<double> grad(params_.size(), 0.0);
  accumulate_grad_logprob(prefix, token, 1.0, grad);
  return grad;
}

void ToyPolicy::accumulate_grad_logprob(std::span<const TokenId> prefix,
                                        TokenId token, double weight,
                                        std::span<double> grad) const {
  check_token(token);
  const int v_count = vocab_.size();
  std::vector<double> h(embed_dim_);
  context_vector(prefix, h);

  const double* weight_mat = params_.data() + weight_offset();
  const double* bias = params_.data() + bias_offset();
  std::vector<double> p(v_count);
  {
    double mx = -std::numeric_limits<double>::infinity();
    for (int v = 0; v < v_count; ++v) {
      const double* row = weight_mat + static_cast<std::size_t>(v) * embed_dim_;
      double acc = bias[v];
      for (int j = 0; j < embed_dim_; ++j) acc += row[j] * h[j];
      p[v] = acc;
      mx = std::max(mx, acc);
    }
    double s = 0.0;
    for (int v = 0; v < v_count; ++v) s += (p[v] = std::exp(p[v] - mx));
    const double inv = 1.0 / s;
    for (int v = 0; v < v_count; ++v) p[v] *= inv;
  }

  // dlogit[v] = weight * (1{v==token} - p_v); propagate to b, W, E.
  double* gw = grad.data() + weight_offset();
  double* gb = grad.data() + bias_offset();
  std::vector<double> wt_dlogit(embed_dim_, 0.0);  // W^T dlogit
  for (int v = 0; v < v_count; ++v) {
    const double d = weight * ((v == token ? 1.0 : 0.0) - p[v]);
    gb[v] += d;
    const double* wrow = weight_mat + static_cast<std::size_t>(v) * embed_dim_;
    double* gwrow = gw + static_cast<std::size_t>(v) * embed_dim_;
    for (int j = 0; j < embed_dim_; ++j) {
      gwrow[j] += d * h[j];
      wt_dlogit[j] += d * wrow[j];
    }
  }

  const std::size_t len = prefix.size();
  const std::size_t m = std::min<std::size_t>(len, context_width_);
  if (m == 0) return;
  const double inv_m = 1.0 / static_cast<double>(m);
  double* ge = grad.data() + embed_offset();
  for (std::size_t i = len - m; i < len; ++i) {
    double* row = ge + static_cast<std::size_t>(prefix[i]) * embed_dim_;
    for (int j = 0; j < embed_dim_; ++j) row[j] += inv_m * wt_dlogit[j];
  }
}

}  // namespace rlvr
