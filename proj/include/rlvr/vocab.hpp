#ifndef RLVR_VOCAB_HPP_
#define RLVR_VOCAB_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rlvr {

using TokenId = std::int32_t;
using TokenSeq = std::vector<TokenId>;

// The instruction suffix appended to every prompt, in text and (as one
// dedicated token) in the toy encoding.
inline constexpr std::string_view kPromptSuffix =
    "Please reason step by step, and put your final answer within "
    "\\boxed{}.";

// Small fixed vocabulary standing in for an LLM tokenizer. Ids are dense
// 0..V-1. BOS/EOS render as empty text; every other token renders as its
// surface string, so decoding a response yields the text the verifier sees.
class Vocab {
 public:
  static Vocab standard();

  int size() const { return static_cast<int>(surfaces_.size()); }
  TokenId bos() const { return bos_; }
  TokenId eos() const { return eos_; }
  TokenId unk() const { return unk_; }
  TokenId box_open() const { return box_open_; }
  TokenId box_close() const { return box_close_; }
  TokenId suffix_token() const { return suffix_; }
  TokenId digit(int d) const { return digit0_ + d; }

  bool valid(TokenId t) const { return t >= 0 && t < size(); }
  const std::string& surface(TokenId t) const { return surfaces_[t]; }

  // Greedy longest-match tokenization; characters outside the vocabulary
  // map to the UNK token. Never fails.
  TokenSeq encode(std::string_view text) const;

  // Concatenates surfaces; BOS and EOS render as "".
  std::string decode(const TokenSeq& tokens) const;

  // The fixed token sequence appended to every encoded prompt.
  TokenSeq suffix_tokens() const { return {space_, suffix_}; }

 private:
  std::vector<std::string> surfaces_;
  TokenId bos_ = 0;
  TokenId eos_ = 0;
  TokenId unk_ = 0;
  TokenId box_open_ = 0;
  TokenId box_close_ = 0;
  TokenId suffix_ = 0;
  TokenId space_ = 0;
  TokenId digit0_ = 0;
};

}  // namespace rlvr

#endif  // RLVR_VOCAB_HPP_
