#include "rlvr/vocab.hpp"

#include <algorithm>

namespace rlvr {

Vocab Vocab::standard() {
  Vocab v;
  auto add = [&v](std::string s) {
    v.surfaces_.push_back(std::move(s));
    return static_cast<TokenId>(v.surfaces_.size() - 1);
  };
  v.bos_ = add("");  // <bos>
  v.eos_ = add("");  // <eos>
  v.digit0_ = add("0");
  for (int d = 1; d <= 9; ++d) add(std::string(1, static_cast<char>('0' + d)));
  add("+");
  add("-");
  add("*");
  add("%");
  add("=");
  add("?");
  v.space_ = add(" ");
  v.box_open_ = add("\\boxed{");
  v.box_close_ = add("}");
  v.suffix_ = add(std::string(kPromptSuffix));
  v.unk_ = add("<unk>");
  add(".");
  return v;
}

TokenSeq Vocab::encode(std::string_view text) const {
  TokenSeq out;
  out.push_back(bos_);
  std::size_t i = 0;
  while (i < text.size()) {
    TokenId best = -1;
    std::size_t best_len = 0;
    for (TokenId t = 0; t < size(); ++t) {
      const std::string& s = surfaces_[t];
      if (s.empty() || t == unk_) continue;
      if (s.size() > best_len && text.substr(i, s.size()) == s) {
        best = t;
        best_len = s.size();
      }
    }
    if (best >= 0) {
      out.push_back(best);
      i += best_len;
    } else {
      out.push_back(unk_);
      i += 1;
    }
  }
  return out;
}

std::string Vocab::decode(const TokenSeq& tokens) const {
  std::string out;
  for (TokenId t : tokens) {
    if (valid(t)) out += surfaces_[t];
  }
  return out;
}

}  // namespace rlvr
