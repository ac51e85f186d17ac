#include "rlvr/verifier.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace rlvr {

namespace {

const std::vector<NormalizationRule>& default_rules() {
  static const std::vector<NormalizationRule> rules = {
      NormalizationRule::kStripDelimiters,
      NormalizationRule::kRemoveLeftRight,
      NormalizationRule::kUnifyFrac,
      NormalizationRule::kStripThousandsSeps,
      NormalizationRule::kCollapseWhitespace,
      NormalizationRule::kLowercaseBareWords,
      NormalizationRule::kCanonicalFraction,
  };
  return rules;
}

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

std::string strip_delimiters(std::string s) {
  for (;;) {
    std::size_t b = 0, e = s.size();
    while (b < e && is_ws(s[b])) ++b;
    while (e > b && is_ws(s[e - 1])) --e;
    bool changed = (b != 0 || e != s.size());
    if (e - b >= 2 && s[b] == '$' && s[e - 1] == '$') {
      ++b;
      --e;
      changed = true;
    }
    s = s.substr(b, e - b);
    if (!changed) return s;
  }
}

std::string remove_all(std::string s, std::string_view needle) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s.compare(i, needle.size(), needle) == 0) {
      i += needle.size();
    } else {
      out += s[i++];
    }
  }
  return out;
}

std::string replace_all(std::string s, std::string_view from,
                        std::string_view to) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s.compare(i, from.size(), from) == 0) {
      out += to;
      i += from.size();
    } else {
      out += s[i++];
    }
  }
  return out;
}

// "1,000" / "1{,}000" -> "1000" when the whole string is a number whose
// separators delimit groups of three digits; anything else is untouched so
// tuples like "1,2" survive.
std::string strip_thousands_separators(const std::string& s) {
  std::size_t i = 0;
  std::string digits;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) digits += s[i++];
  std::size_t lead = 0;
  while (i < s.size() && is_digit(s[i]) && lead < 3) {
    digits += s[i++];
    ++lead;
  }
  if (lead == 0) return s;
  bool any_group = false;
  while (i < s.size()) {
    std::size_t sep_len = 0;
    if (s[i] == ',') {
      sep_len = 1;
    } else if (s.compare(i, 3, "{,}") == 0) {
      sep_len = 3;
    } else {
      break;
    }
    if (i + sep_len + 3 > s.size()) return s;
    for (std::size_t j = 0; j < 3; ++j) {
      if (!is_digit(s[i + sep_len + j])) return s;
    }
    digits.append(s, i + sep_len, 3);
    i += sep_len + 3;
    any_group = true;
  }
  if (!any_group) return s;
  if (i < s.size()) {
    if (s[i] != '.') return s;
    digits += s[i++];
    if (i == s.size()) return s;
    while (i < s.size() && is_digit(s[i])) digits += s[i++];
    if (i != s.size()) return s;
  }
  return digits;
}

std::string collapse_whitespace(const std::string& s) {
  std::string out;
  bool in_run = false;
  for (char c : s) {
    if (is_ws(c)) {
      in_run = true;
      continue;
    }
    if (in_run && !out.empty()) out += ' ';
    in_run = false;
    out += c;
  }
  return out;
}

std::string lowercase_bare_words(const std::string& s) {
  std::string out = s;
  std::size_t i = 0;
  while (i < out.size()) {
    if (out[i] == '\\') {
      ++i;  // skip the command name unchanged
      while (i < out.size() && is_alpha(out[i])) ++i;
      continue;
    }
    if (is_alpha(out[i])) {
      std::size_t j = i;
      while (j < out.size() && is_alpha(out[j])) ++j;
      if (j - i >= 2) {
        for (std::size_t t = i; t < j; ++t) {
          out[t] = static_cast<char>(std::tolower(
              static_cast<unsigned char>(out[t])));
        }
      }
      i = j;
      continue;
    }
    ++i;
  }
  return out;
}

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!is_digit(s[i])) return false;
  }
  return true;
}

// Reads a {...} group starting at `pos` (which must point at '{'); returns
// the contents and advances pos past the closing brace, or nullopt.
std::optional<std::string> read_brace_group(const std::string& s,
                                            std::size_t& pos) {
  if (pos >= s.size() || s[pos] != '{') return std::nullopt;
  int depth = 0;
  const std::size_t start = pos + 1;
  for (std::size_t i = pos; i < s.size(); ++i) {
    if (s[i] == '{') ++depth;
    if (s[i] == '}') {
      --depth;
      if (depth == 0) {
        std::string content = s.substr(start, i - start);
        pos = i + 1;
        return content;
      }
    }
  }
  return std::nullopt;
}

std::string canonical_fractions(const std::string& s) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s.compare(i, 6, "\\frac{") == 0) {
      std::size_t pos = i + 5;
      const auto a = read_brace_group(s, pos);
      std::optional<std::string> b;
      if (a) b = read_brace_group(s, pos);
      if (a && b && is_integer_literal(*a) && is_integer_literal(*b)) {
        out += *a;
        out += '/';
        out += *b;
        i = pos;
        continue;
      }
    }
    out += s[i++];
  }
  return out;
}

}  // namespace

VerifierProfile VerifierProfile::strict() {
  VerifierProfile p;
  p.name = Name::kStrict;
  p.numeric_tolerance = 0.0;
  p.rules = default_rules();
  return p;
}

VerifierProfile VerifierProfile::lenient() {
  VerifierProfile p;
  p.name = Name::kLenient;
  p.numeric_tolerance = 1e-4;
  p.rules = default_rules();
  return p;
}

VerifierProfile parse_profile(std::string_view name) {
  if (name == "strict") return VerifierProfile::strict();
  if (name == "lenient") return VerifierProfile::lenient();
  throw std::invalid_argument("unknown verifier profile: " +
                              std::string(name));
}

std::string_view profile_name(const VerifierProfile& profile) {
  return profile.name == VerifierProfile::Name::kStrict ? "strict" : "lenient";
}

std::string_view status_name(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kCorrect:
      return "correct";
    case VerdictStatus::kIncorrect:
      return "incorrect";
    case VerdictStatus::kExtractionFailed:
      return "extraction_failed";
  }
  return "incorrect";
}

std::optional<std::string> extract_boxed(std::string_view text) {
  constexpr std::string_view kMarker = "\\boxed{";
  std::optional<std::string> last;
  std::size_t search = 0;
  while (search + kMarker.size() <= text.size()) {
    const std::size_t hit = text.find(kMarker, search);
    if (hit == std::string_view::npos) break;
    int depth = 0;
    bool balanced = false;
    const std::size_t open = hit + kMarker.size() - 1;
    for (std::size_t i = open; i < text.size(); ++i) {
      if (text[i] == '{') ++depth;
      if (text[i] == '}') {
        --depth;
        if (depth == 0) {
          last = std::string(text.substr(open + 1, i - open - 1));
          balanced = true;
          break;
        }
      }
    }
    (void)balanced;
    search = hit + kMarker.size();
  }
  return last;
}

std::string normalize_answer(std::string_view answer,
                             const VerifierProfile& profile) {
  std::string s(answer);
  for (NormalizationRule rule : profile.rules) {
    switch (rule) {
      case NormalizationRule::kStripDelimiters:
        s = strip_delimiters(std::move(s));
        break;
      case NormalizationRule::kRemoveLeftRight:
        s = remove_all(std::move(s), "\\left");
        s = remove_all(std::move(s), "\\right");
        break;
      case NormalizationRule::kUnifyFrac:
        s = replace_all(std::move(s), "\\dfrac", "\\frac");
        s = replace_all(std::move(s), "\\tfrac", "\\frac");
        break;
      case NormalizationRule::kStripThousandsSeps:
        s = strip_thousands_separators(s);
        break;
      case NormalizationRule::kCollapseWhitespace:
        s = collapse_whitespace(s);
        break;
      case NormalizationRule::kLowercaseBareWords:
        s = lowercase_bare_words(s);
        break;
      case NormalizationRule::kCanonicalFraction:
        s = canonical_fractions(s);
        break;
    }
  }
  return s;
}

namespace detail {

namespace {
long long gcd_ll(long long a, long long b) {
  while (b != 0) {
    const long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}
}  // namespace

std::optional<Rational> parse_rational(std::string_view s) {
  if (s.empty()) return std::nullopt;
  bool negative = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    negative = (s[i] == '-');
    ++i;
  }
  constexpr int kMaxDigits = 18;

  auto read_int = [&s, &i](long long& value, int& digits) {
    value = 0;
    digits = 0;
    while (i < s.size() && is_digit(s[i])) {
      if (digits >= kMaxDigits) return false;
      value = value * 10 + (s[i] - '0');
      ++digits;
      ++i;
    }
    return digits > 0;
  };

  long long whole = 0;
  int whole_digits = 0;
  if (!read_int(whole, whole_digits)) return std::nullopt;

  Rational r;
  if (i == s.size()) {
    r.num = whole;
    r.den = 1;
  } else if (s[i] == '/') {
    ++i;
    bool den_negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      den_negative = (s[i] == '-');
      ++i;
    }
    long long den = 0;
    int den_digits = 0;
    if (!read_int(den, den_digits) || i != s.size() || den == 0) {
      return std::nullopt;
    }
    r.num = whole;
    r.den = den;
    if (den_negative) r.num = -r.num;
  } else if (s[i] == '.') {
    ++i;
    long long frac = 0;
    int frac_digits = 0;
    if (!read_int(frac, frac_digits) || i != s.size()) return std::nullopt;
    if (whole_digits + frac_digits > kMaxDigits) return std::nullopt;
    long long den = 1;
    for (int d = 0; d < frac_digits; ++d) den *= 10;
    r.num = whole * den + frac;
    r.den = den;
  } else {
    return std::nullopt;
  }

  if (negative) r.num = -r.num;
  const long long g = gcd_ll(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

std::optional<double> parse_decimal(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  bool any_digit = false;
  while (i < s.size() && is_digit(s[i])) {
    ++i;
    any_digit = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && is_digit(s[i])) {
      ++i;
      any_digit = true;
    }
  } else if (i < s.size() && s[i] == '/') {
    ++i;
    if (i == s.size()) return std::nullopt;
    std::size_t den_digits = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    while (i < s.size() && is_digit(s[i])) {
      ++i;
      ++den_digits;
    }
    if (den_digits == 0) return std::nullopt;
  }
  if (!any_digit || i != s.size()) return std::nullopt;
  const std::string owned(s);
  const std::size_t slash = owned.find('/');
  if (slash != std::string::npos) {
    const double num = std::strtod(owned.c_str(), nullptr);
    const double den = std::strtod(owned.c_str() + slash + 1, nullptr);
    if (den == 0.0) return std::nullopt;
    return num / den;
  }
  return std::strtod(owned.c_str(), nullptr);
}

}  // namespace detail

namespace {

bool rationals_equal(const detail::Rational& a, const detail::Rational& b) {
  return static_cast<__int128>(a.num) * b.den ==
         static_cast<__int128>(b.num) * a.den;
}

bool numeric_match(const std::string& a, const std::string& b,
                   double tolerance) {
  const auto ra = detail::parse_rational(a);
  const auto rb = detail::parse_rational(b);
  if (ra && rb && rationals_equal(*ra, *rb)) return true;
  if (tolerance <= 0.0) return false;
  const auto da = detail::parse_decimal(a);
  const auto db = detail::parse_decimal(b);
  if (!da || !db) return false;
  // Symmetric relative tolerance so swapping gold and answer cannot flip
  // the verdict on numeric comparisons.
  const double scale = std::max({1.0, std::fabs(*da), std::fabs(*db)});
  return std::fabs(*da - *db) <= tolerance * scale;
}

}  // namespace

Verdict verify(std::string_view model_output, std::string_view gold,
               const VerifierProfile& profile) {
  Verdict verdict;
  const auto extracted = extract_boxed(model_output);
  if (!extracted) {
    verdict.status = VerdictStatus::kExtractionFailed;
    verdict.reward = -1.0;
    return verdict;
  }
  verdict.extracted = *extracted;
  const std::string a = normalize_answer(*extracted, profile);
  const std::string b = normalize_answer(gold, profile);
  const bool correct =
      (a == b) || numeric_match(a, b, profile.numeric_tolerance);
  verdict.status = correct ? VerdictStatus::kCorrect : VerdictStatus::kIncorrect;
  verdict.reward = correct ? 1.0 : -1.0;
  return verdict;
}

}  // namespace rlvr
