#ifndef RLVR_VERIFIER_HPP_
#define RLVR_VERIFIER_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rlvr {

enum class VerdictStatus { kCorrect, kIncorrect, kExtractionFailed };

struct Verdict {
  VerdictStatus status = VerdictStatus::kIncorrect;
  std::optional<std::string> extracted;
  double reward = -1.0;  // +1 iff correct, -1 otherwise
};

enum class NormalizationRule {
  kStripDelimiters,      // outer whitespace and $
  kRemoveLeftRight,      // \left and \right
  kUnifyFrac,            // \dfrac, \tfrac -> \frac
  kStripThousandsSeps,   // 1,000 and 1{,}000 -> 1000 in pure numbers
  kCollapseWhitespace,   // internal runs -> single space
  kLowercaseBareWords,   // multi-letter words outside math commands
  kCanonicalFraction,    // \frac{a}{b} with integer a, b -> a/b
};

struct VerifierProfile {
  enum class Name { kStrict, kLenient };

  Name name = Name::kStrict;
  // 0 means exact-rational comparison only; lenient uses a relative 1e-4.
  double numeric_tolerance = 0.0;
  std::vector<NormalizationRule> rules;

  static VerifierProfile strict();
  static VerifierProfile lenient();
};

VerifierProfile parse_profile(std::string_view name);
std::string_view profile_name(const VerifierProfile& profile);
std::string_view status_name(VerdictStatus status);

// Contents of the last balanced \boxed{...} group, nested braces included;
// nullopt when no balanced group exists. Absence is a value, not an error.
std::optional<std::string> extract_boxed(std::string_view text);

// Applies the profile's normalization rules in order. Total: any input maps
// to some string.
std::string normalize_answer(std::string_view answer,
                             const VerifierProfile& profile);

// Extract, normalize both sides, compare as strings, then as exact rationals
// (decimals parsed as exact ratios); the lenient profile additionally accepts
// numeric values within relative tolerance. No symbolic algebra anywhere:
// equivalent-but-differently-written expressions stay incorrect.
Verdict verify(std::string_view model_output, std::string_view gold,
               const VerifierProfile& profile);

namespace detail {
// Exact rational on 64-bit numerator/denominator, parsed from a normalized
// answer ("7", "-3/4", "2.50"). nullopt when the string is not a plain
// number or would overflow.
struct Rational {
  long long num = 0;
  long long den = 1;
  bool operator==(const Rational&) const = default;
};
std::optional<Rational> parse_rational(std::string_view s);
std::optional<double> parse_decimal(std::string_view s);
}  // namespace detail

}  // namespace rlvr

#endif  // RLVR_VERIFIER_HPP_
