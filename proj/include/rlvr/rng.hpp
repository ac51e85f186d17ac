#ifndef RLVR_RNG_HPP_
#define RLVR_RNG_HPP_

#include <array>
#include <cstdint>
#include <numeric>
#include <string_view>
#include <vector>

namespace rlvr {

// Philox4x64-10 counter-based generator. Matches numpy.random.Philox output
// word for word, which the tests pin with known-answer vectors. Streams are
// cheap value types: any (key, counter) pair names an independent stream, so
// parallel and sequential rollout generation draw identical numbers.
class Philox {
 public:
  using Block = std::array<std::uint64_t, 4>;

  Philox(std::uint64_t key0, std::uint64_t key1, const Block& counter)
      : key_{key0, key1}, counter_{counter} {}

  std::uint64_t next_u64() {
    if (pos_ == 4) {
      buffer_ = block(key_, counter_);
      // 256-bit little-endian counter increment, word 0 first.
      for (auto& w : counter_) {
        if (++w != 0) break;
      }
      pos_ = 0;
    }
    return buffer_[pos_++];
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Unbiased integer in [0, n) via rejection sampling.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  static Block block(std::array<std::uint64_t, 2> key, Block ctr) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += 0x9E3779B97F4A7C15ULL;
        key[1] += 0xBB67AE8584CAA73BULL;
      }
      std::uint64_t hi0, lo0, hi1, lo1;
      mul_hi_lo(0xD2E7470EE14C6C93ULL, ctr[0], hi0, lo0);
      mul_hi_lo(0xCA5A826395121157ULL, ctr[2], hi1, lo1);
      ctr = Block{hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
  }

 private:
  static void mul_hi_lo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                        std::uint64_t& lo) {
    const unsigned __int128 p =
        static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
    hi = static_cast<std::uint64_t>(p >> 64);
    lo = static_cast<std::uint64_t>(p);
  }

  std::array<std::uint64_t, 2> key_;
  Block counter_;
  Block buffer_{};
  int pos_ = 4;
};

// Domain tags keep substreams for unrelated purposes disjoint under one seed.
enum class RngDomain : std::uint64_t {
  kParamInit = 1,
  kTrainRollout = 2,
  kShuffle = 3,
  kEval = 4,
  kTest = 5,
};

// Substream named by (seed, domain, a, b, c). Successive draws advance the
// low counter word; the naming words are untouched, so 2^64 draws never
// collide with a sibling stream.
inline Philox make_stream(std::uint64_t seed, RngDomain domain,
                          std::uint64_t a = 0, std::uint64_t b = 0,
                          std::uint64_t c = 0) {
  return Philox(seed, static_cast<std::uint64_t>(domain), {0, a, b, c});
}

// FNV-1a, used to fold string ids (benchmark names, problem ids) into
// substream coordinates.
inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Seeded Fisher-Yates permutation of 0..n-1.
inline std::vector<std::size_t> seeded_permutation(std::size_t n,
                                                   Philox rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

}  // namespace rlvr

#endif  // RLVR_RNG_HPP_
