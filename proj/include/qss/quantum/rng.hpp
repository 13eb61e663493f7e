#pragma once

#include <cstdint>
#include <string_view>

namespace qss::quantum {

// Deterministic counter-based generator (splitmix64).  The same seed yields
// the same sequence on every platform, which keeps simulator output
// byte-reproducible.  Distinct protocol roles draw from distinct substreams
// derived by hashing a role tag into the master seed, so enabling an
// adversary never perturbs the honest parties' random choices.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  // Substream seed = mix(master_seed XOR fnv1a64(role)).
  static RngStream substream(std::uint64_t master_seed, std::string_view role) {
    return RngStream(mix(master_seed ^ fnv1a(role)));
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n).  Modulo bias is ~n/2^64, negligible for the
  // tiny alphabets used here (n <= 24).
  int uniform_int(int n) { return int(next_u64() % std::uint64_t(n)); }

  int bit() { return int(next_u64() >> 63); }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  static std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  std::uint64_t state_;
};

}  // namespace qss::quantum
