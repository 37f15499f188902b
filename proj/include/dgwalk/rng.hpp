#pragma once

#include <cstdint>
#include <random>

namespace dgw {

// One mixing round of the splitmix64 sequence; splitmix64(s + k*GOLDEN) is
// the k-th output of the generator started at state s.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Seedable 64-bit generator. The raw stream is std::mt19937_64, which is
// bit-exact across platforms. All range reduction goes through
// uniform_index: one raw draw mapped to [0, bound) by 128-bit fixed-point
// scaling. The mapping is rejection-free; its bias is < bound / 2^64 and
// exactly zero when bound divides 2^64.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  uint64_t uniform_index(uint64_t bound) {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  // Fair coin from the top bit of one draw.
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 eng_;
};

// Independent stream `stream` under a master seed: mt19937_64 seeded with
// output #stream of the splitmix64 sequence started at `seed`. Parallel
// trials use one stream each so results never depend on scheduling.
inline Rng derived_rng(uint64_t seed, uint64_t stream) {
  return Rng(splitmix64(seed + stream * 0x9E3779B97F4A7C15ull));
}

}  // namespace dgw
