#include "dgwalk/common.hpp"

namespace dgw {

std::optional<uint64_t> checked_pow(uint64_t base, uint32_t exp, uint64_t limit) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < exp; ++i) {
    if (r > limit / base) return std::nullopt;
    r *= base;
    if (r > limit) return std::nullopt;
  }
  return r;
}

uint64_t group_size_checked(int n, int q, uint64_t cap) {
  const uint32_t dim = static_cast<uint32_t>(n - 1) * static_cast<uint32_t>(n - 1);
  auto size = checked_pow(static_cast<uint64_t>(q), dim, cap);
  if (!size) {
    // Report the size itself when it fits in 64 bits, so the message can
    // name the cap that would be required.
    auto exact = checked_pow(static_cast<uint64_t>(q), dim, UINT64_MAX / 2);
    uint64_t required = exact ? *exact : UINT64_MAX;
    throw CapExceeded("instance too large for exact enumeration: q^((n-1)^2) = " +
                          (exact ? std::to_string(required) : std::string("> 2^63")) +
                          " exceeds cap " + std::to_string(cap) +
                          "; raise max_group_size to at least " +
                          (exact ? std::to_string(required) : std::string("2^63")),
                      required);
  }
  return *size;
}

int64_t binom2(int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace dgw
