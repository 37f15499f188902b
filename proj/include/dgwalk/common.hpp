#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dgw {

// Execution policy for the data-parallel kernels. Serial is the reference
// path kept for testing and benchmarking; Parallel uses OpenMP when the
// build enables it. Both must produce identical results.
enum class Exec { Serial, Parallel };

// An exact computation would need more states than the configured cap allows.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, uint64_t required)
      : std::runtime_error(what), required_cap(required) {}

  uint64_t required_cap;
};

// base^exp if it stays <= limit, nullopt otherwise.
std::optional<uint64_t> checked_pow(uint64_t base, uint32_t exp, uint64_t limit);

// |G| = q^((n-1)^2). Throws CapExceeded naming the required cap when |G| > cap.
uint64_t group_size_checked(int n, int q, uint64_t cap);

// Row-major matrix of residues. Storage is 0-based; the 1-based indexing in
// the interface documentation refers to mathematical positions only.
struct Grid {
  int rows = 0;
  int cols = 0;
  std::vector<int32_t> v;

  Grid() = default;
  Grid(int r, int c) : rows(r), cols(c), v(static_cast<size_t>(r) * c, 0) {}

  int32_t& at(int r, int c) { return v[static_cast<size_t>(r) * cols + c]; }
  int32_t at(int r, int c) const { return v[static_cast<size_t>(r) * cols + c]; }

  bool operator==(const Grid&) const = default;
};

// Canonical residue in [0, q).
inline int32_t mod_norm(int64_t x, int32_t q) {
  int64_t r = x % q;
  return static_cast<int32_t>(r < 0 ? r + q : r);
}

int64_t binom2(int64_t n);

}  // namespace dgw
