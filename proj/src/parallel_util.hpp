#pragma once

#include <cstdint>
#include <vector>

#include "dgwalk/common.hpp"

namespace dgw {

// Deterministic sum of term(i) for i in [0, count): fixed-size chunks are
// summed independently (in parallel when asked) and the per-chunk partials
// are folded in chunk order, so the result does not depend on thread count
// or scheduling.
template <class F>
double chunked_sum(uint64_t count, Exec exec, F&& term) {
  constexpr uint64_t kChunk = uint64_t{1} << 14;
  const uint64_t nchunks = (count + kChunk - 1) / kChunk;
  std::vector<double> partial(nchunks, 0.0);
  const bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(static) if (par)
  for (int64_t ci = 0; ci < static_cast<int64_t>(nchunks); ++ci) {
    const uint64_t lo = static_cast<uint64_t>(ci) * kChunk;
    const uint64_t hi = lo + kChunk < count ? lo + kChunk : count;
    double s = 0;
    for (uint64_t i = lo; i < hi; ++i) s += term(i);
    partial[ci] = s;
  }
  double total = 0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace dgw
