#pragma once

#include <functional>

#include "dgwalk/move.hpp"

namespace dgw {

struct WalkConfig {
  int n = 3;
  int q = 2;
  std::vector<int32_t> row_sums;  // empty means all-zero targets
  std::vector<int32_t> col_sums;
  uint64_t seed = 1;
  uint64_t steps = 0;
  bool lazy = false;  // hold with probability 1/2 before each move
};

// Throws std::invalid_argument on out-of-range parameters or inconsistent sums.
void validate_config(const WalkConfig& cfg);

using TrajectorySink = std::function<void(uint64_t t, const TableState&)>;

// Applies cfg.steps independent uniform moves to `start`. The RNG stream per
// step is: hold coin first when lazy, then one draw for the move. The sink,
// when set, observes the state at every t in [0, steps].
TableState run_walk(const WalkConfig& cfg, TableState start,
                    const TrajectorySink& sink = {});

// Walk on G from a given element, no sum bookkeeping. Consumes the same RNG
// stream as run_walk. For q = 2 and n <= 65 the state is kept as packed bit
// rows; the result is identical to the generic path.
GroupElement run_group_walk(int n, int q, Rng& rng, uint64_t steps, bool lazy,
                            const GroupElement* start = nullptr);

}  // namespace dgw
