#include "dgwalk/walk.hpp"

namespace dgw {

void validate_config(const WalkConfig& cfg) {
  if (cfg.n < 2) throw std::invalid_argument("need n >= 2");
  if (cfg.q < 2) throw std::invalid_argument("need q >= 2");
  if (!cfg.row_sums.empty() || !cfg.col_sums.empty()) {
    if (static_cast<int>(cfg.row_sums.size()) != cfg.n ||
        static_cast<int>(cfg.col_sums.size()) != cfg.n) {
      throw std::invalid_argument("sum vector length does not match n");
    }
    int64_t rs = 0, cs = 0;
    for (int i = 0; i < cfg.n; ++i) {
      rs += cfg.row_sums[i];
      cs += cfg.col_sums[i];
    }
    if (mod_norm(rs, cfg.q) != mod_norm(cs, cfg.q)) {
      throw std::invalid_argument("row sums and column sums disagree mod q");
    }
  }
}

TableState run_walk(const WalkConfig& cfg, TableState start,
                    const TrajectorySink& sink) {
  validate_config(cfg);
  const std::vector<int32_t> zeros(cfg.n, 0);
  const auto& row_sums = cfg.row_sums.empty() ? zeros : cfg.row_sums;
  const auto& col_sums = cfg.col_sums.empty() ? zeros : cfg.col_sums;
  if (start.n != cfg.n || start.q != cfg.q ||
      !validate_table(start.entries, row_sums, col_sums, cfg.q)) {
    throw std::invalid_argument("start state does not satisfy the configured sums");
  }

  Rng rng(cfg.seed);
  if (sink) sink(0, start);
  for (uint64_t t = 1; t <= cfg.steps; ++t) {
    if (!cfg.lazy || !rng.coin()) {
      apply_move(start, sample_move(rng, cfg.n, cfg.q));
    }
    if (sink) sink(t, start);
  }
  return start;
}

namespace {

// q = 2 state as one bit row per coordinate row; a move XORs a column mask
// into a contiguous row range. Consumes the identical RNG stream as the
// generic path.
GroupElement run_group_walk_bits(int n, int q, Rng& rng, uint64_t steps,
                                 bool lazy, const GroupElement* start) {
  const int m = n - 1;
  std::vector<uint64_t> rows(m, 0);
  if (start) {
    for (int r = 0; r < m; ++r) {
      uint64_t bits = 0;
      for (int c = 0; c < m; ++c) {
        bits |= static_cast<uint64_t>(start->coords.at(r, c) & 1) << c;
      }
      rows[r] = bits;
    }
  }

  const uint64_t nmoves = move_count(n, q);
  for (uint64_t t = 0; t < steps; ++t) {
    if (lazy && rng.coin()) continue;
    Move mv = move_from_index(rng.uniform_index(nmoves), n, q);
    const int width = mv.l - mv.k;
    const uint64_t mask =
        (width >= 64 ? ~uint64_t{0} : ((uint64_t{1} << width) - 1)) << (mv.k - 1);
    for (int r = mv.i - 1; r <= mv.j - 2; ++r) rows[r] ^= mask;
  }

  GroupElement out = zero_group_element(n, q);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      out.coords.at(r, c) = static_cast<int32_t>((rows[r] >> c) & 1);
    }
  }
  return out;
}

}  // namespace

GroupElement run_group_walk(int n, int q, Rng& rng, uint64_t steps, bool lazy,
                            const GroupElement* start) {
  if (n < 2 || q < 2) throw std::invalid_argument("need n >= 2 and q >= 2");
  if (q == 2 && n <= 65) {
    return run_group_walk_bits(n, q, rng, steps, lazy, start);
  }

  GroupElement state = start ? *start : zero_group_element(n, q);
  for (uint64_t t = 0; t < steps; ++t) {
    if (lazy && rng.coin()) continue;
    apply_move(state, sample_move(rng, n, q));
  }
  return state;
}

}  // namespace dgw
