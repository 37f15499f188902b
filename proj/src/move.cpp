#include "dgwalk/move.hpp"

namespace dgw {

namespace {

// p-th pair (i, j) with 1 <= i < j <= n in lexicographic order.
std::pair<int, int> pair_from_index(uint64_t p, int n) {
  int i = 1;
  uint64_t block = static_cast<uint64_t>(n - 1);
  while (p >= block) {
    p -= block;
    ++i;
    --block;
  }
  return {i, i + 1 + static_cast<int>(p)};
}

}  // namespace

uint64_t quadruple_count(int n) {
  uint64_t c = static_cast<uint64_t>(binom2(n));
  return c * c;
}

uint64_t move_count(int n, int q) {
  return quadruple_count(n) * (q >= 3 ? 2 : 1);
}

Move move_from_index(uint64_t idx, int n, int q) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  const uint64_t quads = quadruple_count(n);
  if (idx >= move_count(n, q)) throw std::invalid_argument("move index out of range");

  Move m;
  m.sign = (q >= 3 && idx >= quads) ? -1 : 1;
  const uint64_t quad = idx % quads;
  const uint64_t pairs = static_cast<uint64_t>(binom2(n));
  auto [i, j] = pair_from_index(quad / pairs, n);
  auto [k, l] = pair_from_index(quad % pairs, n);
  m.i = i;
  m.j = j;
  m.k = k;
  m.l = l;
  return m;
}

Move sample_move(Rng& rng, int n, int q) {
  return move_from_index(rng.uniform_index(move_count(n, q)), n, q);
}

Grid move_delta(const Move& m, int n) {
  if (!(1 <= m.i && m.i < m.j && m.j <= n && 1 <= m.k && m.k < m.l && m.l <= n)) {
    throw std::invalid_argument("move indices out of range");
  }
  Grid d(n, n);
  d.at(m.i - 1, m.k - 1) = m.sign;
  d.at(m.j - 1, m.l - 1) = m.sign;
  d.at(m.i - 1, m.l - 1) = -m.sign;
  d.at(m.j - 1, m.k - 1) = -m.sign;
  return d;
}

void apply_move(TableState& state, const Move& m) {
  if (m.j > state.n || m.l > state.n) {
    throw std::invalid_argument("move does not fit the table");
  }
  const int q = state.q;
  auto bump = [&](int r, int c, int delta) {
    auto& e = state.entries.at(r, c);
    e = mod_norm(static_cast<int64_t>(e) + delta, q);
  };
  bump(m.i - 1, m.k - 1, m.sign);
  bump(m.j - 1, m.l - 1, m.sign);
  bump(m.i - 1, m.l - 1, -m.sign);
  bump(m.j - 1, m.k - 1, -m.sign);
}

void apply_move(GroupElement& state, const Move& m) {
  if (m.j > state.n || m.l > state.n) {
    throw std::invalid_argument("move does not fit the coordinate matrix");
  }
  const int q = state.q;
  for (int r = m.i - 1; r <= m.j - 2; ++r) {
    for (int c = m.k - 1; c <= m.l - 2; ++c) {
      auto& e = state.coords.at(r, c);
      e = mod_norm(static_cast<int64_t>(e) + m.sign, q);
    }
  }
}

}  // namespace dgw
