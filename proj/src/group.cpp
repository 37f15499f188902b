#include "dgwalk/group.hpp"

namespace dgw {

GroupElement zero_group_element(int n, int q) {
  if (n < 2 || q < 2) throw std::invalid_argument("need n >= 2 and q >= 2");
  GroupElement g;
  g.n = n;
  g.q = q;
  g.coords = Grid(n - 1, n - 1);
  return g;
}

GroupElement to_coordinates(const Grid& g, int q) {
  if (g.rows != g.cols) throw std::invalid_argument("matrix must be square");
  const int n = g.rows;
  if (n < 2) throw std::invalid_argument("matrix dimension must be >= 2");

  for (int i = 0; i < n; ++i) {
    int64_t rs = 0, cs = 0;
    for (int j = 0; j < n; ++j) {
      rs += g.at(i, j);
      cs += g.at(j, i);
    }
    if (mod_norm(rs, q) != 0 || mod_norm(cs, q) != 0) {
      throw std::invalid_argument("matrix has a nonzero row or column sum mod q");
    }
  }

  GroupElement c = zero_group_element(n, q);
  // coords[a][b] = prefix sum of g over rows 0..a, cols 0..b, all mod q.
  std::vector<int32_t> prev(n - 1, 0);
  for (int a = 0; a < n - 1; ++a) {
    int64_t row_acc = 0;
    for (int b = 0; b < n - 1; ++b) {
      row_acc += g.at(a, b);
      c.coords.at(a, b) = mod_norm(prev[b] + row_acc, q);
      prev[b] = c.coords.at(a, b);
    }
  }
  return c;
}

Grid from_coordinates(const GroupElement& c) {
  const int n = c.n;
  const int q = c.q;
  Grid g(n, n);
  auto at = [&](int a, int b) -> int64_t {
    if (a < 0 || b < 0 || a >= n - 1 || b >= n - 1) return 0;
    return c.coords.at(a, b);
  };
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      g.at(r, s) = mod_norm(at(r, s) - at(r - 1, s) - at(r, s - 1) + at(r - 1, s - 1), q);
    }
  }
  return g;
}

void add_into(GroupElement& dst, const GroupElement& src) {
  if (dst.n != src.n || dst.q != src.q) {
    throw std::invalid_argument("group element dimension mismatch");
  }
  for (size_t i = 0; i < dst.coords.v.size(); ++i) {
    dst.coords.v[i] = mod_norm(static_cast<int64_t>(dst.coords.v[i]) + src.coords.v[i],
                               dst.q);
  }
}

uint64_t group_index(const GroupElement& y) {
  uint64_t idx = 0;
  for (size_t d = y.coords.v.size(); d-- > 0;) {
    idx = idx * y.q + static_cast<uint64_t>(y.coords.v[d]);
  }
  return idx;
}

GroupElement group_element_from_index(uint64_t idx, int n, int q) {
  GroupElement y = zero_group_element(n, q);
  for (auto& digit : y.coords.v) {
    digit = static_cast<int32_t>(idx % q);
    idx /= q;
  }
  return y;
}

}  // namespace dgw
