#include "dgwalk/combinatorics.hpp"

#include <algorithm>

namespace dgw {

Skeleton skeleton(std::span<const int32_t> u) {
  Skeleton s;
  const int m = static_cast<int>(u.size());
  int pos = 1;
  while (pos <= m) {
    if (u[pos - 1] != 0) {
      s.indices.push_back(pos);
      pos += 2;
    } else {
      ++pos;
    }
  }
  return s;
}

std::vector<char> skeleton_neighborhood(const Skeleton& s, int m) {
  std::vector<char> mask(m + 1, 0);
  for (int i : s.indices) {
    for (int d = -1; d <= 1; ++d) {
      int p = i + d;
      if (p >= 1 && p <= m) mask[p] = 1;
    }
  }
  return mask;
}

namespace {

// prefix[j] = u_1 + ... + u_j mod q (prefix[0] = 0).
void prefix_sums(std::span<const int32_t> u, int q, std::vector<int32_t>& prefix) {
  const int m = static_cast<int>(u.size());
  prefix.resize(m + 1);
  prefix[0] = 0;
  for (int j = 1; j <= m; ++j) prefix[j] = mod_norm(prefix[j - 1] + u[j - 1], q);
}

}  // namespace

int64_t count_nonzero_intervals(std::span<const int32_t> u, int q) {
  const int m = static_cast<int>(u.size());
  std::vector<int32_t> prefix;
  prefix_sums(u, q, prefix);
  int64_t count = 0;
  for (int i = 1; i <= m; ++i) {
    for (int j = i; j <= m; ++j) {
      if (prefix[j] != prefix[i - 1]) ++count;
    }
  }
  return count;
}

int64_t count_nonzero_intervals_touching(std::span<const int32_t> u, int q,
                                         const std::vector<char>& allowed) {
  const int m = static_cast<int>(u.size());
  std::vector<int32_t> prefix;
  prefix_sums(u, q, prefix);
  int64_t count = 0;
  for (int i = 1; i <= m; ++i) {
    for (int j = i; j <= m; ++j) {
      if ((allowed[i] || allowed[j]) && prefix[j] != prefix[i - 1]) ++count;
    }
  }
  return count;
}

int64_t count_nonzero_boxes(const GroupElement& y) {
  const int m = y.n - 1;
  const int q = y.q;
  const int w = m + 1;
  std::vector<int32_t> prefix(static_cast<size_t>(w) * w, 0);
  for (int a = 1; a <= m; ++a) {
    int64_t row_acc = 0;
    for (int b = 1; b <= m; ++b) {
      row_acc += y.coords.at(a - 1, b - 1);
      prefix[static_cast<size_t>(a) * w + b] =
          mod_norm(prefix[static_cast<size_t>(a - 1) * w + b] + row_acc, q);
    }
  }
  int64_t count = 0;
  for (int i = 1; i <= m; ++i) {
    for (int j = i; j <= m; ++j) {
      const int32_t* top = prefix.data() + static_cast<size_t>(i - 1) * w;
      const int32_t* bot = prefix.data() + static_cast<size_t>(j) * w;
      for (int k = 1; k <= m; ++k) {
        for (int l = k; l <= m; ++l) {
          if (mod_norm(static_cast<int64_t>(bot[l]) - top[l] - bot[k - 1] + top[k - 1],
                       q) != 0) {
            ++count;
          }
        }
      }
    }
  }
  return count;
}

int64_t PsiFamily::total_size() const {
  int64_t s = 0;
  for (const auto& r : rows) s += static_cast<int64_t>(r.size());
  return s;
}

PsiFamily build_psi(const GroupElement& y, std::optional<int64_t> big_row_threshold) {
  const int m = y.n - 1;
  const int q = y.q;

  std::vector<std::span<const int32_t>> row(m);
  for (int i = 0; i < m; ++i) {
    row[i] = std::span<const int32_t>(y.coords.v).subspan(
        static_cast<size_t>(i) * m, static_cast<size_t>(m));
  }

  // Rows excluded when a big-row threshold is in play: a row is out when it
  // or a vertical neighbor has at least `threshold` nonzero intervals.
  std::vector<char> excluded(m + 2, 0);
  if (big_row_threshold) {
    std::vector<char> big(m + 2, 0);
    for (int i = 1; i <= m; ++i) {
      big[i] = count_nonzero_intervals(row[i - 1], q) >= *big_row_threshold;
    }
    for (int i = 1; i <= m; ++i) {
      excluded[i] = big[i] || (i > 1 && big[i - 1]) || (i < m && big[i + 1]);
    }
  }

  // Skeleton neighborhoods of the odd rows, consulted by their even neighbors.
  std::vector<std::vector<char>> hood(m + 2);
  for (int i = 1; i <= m; i += 2) {
    hood[i] = (excluded[i]) ? std::vector<char>(m + 1, 0)
                            : skeleton_neighborhood(skeleton(row[i - 1]), m);
  }

  PsiFamily psi;
  psi.rows.resize(m);
  std::vector<int32_t> prefix;
  for (int i = 1; i <= m; ++i) {
    if (excluded[i]) continue;
    prefix_sums(row[i - 1], q, prefix);
    auto nonzero = [&](int k, int l) { return prefix[l] != prefix[k - 1]; };
    if (i % 2 == 1) {
      const auto& mask = hood[i];
      for (int k = 1; k <= m; ++k) {
        for (int l = k; l <= m; ++l) {
          if ((mask[k] || mask[l]) && nonzero(k, l)) psi.rows[i - 1].emplace_back(k, l);
        }
      }
    } else {
      // Both endpoints must avoid the neighborhoods of rows i-1 and i+1.
      auto in_neighbor = [&](int p) {
        bool below = i > 1 && !hood[i - 1].empty() && hood[i - 1][p];
        bool above = i < m && !hood[i + 1].empty() && hood[i + 1][p];
        return below || above;
      };
      for (int k = 1; k <= m; ++k) {
        if (in_neighbor(k)) continue;
        for (int l = k; l <= m; ++l) {
          if (!in_neighbor(l) && nonzero(k, l)) psi.rows[i - 1].emplace_back(k, l);
        }
      }
    }
  }
  return psi;
}

std::vector<int> maximal_spaced_nonzero_rows(const GroupElement& y) {
  const int m = y.n - 1;
  std::vector<int> rows;
  int i = 1;
  while (i <= m) {
    bool nonzero = false;
    for (int b = 0; b < m; ++b) {
      if (y.coords.at(i - 1, b) != 0) {
        nonzero = true;
        break;
      }
    }
    if (nonzero) {
      rows.push_back(i);
      i += 2;
    } else {
      ++i;
    }
  }
  return rows;
}

bool verify_lemma_3_3(const GroupElement& y, const std::vector<int>& rows) {
  const int m = y.n - 1;
  const int n = y.n;
  for (size_t idx = 0; idx < rows.size(); ++idx) {
    const int r = rows[idx];
    if (r < 1 || r > m) throw std::invalid_argument("row index out of range");
    if (idx > 0 && rows[idx] - rows[idx - 1] < 2) {
      throw std::invalid_argument("rows must be ascending and pairwise >= 2 apart");
    }
    bool nonzero = false;
    for (int b = 0; b < m; ++b) {
      if (y.coords.at(r - 1, b) != 0) {
        nonzero = true;
        break;
      }
    }
    if (!nonzero) throw std::invalid_argument("row " + std::to_string(r) + " is zero");
  }

  int64_t bound = 0;
  for (size_t idx = 0; idx < rows.size(); ++idx) {
    auto u = std::span<const int32_t>(y.coords.v)
                 .subspan(static_cast<size_t>(rows[idx] - 1) * m, static_cast<size_t>(m));
    bound += count_nonzero_intervals(u, y.q) *
             (n - 2 * static_cast<int64_t>(idx + 1) + 1);
  }
  return count_nonzero_boxes(y) >= bound;
}

}  // namespace dgw
