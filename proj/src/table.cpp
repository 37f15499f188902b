#include "dgwalk/table.hpp"

#include <numeric>

namespace dgw {

bool TableState::valid() const {
  return validate_table(entries, row_sums, col_sums, q);
}

bool validate_table(const Grid& entries, const std::vector<int32_t>& row_sums,
                    const std::vector<int32_t>& col_sums, int q) {
  if (q < 2) throw std::invalid_argument("modulus must be >= 2");
  if (entries.rows != entries.cols) {
    throw std::invalid_argument("table must be square");
  }
  const int n = entries.rows;
  if (static_cast<int>(row_sums.size()) != n ||
      static_cast<int>(col_sums.size()) != n) {
    throw std::invalid_argument("sum vector length does not match table dimension");
  }

  for (int32_t e : entries.v) {
    if (e < 0 || e >= q) return false;
  }

  int64_t rs_total = 0, cs_total = 0;
  for (int i = 0; i < n; ++i) {
    rs_total += row_sums[i];
    cs_total += col_sums[i];
  }
  if (mod_norm(rs_total, q) != mod_norm(cs_total, q)) return false;

  for (int i = 0; i < n; ++i) {
    int64_t s = 0;
    for (int j = 0; j < n; ++j) s += entries.at(i, j);
    if (mod_norm(s, q) != mod_norm(row_sums[i], q)) return false;
  }
  for (int j = 0; j < n; ++j) {
    int64_t s = 0;
    for (int i = 0; i < n; ++i) s += entries.at(i, j);
    if (mod_norm(s, q) != mod_norm(col_sums[j], q)) return false;
  }
  return true;
}

TableState zero_table(int n, int q) {
  TableState t;
  t.n = n;
  t.q = q;
  t.entries = Grid(n, n);
  t.row_sums.assign(n, 0);
  t.col_sums.assign(n, 0);
  return t;
}

TableState canonical_table(int n, int q, std::vector<int32_t> row_sums,
                           std::vector<int32_t> col_sums) {
  if (n < 2) throw std::invalid_argument("table dimension must be >= 2");
  if (static_cast<int>(row_sums.size()) != n ||
      static_cast<int>(col_sums.size()) != n) {
    throw std::invalid_argument("sum vector length does not match table dimension");
  }
  for (auto& r : row_sums) r = mod_norm(r, q);
  for (auto& c : col_sums) c = mod_norm(c, q);

  int64_t rs_total = std::accumulate(row_sums.begin(), row_sums.end(), int64_t{0});
  int64_t cs_total = std::accumulate(col_sums.begin(), col_sums.end(), int64_t{0});
  if (mod_norm(rs_total, q) != mod_norm(cs_total, q)) {
    throw std::invalid_argument("row sums and column sums disagree mod q");
  }

  TableState t = zero_table(n, q);
  t.row_sums = row_sums;
  t.col_sums = col_sums;
  for (int i = 0; i + 1 < n; ++i) t.entries.at(i, n - 1) = row_sums[i];
  int64_t partial = 0;
  for (int j = 0; j + 1 < n; ++j) {
    t.entries.at(n - 1, j) = col_sums[j];
    partial += col_sums[j];
  }
  t.entries.at(n - 1, n - 1) = mod_norm(row_sums[n - 1] - partial, q);
  return t;
}

}  // namespace dgw
