#pragma once

#include "dgwalk/common.hpp"

namespace dgw {

// n x n contingency table over Z/qZ with prescribed row and column sums.
struct TableState {
  int n = 0;
  int q = 2;
  Grid entries;                   // n x n, residues in [0, q)
  std::vector<int32_t> row_sums;  // length n, targets mod q
  std::vector<int32_t> col_sums;  // length n

  bool valid() const;
};

// True iff every entry is a canonical residue and all row/column sums hit
// their targets mod q (including sum(row_sums) == sum(col_sums) mod q).
// Dimension mismatches are structural and throw std::invalid_argument; a
// mere sum mismatch returns false.
bool validate_table(const Grid& entries, const std::vector<int32_t>& row_sums,
                    const std::vector<int32_t>& col_sums, int q);

TableState zero_table(int n, int q);

// Table meeting the given sums: zero everywhere except the last row and
// column. Throws std::invalid_argument when the sums are inconsistent.
TableState canonical_table(int n, int q, std::vector<int32_t> row_sums,
                           std::vector<int32_t> col_sums);

}  // namespace dgw
