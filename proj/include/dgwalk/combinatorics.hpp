#pragma once

#include <span>
#include <utility>

#include "dgwalk/common.hpp"
#include "dgwalk/group.hpp"

namespace dgw {

// Greedy set of nonzero positions of u spaced >= 2 apart (1-based): the
// first nonzero, then repeatedly the first nonzero at distance >= 2 from
// the previous pick.
struct Skeleton {
  std::vector<int> indices;

  int size() const { return static_cast<int>(indices.size()); }
};

Skeleton skeleton(std::span<const int32_t> u);

// Membership mask over [1, m] of I union (I +- 1), sized m+1 (index 0 unused).
std::vector<char> skeleton_neighborhood(const Skeleton& s, int m);

// S(u): closed intervals [i,j] of [1, m] whose entry sum is nonzero mod q.
// O(m^2) via prefix sums.
int64_t count_nonzero_intervals(std::span<const int32_t> u, int q);

// Same count restricted to intervals with at least one endpoint flagged in
// `allowed` (sized m+1, 1-based).
int64_t count_nonzero_intervals_touching(std::span<const int32_t> u, int q,
                                         const std::vector<char>& allowed);

// N(y): boxes of [1, n-1]^2 with nonzero sum. O(n^4) via 2D prefix sums.
int64_t count_nonzero_boxes(const GroupElement& y);

using Interval = std::pair<int, int>;  // closed, 1-based, lo <= hi

// One collection of nonzero intervals per row; consecutive rows are
// disjoint as interval sets by construction.
struct PsiFamily {
  std::vector<std::vector<Interval>> rows;  // rows[i] is row i+1

  int64_t total_size() const;
};

// Alternating construction: an odd row takes its nonzero intervals with an
// endpoint in the row's skeleton neighborhood; an even row takes its nonzero
// intervals with both endpoints outside both neighbors' neighborhoods.
// big_row_threshold, when set, empties every row whose own or adjacent
// interval count reaches the threshold (exploratory knob; the default keeps
// all rows).
PsiFamily build_psi(const GroupElement& y,
                    std::optional<int64_t> big_row_threshold = std::nullopt);

// Checks N(y) >= S_1(n-1) + S_2(n-3) + ... + S_k(n-2k+1) for the given
// nonzero rows (ascending, pairwise >= 2 apart). Throws
// std::invalid_argument when `rows` violates that precondition.
bool verify_lemma_3_3(const GroupElement& y, const std::vector<int>& rows);

// Greedy ascending choice of nonzero rows spaced >= 2 apart.
std::vector<int> maximal_spaced_nonzero_rows(const GroupElement& y);

}  // namespace dgw
