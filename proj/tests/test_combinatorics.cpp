#include <doctest.h>

#include <set>

#include "dgwalk/combinatorics.hpp"
#include "dgwalk/rng.hpp"
#include "oracles.hpp"

using namespace dgw;

namespace {

GroupElement element(int n, int q, std::initializer_list<int32_t> coords) {
  GroupElement y = zero_group_element(n, q);
  int i = 0;
  for (int32_t v : coords) y.coords.v[i++] = v;
  return y;
}

GroupElement random_element(Rng& rng, int n, int q) {
  GroupElement y = zero_group_element(n, q);
  for (auto& c : y.coords.v) c = static_cast<int32_t>(rng.uniform_index(q));
  return y;
}

}  // namespace

TEST_SUITE("combinatorics") {

TEST_CASE("skeleton of the worked example") {
  // Nonzero at positions 3,4,5,8,9.
  std::vector<int32_t> u{0, 0, 1, 1, 1, 0, 0, 1, 1, 0, 0};
  Skeleton s = skeleton(u);
  CHECK(s.indices == std::vector<int>{3, 5, 8});
  CHECK(s.size() == 3);
}

TEST_CASE("skeleton edge cases") {
  std::vector<int32_t> zero(6, 0);
  CHECK(skeleton(zero).indices.empty());
  std::vector<int32_t> ones(5, 1);
  CHECK(skeleton(ones).indices == std::vector<int>{1, 3, 5});
}

TEST_CASE("skeleton invariants on random vectors") {
  Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + static_cast<int>(rng.uniform_index(40));
    const int q = 2 + static_cast<int>(rng.uniform_index(9));
    std::vector<int32_t> u(m);
    for (auto& d : u) d = static_cast<int32_t>(rng.uniform_index(q));
    Skeleton s = skeleton(u);
    for (size_t i = 1; i < s.indices.size(); ++i) {
      REQUIRE(s.indices[i] - s.indices[i - 1] >= 2);
    }
    // Every nonzero position sits in I or I+1.
    std::set<int> covered;
    for (int i : s.indices) {
      covered.insert(i);
      covered.insert(i + 1);
    }
    for (int p = 1; p <= m; ++p) {
      if (u[p - 1] != 0) REQUIRE(covered.count(p) == 1);
    }
    REQUIRE(2 * s.size() <= m + 1);
    REQUIRE((s.size() == 0) == std::all_of(u.begin(), u.end(),
                                           [](int32_t v) { return v == 0; }));
  }
}

TEST_CASE("interval counts of the tiny examples") {
  std::vector<int32_t> zero(5, 0);
  CHECK(count_nonzero_intervals(zero, 2) == 0);
  std::vector<int32_t> e1{1, 0, 0, 0};
  CHECK(count_nonzero_intervals(e1, 2) == 4);
  std::vector<int32_t> ones{1, 1};
  CHECK(count_nonzero_intervals(ones, 2) == 2);
}

TEST_CASE("interval count matches the naive oracle") {
  Rng rng(42);
  for (int trial = 0; trial < 400; ++trial) {
    const int m = 1 + static_cast<int>(rng.uniform_index(30));
    const int q = 2 + static_cast<int>(rng.uniform_index(20));
    std::vector<int32_t> u(m);
    for (auto& d : u) d = static_cast<int32_t>(rng.uniform_index(q));
    REQUIRE(count_nonzero_intervals(u, q) == oracle::interval_count(u, q));
  }
}

TEST_CASE("skeleton-interval bound, including the endpoint refinement") {
  Rng rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 1 + static_cast<int>(rng.uniform_index(30));
    const int q = 2 + static_cast<int>(rng.uniform_index(20));
    std::vector<int32_t> u(m);
    for (auto& d : u) d = static_cast<int32_t>(rng.uniform_index(q));
    Skeleton sk = skeleton(u);
    const int64_t s = sk.size();
    const int64_t bound = s * (m + 1 - s);
    REQUIRE(count_nonzero_intervals(u, q) >= bound);
    REQUIRE(count_nonzero_intervals_touching(u, q, skeleton_neighborhood(sk, m)) >=
            bound);
  }
}

TEST_CASE("box counts of the tiny examples") {
  CHECK(count_nonzero_boxes(element(3, 2, {0, 0, 0, 0})) == 0);
  CHECK(count_nonzero_boxes(element(3, 2, {1, 0, 0, 0})) == 4);
}

TEST_CASE("box count matches the naive oracle and the profile") {
  Rng rng(44);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform_index(5));
    const int q = 2 + static_cast<int>(rng.uniform_index(6));
    GroupElement y = random_element(rng, n, q);
    REQUIRE(count_nonzero_boxes(y) == oracle::box_count(y));
  }
}

TEST_CASE("nonzero elements have at least (n-1)^2 nonzero boxes") {
  Rng rng(45);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform_index(11));
    const int q = 2 + static_cast<int>(rng.uniform_index(6));
    GroupElement y = random_element(rng, n, q);
    const bool zero = std::all_of(y.coords.v.begin(), y.coords.v.end(),
                                  [](int32_t c) { return c == 0; });
    if (!zero) {
      REQUIRE(count_nonzero_boxes(y) >=
              static_cast<int64_t>(n - 1) * static_cast<int64_t>(n - 1));
    }
  }
}

TEST_CASE("psi of zero is empty") {
  PsiFamily psi = build_psi(element(3, 2, {0, 0, 0, 0}));
  CHECK(psi.total_size() == 0);
}

TEST_CASE("psi of a single first-row unit vector") {
  // Row 1 = e_1 in a 3-wide coordinate matrix: intervals [1,1],[1,2],[1,3]
  // all touch the skeleton neighborhood {1,2}.
  GroupElement y = element(4, 2, {1, 0, 0, 0, 0, 0, 0, 0, 0});
  PsiFamily psi = build_psi(y);
  CHECK(psi.rows[0] == std::vector<Interval>{{1, 1}, {1, 2}, {1, 3}});
  CHECK(psi.rows[1].empty());
  CHECK(psi.rows[2].empty());
}

TEST_CASE("psi invariants and the box inequality on random elements") {
  Rng rng(46);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform_index(9));
    const int q = 2 + static_cast<int>(rng.uniform_index(4));
    GroupElement y = random_element(rng, n, q);
    PsiFamily psi = build_psi(y);
    const int m = n - 1;
    for (int i = 0; i + 1 < m; ++i) {
      for (const auto& iv : psi.rows[i]) {
        REQUIRE(std::find(psi.rows[i + 1].begin(), psi.rows[i + 1].end(), iv) ==
                psi.rows[i + 1].end());
      }
    }
    for (int i = 0; i < m; ++i) {
      for (const auto& [k, l] : psi.rows[i]) {
        int64_t s = 0;
        for (int h = k; h <= l; ++h) s += y.coords.at(i, h - 1);
        REQUIRE(mod_norm(s, q) != 0);
      }
    }
    REQUIRE(2 * count_nonzero_boxes(y) >= static_cast<int64_t>(n) * psi.total_size());
  }
}

TEST_CASE("row-interval box bound: examples and randomized sweep") {
  CHECK(verify_lemma_3_3(element(3, 2, {0, 0, 0, 0}), {}));
  CHECK(verify_lemma_3_3(element(3, 2, {1, 0, 0, 0}), {1}));

  Rng rng(47);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform_index(9));
    const int q = 2 + static_cast<int>(rng.uniform_index(4));
    GroupElement y = random_element(rng, n, q);
    REQUIRE(verify_lemma_3_3(y, maximal_spaced_nonzero_rows(y)));
  }
}

TEST_CASE("row preconditions are structural errors") {
  GroupElement y = element(4, 2, {1, 1, 1, 1, 1, 1, 0, 0, 0});
  CHECK_THROWS_AS(verify_lemma_3_3(y, {1, 2}), std::invalid_argument);  // adjacent
  CHECK_THROWS_AS(verify_lemma_3_3(y, {3}), std::invalid_argument);     // zero row
  CHECK_THROWS_AS(verify_lemma_3_3(y, {7}), std::invalid_argument);     // out of range
}

TEST_CASE("big-row threshold empties the flagged rows") {
  GroupElement y = element(4, 2, {1, 0, 1, 0, 1, 0, 1, 0, 1});
  PsiFamily all = build_psi(y);
  PsiFamily none = build_psi(y, 0);  // every row trips a zero threshold
  CHECK(all.total_size() > 0);
  CHECK(none.total_size() == 0);
}

}  // TEST_SUITE
