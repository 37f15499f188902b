#pragma once

#include <json.hpp>

#include "dgwalk/common.hpp"

namespace dgw {

// Outcome of one property sweep. A counterexample carries the full witness
// (inputs and the numbers that disagree) so a failure can be replayed.
struct SuiteReport {
  std::string lemma;
  std::string mode;  // "exhaustive", "random" or "fixed"
  uint64_t cases_checked = 0;
  std::vector<nlohmann::json> counterexamples;

  bool passed() const { return counterexamples.empty(); }
  nlohmann::json to_json() const;
};

// S(u) >= s(u)(n - s(u)) and the endpoint-restricted refinement, over all
// q^m vectors of length m = n-1.
SuiteReport lemma_3_2_exhaustive(int n, int q, Exec exec = Exec::Parallel);

// Exhaustive over every (q, m) with 2 <= q <= max_q and q^m <= cap.
SuiteReport lemma_3_2_exhaustive_sweep(uint64_t cap, int max_q,
                                       Exec exec = Exec::Parallel);

SuiteReport lemma_3_2_random(uint64_t trials, int max_n, int max_q,
                             uint64_t seed, Exec exec = Exec::Parallel);

// N(y) >= S_1(n-1) + S_2(n-3) + ... over the maximal spaced row set;
// exhaustive over G for each (n, q) pair, plus `random_trials` random cases
// with n <= 10, q <= 5.
SuiteReport lemma_3_3_suite(const std::vector<std::pair<int, int>>& exhaustive_nq,
                            uint64_t random_trials, uint64_t seed);

// build_psi invariants plus 2 N(y) >= n * sum |Psi_i|.
SuiteReport lemma_3_5_suite(const std::vector<std::pair<int, int>>& exhaustive_nq,
                            uint64_t random_trials, uint64_t seed);

// N(y) >= (n-1)^2 for every nonzero y.
SuiteReport box_lower_bound_suite(const std::vector<std::pair<int, int>>& exhaustive_nq,
                                  uint64_t random_trials, uint64_t seed);

// Prefix-sum S(u)/N(y) against naive re-enumeration oracles.
SuiteReport prefix_oracle_suite(const std::vector<std::pair<int, int>>& exhaustive_nq,
                                uint64_t random_trials, uint64_t seed);

// Character-formula spectrum against the dense eigendecomposition of the
// explicit transition matrix, per-value tolerance 1e-10.
SuiteReport spectral_equivalence_suite(const std::vector<std::pair<int, int>>& nq_pairs);

// min lambda >= -28/29 (slack 1e-12) over every (n, q) with n >= 3,
// q <= max_q and q^((n-1)^2) <= cap.
SuiteReport negative_eigenvalue_suite(uint64_t cap, int max_q,
                                      Exec exec = Exec::Parallel);

// Sorted multiset comparison with per-value tolerance.
bool multisets_match(std::vector<double> a, std::vector<double> b, double tol);

}  // namespace dgw
