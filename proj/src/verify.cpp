#include "dgwalk/verify.hpp"

#include <algorithm>
#include <cmath>

#include "dgwalk/combinatorics.hpp"
#include "dgwalk/rng.hpp"
#include "dgwalk/spectral.hpp"

namespace dgw {

nlohmann::json SuiteReport::to_json() const {
  return nlohmann::json{{"lemma", lemma},
                        {"mode", mode},
                        {"cases_checked", cases_checked},
                        {"counterexamples", counterexamples}};
}

namespace {

constexpr size_t kMaxWitnesses = 16;

// Naive re-enumeration oracles, deliberately independent of the prefix-sum
// paths they check.

int64_t naive_interval_count(std::span<const int32_t> u, int q) {
  const int m = static_cast<int>(u.size());
  int64_t count = 0;
  for (int i = 1; i <= m; ++i) {
    for (int j = i; j <= m; ++j) {
      int64_t s = 0;
      for (int h = i; h <= j; ++h) s += u[h - 1];
      if (mod_norm(s, q) != 0) ++count;
    }
  }
  return count;
}

int64_t naive_box_count(const GroupElement& y) {
  const int m = y.n - 1;
  int64_t count = 0;
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j)
      for (int k = 1; k <= m; ++k)
        for (int l = k; l <= m; ++l) {
          int64_t s = 0;
          for (int r = i; r <= j; ++r)
            for (int c = k; c <= l; ++c) s += y.coords.at(r - 1, c - 1);
          if (mod_norm(s, y.q) != 0) ++count;
        }
  return count;
}

nlohmann::json vector_json(std::span<const int32_t> u) {
  return nlohmann::json(std::vector<int32_t>(u.begin(), u.end()));
}

nlohmann::json element_json(const GroupElement& y) {
  nlohmann::json rows = nlohmann::json::array();
  const int m = y.n - 1;
  for (int r = 0; r < m; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m; ++c) row.push_back(y.coords.at(r, c));
    rows.push_back(row);
  }
  return nlohmann::json{{"n", y.n}, {"q", y.q}, {"coords", rows}};
}

// Both claims of the skeleton-interval bound for a single vector; returns a
// witness on failure.
std::optional<nlohmann::json> check_lemma_3_2(std::span<const int32_t> u, int q) {
  const int m = static_cast<int>(u.size());
  const int n = m + 1;
  const Skeleton sk = skeleton(u);
  const int64_t s = sk.size();
  const int64_t bound = s * (n - s);
  const int64_t total = count_nonzero_intervals(u, q);
  const int64_t touching =
      count_nonzero_intervals_touching(u, q, skeleton_neighborhood(sk, m));
  if (total >= bound && touching >= bound) return std::nullopt;
  return nlohmann::json{{"n", n},           {"q", q},
                        {"u", vector_json(u)}, {"skeleton", sk.indices},
                        {"s", s},           {"bound", bound},
                        {"intervals", total}, {"intervals_touching", touching}};
}

void decode_vector(uint64_t idx, int q, std::vector<int32_t>& u) {
  for (auto& d : u) {
    d = static_cast<int32_t>(idx % q);
    idx /= q;
  }
}

// Runs check() over all q^m vectors, collecting up to kMaxWitnesses failures
// deterministically (chunks merged in index order).
template <class Check>
void exhaustive_vectors(int m, int q, Exec exec, SuiteReport& report, Check&& check) {
  const uint64_t total = *checked_pow(q, m, UINT64_MAX / 2);
  constexpr uint64_t kChunk = uint64_t{1} << 14;
  const uint64_t nchunks = (total + kChunk - 1) / kChunk;
  std::vector<std::vector<nlohmann::json>> failures(nchunks);
  const bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(dynamic) if (par)
  for (int64_t ci = 0; ci < static_cast<int64_t>(nchunks); ++ci) {
    std::vector<int32_t> u(m);
    const uint64_t lo = static_cast<uint64_t>(ci) * kChunk;
    const uint64_t hi = std::min(lo + kChunk, total);
    for (uint64_t idx = lo; idx < hi; ++idx) {
      decode_vector(idx, q, u);
      if (auto witness = check(std::span<const int32_t>(u))) {
        if (failures[ci].size() < kMaxWitnesses) failures[ci].push_back(*witness);
      }
    }
  }
  report.cases_checked += total;
  for (auto& f : failures) {
    for (auto& w : f) {
      if (report.counterexamples.size() < kMaxWitnesses) {
        report.counterexamples.push_back(std::move(w));
      }
    }
  }
}

std::vector<std::pair<int, int>> exhaustive_vector_grid(uint64_t cap, int max_q) {
  std::vector<std::pair<int, int>> grid;  // (m, q)
  for (int q = 2; q <= max_q; ++q) {
    for (int m = 1;; ++m) {
      if (!checked_pow(q, m, cap)) break;
      grid.emplace_back(m, q);
    }
  }
  return grid;
}

}  // namespace

SuiteReport lemma_3_2_exhaustive(int n, int q, Exec exec) {
  SuiteReport report{.lemma = "lemma3_2", .mode = "exhaustive"};
  exhaustive_vectors(n - 1, q, exec, report,
                     [q](std::span<const int32_t> u) { return check_lemma_3_2(u, q); });
  return report;
}

SuiteReport lemma_3_2_exhaustive_sweep(uint64_t cap, int max_q, Exec exec) {
  SuiteReport report{.lemma = "lemma3_2", .mode = "exhaustive"};
  for (auto [m, q] : exhaustive_vector_grid(cap, max_q)) {
    exhaustive_vectors(m, q, exec, report,
                       [q](std::span<const int32_t> u) { return check_lemma_3_2(u, q); });
  }
  return report;
}

SuiteReport lemma_3_2_random(uint64_t trials, int max_n, int max_q, uint64_t seed,
                             Exec exec) {
  SuiteReport report{.lemma = "lemma3_2", .mode = "random"};
  constexpr uint64_t kChunk = uint64_t{1} << 10;
  const uint64_t nchunks = (trials + kChunk - 1) / kChunk;
  std::vector<std::vector<nlohmann::json>> failures(nchunks);
  const bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(dynamic) if (par)
  for (int64_t ci = 0; ci < static_cast<int64_t>(nchunks); ++ci) {
    const uint64_t lo = static_cast<uint64_t>(ci) * kChunk;
    const uint64_t hi = std::min(lo + kChunk, trials);
    for (uint64_t k = lo; k < hi; ++k) {
      Rng rng = derived_rng(seed, k);
      const int n = 2 + static_cast<int>(rng.uniform_index(max_n - 1));
      const int q = 2 + static_cast<int>(rng.uniform_index(max_q - 1));
      std::vector<int32_t> u(n - 1);
      for (auto& d : u) d = static_cast<int32_t>(rng.uniform_index(q));
      if (auto witness = check_lemma_3_2(u, q)) {
        if (failures[ci].size() < kMaxWitnesses) failures[ci].push_back(*witness);
      }
    }
  }
  report.cases_checked = trials;
  for (auto& f : failures) {
    for (auto& w : f) {
      if (report.counterexamples.size() < kMaxWitnesses) {
        report.counterexamples.push_back(std::move(w));
      }
    }
  }
  return report;
}

namespace {

// Shared driver: predicate over every y in G for each (n, q), plus random
// (n, q, y) cases drawn from the given ranges.
template <class Check>
SuiteReport element_suite(const std::string& name,
                          const std::vector<std::pair<int, int>>& exhaustive_nq,
                          uint64_t random_trials, uint64_t seed, int rand_max_n,
                          int rand_max_q, Check&& check) {
  SuiteReport report{.lemma = name,
                     .mode = random_trials > 0 ? "exhaustive+random" : "exhaustive"};
  for (auto [n, q] : exhaustive_nq) {
    const uint64_t size = group_size_checked(n, q, kDefaultGroupCap);
    for (uint64_t idx = 0; idx < size; ++idx) {
      GroupElement y = group_element_from_index(idx, n, q);
      ++report.cases_checked;
      if (auto witness = check(y)) {
        if (report.counterexamples.size() < kMaxWitnesses) {
          report.counterexamples.push_back(*witness);
        }
      }
    }
  }
  for (uint64_t k = 0; k < random_trials; ++k) {
    Rng rng = derived_rng(seed, k);
    const int n = 2 + static_cast<int>(rng.uniform_index(rand_max_n - 1));
    const int q = 2 + static_cast<int>(rng.uniform_index(rand_max_q - 1));
    GroupElement y = zero_group_element(n, q);
    for (auto& c : y.coords.v) c = static_cast<int32_t>(rng.uniform_index(q));
    ++report.cases_checked;
    if (auto witness = check(y)) {
      if (report.counterexamples.size() < kMaxWitnesses) {
        report.counterexamples.push_back(*witness);
      }
    }
  }
  return report;
}

}  // namespace

SuiteReport lemma_3_3_suite(const std::vector<std::pair<int, int>>& exhaustive_nq,
                            uint64_t random_trials, uint64_t seed) {
  return element_suite(
      "lemma3_3", exhaustive_nq, random_trials, seed, 10, 5,
      [](const GroupElement& y) -> std::optional<nlohmann::json> {
        const auto rows = maximal_spaced_nonzero_rows(y);
        if (verify_lemma_3_3(y, rows)) return std::nullopt;
        nlohmann::json w = element_json(y);
        w["rows"] = rows;
        w["boxes"] = count_nonzero_boxes(y);
        return w;
      });
}

SuiteReport lemma_3_5_suite(const std::vector<std::pair<int, int>>& exhaustive_nq,
                            uint64_t random_trials, uint64_t seed) {
  return element_suite(
      "lemma3_5", exhaustive_nq, random_trials, seed, 10, 5,
      [](const GroupElement& y) -> std::optional<nlohmann::json> {
        const int m = y.n - 1;
        const PsiFamily psi = build_psi(y);
        // Consecutive rows disjoint as interval sets.
        for (int i = 0; i + 1 < m; ++i) {
          for (const auto& iv : psi.rows[i]) {
            if (std::find(psi.rows[i + 1].begin(), psi.rows[i + 1].end(), iv) !=
                psi.rows[i + 1].end()) {
              nlohmann::json w = element_json(y);
              w["row"] = i + 1;
              w["interval"] = {iv.first, iv.second};
              w["violation"] = "consecutive rows share an interval";
              return w;
            }
          }
        }
        // Every member a nonzero interval of its row.
        for (int i = 0; i < m; ++i) {
          auto u = std::span<const int32_t>(y.coords.v)
                       .subspan(static_cast<size_t>(i) * m, static_cast<size_t>(m));
          for (const auto& [k, l] : psi.rows[i]) {
            int64_t s = 0;
            for (int h = k; h <= l; ++h) s += u[h - 1];
            if (mod_norm(s, y.q) == 0) {
              nlohmann::json w = element_json(y);
              w["row"] = i + 1;
              w["interval"] = {k, l};
              w["violation"] = "zero-sum interval selected";
              return w;
            }
          }
        }
        const int64_t boxes = count_nonzero_boxes(y);
        if (2 * boxes < static_cast<int64_t>(y.n) * psi.total_size()) {
          nlohmann::json w = element_json(y);
          w["boxes"] = boxes;
          w["psi_total"] = psi.total_size();
          w["violation"] = "2 N(y) < n * sum |Psi_i|";
          return w;
        }
        return std::nullopt;
      });
}

SuiteReport box_lower_bound_suite(const std::vector<std::pair<int, int>>& exhaustive_nq,
                                  uint64_t random_trials, uint64_t seed) {
  return element_suite(
      "nonzero_box_lower_bound", exhaustive_nq, random_trials, seed, 12, 7,
      [](const GroupElement& y) -> std::optional<nlohmann::json> {
        const bool zero =
            std::all_of(y.coords.v.begin(), y.coords.v.end(),
                        [](int32_t c) { return c == 0; });
        if (zero) return std::nullopt;
        const int64_t boxes = count_nonzero_boxes(y);
        const int64_t bound = static_cast<int64_t>(y.n - 1) * (y.n - 1);
        if (boxes >= bound) return std::nullopt;
        nlohmann::json w = element_json(y);
        w["boxes"] = boxes;
        w["bound"] = bound;
        return w;
      });
}

SuiteReport prefix_oracle_suite(const std::vector<std::pair<int, int>>& exhaustive_nq,
                                uint64_t random_trials, uint64_t seed) {
  SuiteReport report{.lemma = "prefix_oracles",
                     .mode = random_trials > 0 ? "exhaustive+random" : "exhaustive"};
  auto check_element = [&](const GroupElement& y) {
    const int64_t fast = count_nonzero_boxes(y);
    const int64_t naive = naive_box_count(y);
    const SpectralProfile profile = box_sum_profile(y);
    ++report.cases_checked;
    if (fast == naive && profile.nonzero_boxes() == naive) return;
    if (report.counterexamples.size() < kMaxWitnesses) {
      nlohmann::json w = element_json(y);
      w["fast"] = fast;
      w["naive"] = naive;
      w["profile_nonzero"] = profile.nonzero_boxes();
      report.counterexamples.push_back(std::move(w));
    }
  };
  auto check_vector = [&](std::span<const int32_t> u, int q) {
    const int64_t fast = count_nonzero_intervals(u, q);
    const int64_t naive = naive_interval_count(u, q);
    ++report.cases_checked;
    if (fast == naive) return;
    if (report.counterexamples.size() < kMaxWitnesses) {
      report.counterexamples.push_back(nlohmann::json{
          {"q", q}, {"u", vector_json(u)}, {"fast", fast}, {"naive", naive}});
    }
  };

  for (auto [n, q] : exhaustive_nq) {
    const uint64_t size = group_size_checked(n, q, kDefaultGroupCap);
    for (uint64_t idx = 0; idx < size; ++idx) {
      check_element(group_element_from_index(idx, n, q));
    }
    const uint64_t vectors = *checked_pow(q, n - 1, UINT64_MAX / 2);
    std::vector<int32_t> u(n - 1);
    for (uint64_t idx = 0; idx < vectors; ++idx) {
      decode_vector(idx, q, u);
      check_vector(u, q);
    }
  }
  for (uint64_t k = 0; k < random_trials; ++k) {
    Rng rng = derived_rng(seed, k);
    // Interval counts are cheap to re-derive at full width; box counts use
    // the naive O(n^6) oracle so stay at n <= 6.
    const int nv = 2 + static_cast<int>(rng.uniform_index(63));
    const int qv = 2 + static_cast<int>(rng.uniform_index(100));
    std::vector<int32_t> u(nv - 1);
    for (auto& d : u) d = static_cast<int32_t>(rng.uniform_index(qv));
    check_vector(u, qv);

    const int ny = 2 + static_cast<int>(rng.uniform_index(5));
    const int qy = 2 + static_cast<int>(rng.uniform_index(6));
    GroupElement y = zero_group_element(ny, qy);
    for (auto& c : y.coords.v) c = static_cast<int32_t>(rng.uniform_index(qy));
    check_element(y);
  }
  return report;
}

SuiteReport spectral_equivalence_suite(const std::vector<std::pair<int, int>>& nq_pairs) {
  SuiteReport report{.lemma = "spectral_equivalence", .mode = "fixed"};
  for (auto [n, q] : nq_pairs) {
    const Spectrum s = enumerate_spectrum(n, q);
    std::vector<double> formula = s.values;
    std::vector<double> oracle = dense_symmetric_eigenvalues(transition_matrix(n, q));
    std::sort(formula.begin(), formula.end());
    std::sort(oracle.begin(), oracle.end());
    report.cases_checked += formula.size();
    double worst = 0;
    for (size_t i = 0; i < formula.size(); ++i) {
      worst = std::max(worst, std::fabs(formula[i] - oracle[i]));
    }
    if (worst > 1e-10 && report.counterexamples.size() < kMaxWitnesses) {
      report.counterexamples.push_back(
          nlohmann::json{{"n", n}, {"q", q}, {"max_divergence", worst}});
    }
  }
  return report;
}

SuiteReport negative_eigenvalue_suite(uint64_t cap, int max_q, Exec exec) {
  SuiteReport report{.lemma = "negative_eigenvalue_bound", .mode = "exhaustive"};
  constexpr double kBound = -28.0 / 29.0;
  for (int n = 3;; ++n) {
    if (!checked_pow(2, (n - 1) * (n - 1), cap)) break;
    for (int q = 2; q <= max_q; ++q) {
      if (!checked_pow(q, (n - 1) * (n - 1), cap)) break;
      const Spectrum s = enumerate_spectrum(n, q, cap, exec);
      report.cases_checked += s.values.size();
      const double low = s.min_value();
      if (low < kBound - 1e-12 && report.counterexamples.size() < kMaxWitnesses) {
        report.counterexamples.push_back(
            nlohmann::json{{"n", n}, {"q", q}, {"min_eigenvalue", low}});
      }
    }
  }
  return report;
}

bool multisets_match(std::vector<double> a, std::vector<double> b, double tol) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::fabs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

}  // namespace dgw
