#include "dgwalk/wilson.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>

#include "dgwalk/spectral.hpp"

namespace dgw {

WilsonStatistic make_wilson_statistic(int n, int q) {
  if (n < 2 || q < 2) throw std::invalid_argument("need n >= 2 and q >= 2");
  WilsonStatistic w;
  w.n = n;
  w.q = q;
  w.half = (n - 1) / 2;
  w.gamma = 4.0 / (static_cast<double>(n) * n) *
            (1.0 - std::cos(2.0 * std::numbers::pi / q));
  w.f_max = static_cast<double>(w.half) * w.half;
  return w;
}

GroupElement d_matrix(int a, int b, int n, int q) {
  if (a < 1 || b < 1 || 2 * a > n - 1 || 2 * b > n - 1) {
    throw std::out_of_range("block (a,b) falls outside the coordinate matrix");
  }
  GroupElement d = zero_group_element(n, q);
  d.coords.at(2 * a - 2, 2 * b - 2) = 1;
  d.coords.at(2 * a - 1, 2 * b - 1) = 1;
  d.coords.at(2 * a - 1, 2 * b - 2) = q - 1;
  d.coords.at(2 * a - 2, 2 * b - 1) = q - 1;
  return d;
}

int32_t pair_inner_product(const GroupElement& x, int a, int b) {
  const auto& c = x.coords;
  return mod_norm(static_cast<int64_t>(c.at(2 * a - 2, 2 * b - 2)) -
                      c.at(2 * a - 2, 2 * b - 1) - c.at(2 * a - 1, 2 * b - 2) +
                      c.at(2 * a - 1, 2 * b - 1),
                  x.q);
}

double statistic_F(const GroupElement& x, const WilsonStatistic& w) {
  if (x.n != w.n || x.q != w.q) throw std::invalid_argument("dimension mismatch");
  const auto cosines = cosine_table(w.q);
  double f = 0;
  for (int a = 1; a <= w.half; ++a) {
    for (int b = 1; b <= w.half; ++b) {
      f += cosines[pair_inner_product(x, a, b)];
    }
  }
  return f;
}

namespace {

// Sum of D_ab over the coordinate box [r1,r2] x [c1,c2]: +-1 when the box
// cuts the 2x2 block along both axes, 0 otherwise.
inline int box_overlap(int r1, int r2, int c1, int c2, int a, int b) {
  const int fr = (r1 <= 2 * a - 1 && 2 * a - 1 <= r2) - (r1 <= 2 * a && 2 * a <= r2);
  const int fc = (c1 <= 2 * b - 1 && 2 * b - 1 <= c2) - (c1 <= 2 * b && 2 * b <= c2);
  return fr * fc;
}

// Per-pair inner products of x.
std::vector<int32_t> base_inner_products(const GroupElement& x, const WilsonStatistic& w) {
  std::vector<int32_t> ips(static_cast<size_t>(w.half) * w.half);
  for (int a = 1; a <= w.half; ++a) {
    for (int b = 1; b <= w.half; ++b) {
      ips[static_cast<size_t>(a - 1) * w.half + (b - 1)] = pair_inner_product(x, a, b);
    }
  }
  return ips;
}

}  // namespace

double one_step_expectation_F(const GroupElement& x, const WilsonStatistic& w) {
  if (x.n != w.n || x.q != w.q) throw std::invalid_argument("dimension mismatch");
  const int n = w.n;
  const int q = w.q;
  const auto ips = base_inner_products(x, w);
  const auto cosines = cosine_table(q);

  // Every move visited once; each (move, pair) contributes one residue count,
  // so the average is assembled from integers and a single q-term dot product.
  std::vector<int64_t> residue_counts(q, 0);
  const uint64_t nmoves = move_count(n, q);
  for (uint64_t mi = 0; mi < nmoves; ++mi) {
    const Move mv = move_from_index(mi, n, q);
    for (int a = 1; a <= w.half; ++a) {
      for (int b = 1; b <= w.half; ++b) {
        const int delta =
            mv.sign * box_overlap(mv.i, mv.j - 1, mv.k, mv.l - 1, a, b);
        const int32_t base = ips[static_cast<size_t>(a - 1) * w.half + (b - 1)];
        ++residue_counts[mod_norm(base + delta, q)];
      }
    }
  }

  double acc = 0;
  for (int r = 0; r < q; ++r) {
    acc += static_cast<double>(residue_counts[r]) * cosines[r];
  }
  return acc / static_cast<double>(nmoves);
}

double max_increment_F(const GroupElement& x, const WilsonStatistic& w) {
  if (x.n != w.n || x.q != w.q) throw std::invalid_argument("dimension mismatch");
  const int q = w.q;
  const auto ips = base_inner_products(x, w);
  const auto cosines = cosine_table(q);

  double worst = 0;
  const uint64_t nmoves = move_count(w.n, q);
  for (uint64_t mi = 0; mi < nmoves; ++mi) {
    const Move mv = move_from_index(mi, w.n, q);
    double delta_f = 0;
    for (int a = 1; a <= w.half; ++a) {
      for (int b = 1; b <= w.half; ++b) {
        const int delta = mv.sign * box_overlap(mv.i, mv.j - 1, mv.k, mv.l - 1, a, b);
        if (delta == 0) continue;
        const int32_t base = ips[static_cast<size_t>(a - 1) * w.half + (b - 1)];
        delta_f += cosines[mod_norm(base + delta, q)] - cosines[base];
      }
    }
    worst = std::max(worst, std::fabs(delta_f));
  }
  return worst;
}

double wilson_time(int n, int q, double eps) {
  if (n < 4) throw std::invalid_argument("need n >= 4 so that gamma < 2 - sqrt(2)");
  if (q < 2) throw std::invalid_argument("need q >= 2");
  if (!(eps > 0 && eps < 1)) throw std::invalid_argument("need 0 < eps < 1");
  const WilsonStatistic w = make_wilson_statistic(n, q);
  const double arg = w.f_max * std::sqrt(w.gamma * eps / (4.0 * w.r_bound));
  if (arg <= 1.0) return 0.0;
  return std::log(arg) / -std::log1p(-w.gamma);
}

namespace {

// Integer key on the attainable value lattice of F for q in {2,3,4,6}
// (cosines are half-integers there); 64 uniform bins otherwise.
struct FBinning {
  int q = 2;
  int pairs = 0;
  double f_max = 0;
  bool lattice = false;
  std::array<int, 6> weight{};  // per-residue weight, lattice case

  static FBinning make(const WilsonStatistic& w) {
    FBinning b;
    b.q = w.q;
    b.pairs = w.half * w.half;
    b.f_max = w.f_max;
    switch (w.q) {
      case 2: b.lattice = true; b.weight = {1, -1, 0, 0, 0, 0}; break;
      case 3: b.lattice = true; b.weight = {2, -1, -1, 0, 0, 0}; break;
      case 4: b.lattice = true; b.weight = {1, 0, -1, 0, 0, 0}; break;
      case 6: b.lattice = true; b.weight = {2, 1, -1, -2, -1, 1}; break;
      default: b.lattice = false; break;
    }
    return b;
  }

  uint64_t bins() const {
    if (pairs == 0) return 1;
    if (!lattice) return 64;
    switch (q) {
      case 2:
      case 3: return static_cast<uint64_t>(pairs) + 1;
      case 4: return 2ull * pairs + 1;
      default: return 4ull * pairs + 1;
    }
  }

  int64_t key(const GroupElement& x, const WilsonStatistic& w) const {
    if (pairs == 0) return 0;
    if (lattice) {
      int64_t k = 0;
      for (int a = 1; a <= w.half; ++a) {
        for (int b = 1; b <= w.half; ++b) {
          k += weight[pair_inner_product(x, a, b)];
        }
      }
      return k;
    }
    const double f = statistic_F(x, w);
    auto bin = static_cast<int64_t>((f + f_max) / (2.0 * f_max) * 64.0);
    return std::clamp<int64_t>(bin, 0, 63);
  }
};

GroupElement stationary_draw(int n, int q, Rng& rng) {
  GroupElement g = zero_group_element(n, q);
  for (auto& c : g.coords.v) c = static_cast<int32_t>(rng.uniform_index(q));
  return g;
}

}  // namespace

McLowerBound mc_tv_lower_bound_detail(const WalkConfig& cfg, uint64_t t,
                                      uint64_t trials, Exec exec) {
  validate_config(cfg);
  if (trials < 1000) throw std::invalid_argument("need at least 1000 trials");
  const int n = cfg.n;
  const int q = cfg.q;
  const WilsonStatistic w = make_wilson_statistic(n, q);
  const FBinning binning = FBinning::make(w);

  // Walk trial k uses stream k, stationary draw k uses stream trials + k, so
  // every key is a pure function of (seed, index) and scheduling cannot
  // change the histograms.
  std::vector<int64_t> walk_keys(trials), stat_keys(trials);
  const bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(dynamic, 64) if (par)
  for (int64_t k = 0; k < static_cast<int64_t>(trials); ++k) {
    Rng rng = derived_rng(cfg.seed, static_cast<uint64_t>(k));
    GroupElement g = run_group_walk(n, q, rng, t, cfg.lazy);
    walk_keys[k] = binning.key(g, w);
    Rng srng = derived_rng(cfg.seed, trials + static_cast<uint64_t>(k));
    stat_keys[k] = binning.key(stationary_draw(n, q, srng), w);
  }

  std::map<int64_t, std::pair<uint64_t, uint64_t>> hist;
  for (int64_t k : walk_keys) ++hist[k].first;
  for (int64_t k : stat_keys) ++hist[k].second;

  double tv = 0;
  for (const auto& [key, counts] : hist) {
    tv += std::fabs(static_cast<double>(counts.first) - counts.second);
  }
  tv /= 2.0 * static_cast<double>(trials);

  McLowerBound out;
  out.raw_tv = tv;
  out.bins = binning.bins();
  out.correction =
      2.0 * std::sqrt(static_cast<double>(out.bins) / static_cast<double>(trials));
  out.estimate = std::max(0.0, tv - out.correction);
  return out;
}

double mc_tv_lower_bound(const WalkConfig& cfg, uint64_t t, uint64_t trials,
                         Exec exec) {
  return mc_tv_lower_bound_detail(cfg, t, trials, exec).estimate;
}

}  // namespace dgw
