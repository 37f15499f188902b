#pragma once

#include "dgwalk/common.hpp"
#include "dgwalk/group.hpp"
#include "dgwalk/walk.hpp"

namespace dgw {

// The distinguishing statistic of the lower bound:
// F(x) = sum over pairs (a,b), 1 <= a,b <= floor((n-1)/2), of
// cos(2 pi <x, D_ab> / q), where D_ab marks one disjoint 2x2 block.
struct WilsonStatistic {
  int n = 0;
  int q = 2;
  int half = 0;       // floor((n-1)/2)
  double gamma = 0;   // (4/n^2)(1 - cos 2pi/q): one-step contraction rate
  double r_bound = 64;  // bound on the squared one-step increment of F
  double f_max = 0;   // F(0) = half^2
};

WilsonStatistic make_wilson_statistic(int n, int q);

// D_ab: +1 at (2a-1,2b-1) and (2a,2b), -1 at (2a,2b-1) and (2a-1,2b),
// 1-based. Throws std::out_of_range when the block falls outside the
// (n-1) x (n-1) coordinate matrix.
GroupElement d_matrix(int a, int b, int n, int q);

// <x, D_ab> mod q.
int32_t pair_inner_product(const GroupElement& x, int a, int b);

double statistic_F(const GroupElement& x, const WilsonStatistic& w);

// Exact average of F over all moves applied to x, by full move enumeration
// with integer residue counting. Equals (1 - gamma) F(x) up to rounding.
double one_step_expectation_F(const GroupElement& x, const WilsonStatistic& w);

// Largest |F(x + move) - F(x)| over the whole move set.
double max_increment_F(const GroupElement& x, const WilsonStatistic& w);

// Largest time certified to keep d(t) >= 1 - eps, with R = 64:
//   (log f_max + 0.5 log(gamma eps / (4R))) / (-log(1 - gamma)),
// or 0 when the log argument is not > 1. Requires n >= 4 (gamma < 2 - sqrt 2)
// and 0 < eps < 1.
double wilson_time(int n, int q, double eps);

struct McLowerBound {
  double estimate = 0;    // max(0, raw_tv - correction)
  double raw_tv = 0;      // TV between the two empirical F histograms
  double correction = 0;  // 2 sqrt(bins / trials)
  uint64_t bins = 0;
};

// TV between the empirical distribution of F(C_t) over `trials` seeded walks
// and the F distribution of `trials` exact stationary draws (uniform iid
// coordinates), minus a two-sample fluctuation correction. Statistically
// conservative lower-bound estimate of d(t). F is binned on its attainable
// value lattice for q in {2,3,4,6} and on 64 uniform bins otherwise.
// Requires trials >= 1000.
McLowerBound mc_tv_lower_bound_detail(const WalkConfig& cfg, uint64_t t,
                                      uint64_t trials,
                                      Exec exec = Exec::Parallel);
double mc_tv_lower_bound(const WalkConfig& cfg, uint64_t t, uint64_t trials,
                         Exec exec = Exec::Parallel);

}  // namespace dgw
