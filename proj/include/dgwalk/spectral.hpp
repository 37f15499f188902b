#pragma once

#include "dgwalk/common.hpp"
#include "dgwalk/group.hpp"

namespace dgw {

inline constexpr uint64_t kDefaultGroupCap = uint64_t{1} << 24;
inline constexpr uint64_t kDefaultOracleCap = uint64_t{1} << 16;

// Histogram of the box sums of y: counts[a] = number of boxes [i,j]x[k,l]
// inside [1,n-1]^2 whose entry sum is congruent to a mod q.
struct SpectralProfile {
  int n = 0;
  int q = 2;
  std::vector<int64_t> counts;

  int64_t total_boxes() const;   // C(n,2)^2
  int64_t nonzero_boxes() const; // C(n,2)^2 - counts[0]
};

// O(n^4) over boxes, O(1) per box via a 2D prefix table.
SpectralProfile box_sum_profile(const GroupElement& y);

std::vector<double> cosine_table(int q);  // cos(2 pi a / q), a = 0..q-1

// lambda_y = (1 / C(n,2)^2) * sum_a counts[a] * cos(2 pi a / q).
double eigenvalue(const SpectralProfile& p);

// All q^((n-1)^2) walk eigenvalues, one per character y, in group_index order.
struct Spectrum {
  int n = 0;
  int q = 2;
  std::vector<double> values;

  double min_value() const;
};

Spectrum enumerate_spectrum(int n, int q, uint64_t cap = kDefaultGroupCap,
                            Exec exec = Exec::Parallel);

// log of (1/2) sqrt(sum_{y != 0} lambda_y^{2t}), accumulated with
// log-sum-exp so that large t cannot underflow. Upper-bounds log d(t).
double l2_log_bound(const Spectrum& s, uint64_t t);
double l2_bound(const Spectrum& s, uint64_t t);

enum class InversionMethod { Auto, Direct, Transform };

// P^t_0 over G by Fourier inversion, indexed by group_index:
// P^t_0(g) = (1/|G|) * sum_y lambda_y^t cos(2 pi <g,y> / q).
// Direct sums over all pairs (g, y); Transform runs one length-q transform
// along each of the (n-1)^2 coordinates. Auto picks Direct for small groups.
std::vector<double> exact_distribution(int n, int q, uint64_t t,
                                       uint64_t cap = kDefaultGroupCap,
                                       InversionMethod method = InversionMethod::Auto,
                                       Exec exec = Exec::Parallel);

// Same inversion reusing an already-enumerated spectrum (for t sweeps).
std::vector<double> exact_distribution_from_spectrum(const Spectrum& s, uint64_t t,
                                                     InversionMethod method = InversionMethod::Auto,
                                                     Exec exec = Exec::Parallel);

// (1/2) sum_g |P^t_0(g) - 1/|G||; equals the worst-start TV distance by
// vertex transitivity.
double exact_tv(int n, int q, uint64_t t, uint64_t cap = kDefaultGroupCap,
                Exec exec = Exec::Parallel);

double tv_to_uniform(const std::vector<double>& dist);

// Dense |G| x |G| transition matrix of the group walk (brute-force oracle).
struct DenseMatrix {
  uint64_t dim = 0;
  std::vector<double> a;  // row-major

  double& at(uint64_t r, uint64_t c) { return a[r * dim + c]; }
  double at(uint64_t r, uint64_t c) const { return a[r * dim + c]; }
};

DenseMatrix transition_matrix(int n, int q, uint64_t cap = kDefaultOracleCap);

// Distribution after t steps from the point mass at 0 by repeated
// matrix-vector products.
std::vector<double> power_distribution(const DenseMatrix& P, uint64_t t);

// Eigenvalues of a symmetric dense matrix, ascending.
std::vector<double> dense_symmetric_eigenvalues(const DenseMatrix& m);

// Sorted (value, multiplicity) pairs, grouping values closer than `tol`.
std::vector<std::pair<double, uint64_t>> spectrum_multiplicities(
    const Spectrum& s, double tol = 1e-12);

// Mixing-time constants.
struct TheoremTimes {
  int n = 0;
  int q = 2;
  double c = 0;
  double t_nq = 0;      // n^2 / (4 (1 - cos 2pi/q)) * log n
  double delta_nq = 0;  // n^2 / (1 - cos 2pi/q) * loglog(16n) * sqrt(log n) * log q
  double t_upper = 0;   // t_nq + c * delta_nq
  double t_lower = 0;   // t_nq - n^2 / (4 (1 - cos 2pi/q)) * (c + 12) * log q
};

TheoremTimes theorem_times(int n, int q, double c);

// Smallest c for which the upper-bound time formula is certified.
double min_upper_c(int n);  // 640 / loglog(16 n)

}  // namespace dgw
