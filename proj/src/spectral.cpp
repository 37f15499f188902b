#include "dgwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include <eigen3/Eigen/Dense>

#include "dgwalk/move.hpp"
#include "parallel_util.hpp"

namespace dgw {

namespace {

// Prefix table of coords mod q into `prefix` ((m+1)^2, row-major), then one
// histogram bump per box. `counts` must be sized q and zeroed by the caller.
void profile_counts(const Grid& coords, int q, std::vector<int32_t>& prefix,
                    std::vector<int64_t>& counts) {
  const int m = coords.rows;
  const int w = m + 1;
  for (int b = 0; b <= m; ++b) prefix[b] = 0;
  for (int a = 1; a <= m; ++a) {
    prefix[static_cast<size_t>(a) * w] = 0;
    int64_t row_acc = 0;
    for (int b = 1; b <= m; ++b) {
      row_acc += coords.at(a - 1, b - 1);
      prefix[static_cast<size_t>(a) * w + b] =
          mod_norm(prefix[static_cast<size_t>(a - 1) * w + b] + row_acc, q);
    }
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = i; j <= m; ++j) {
      const int32_t* top = prefix.data() + static_cast<size_t>(i - 1) * w;
      const int32_t* bot = prefix.data() + static_cast<size_t>(j) * w;
      for (int k = 1; k <= m; ++k) {
        for (int l = k; l <= m; ++l) {
          int32_t s = mod_norm(
              static_cast<int64_t>(bot[l]) - top[l] - bot[k - 1] + top[k - 1], q);
          ++counts[s];
        }
      }
    }
  }
}

double eigenvalue_from_counts(const std::vector<int64_t>& counts,
                              const std::vector<double>& cosines, int64_t total) {
  double acc = 0;
  for (size_t a = 0; a < counts.size(); ++a) {
    acc += static_cast<double>(counts[a]) * cosines[a];
  }
  return acc / static_cast<double>(total);
}

// x^t by squaring; exact for integral exponents including negative bases.
double ipow(double x, uint64_t t) {
  double r = 1.0, b = x;
  while (t > 0) {
    if (t & 1) r *= b;
    b *= b;
    t >>= 1;
  }
  return r;
}

void decode_digits(uint64_t idx, int q, Grid& coords) {
  for (auto& d : coords.v) {
    d = static_cast<int32_t>(idx % q);
    idx /= q;
  }
}

std::vector<double> eigenvalue_powers(const Spectrum& s, uint64_t t, Exec exec) {
  std::vector<double> powt(s.values.size());
  const bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(static) if (par)
  for (int64_t i = 0; i < static_cast<int64_t>(s.values.size()); ++i) {
    powt[i] = ipow(s.values[i], t);
  }
  return powt;
}

std::vector<double> invert_direct(int n, int q, const std::vector<double>& powt,
                                  Exec exec) {
  const uint64_t size = powt.size();
  const int digits = (n - 1) * (n - 1);
  const auto cosines = cosine_table(q);
  std::vector<double> dist(size);
  const bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(static) if (par)
  for (int64_t gi = 0; gi < static_cast<int64_t>(size); ++gi) {
    std::vector<int32_t> g(digits), y(digits, 0);
    uint64_t rest = static_cast<uint64_t>(gi);
    for (int d = 0; d < digits; ++d) {
      g[d] = static_cast<int32_t>(rest % q);
      rest /= q;
    }
    // Walk y through all indices with an incrementally maintained <g, y>.
    double acc = 0;
    int32_t ip = 0;
    for (uint64_t yi = 0;; ++yi) {
      acc += powt[yi] * cosines[ip];
      if (yi + 1 == size) break;
      int d = 0;
      while (y[d] == q - 1) {
        y[d] = 0;
        ip = mod_norm(ip - static_cast<int64_t>(q - 1) * g[d], q);
        ++d;
      }
      ++y[d];
      ip = mod_norm(static_cast<int64_t>(ip) + g[d], q);
    }
    dist[gi] = acc / static_cast<double>(size);
  }
  return dist;
}

std::vector<double> invert_transform(int n, int q, const std::vector<double>& powt,
                                     Exec exec) {
  const uint64_t size = powt.size();
  const int digits = (n - 1) * (n - 1);
  std::vector<std::complex<double>> f(powt.begin(), powt.end());

  // Twiddles for the inverse transform: W[k] = exp(-2 pi i k / q).
  std::vector<std::complex<double>> w(q);
  for (int k = 0; k < q; ++k) {
    double ang = -2.0 * std::numbers::pi * k / q;
    w[k] = {std::cos(ang), std::sin(ang)};
  }

  const bool par = exec == Exec::Parallel;
  uint64_t stride = 1;
  const uint64_t fibers = size / q;
  for (int d = 0; d < digits; ++d) {
#pragma omp parallel for schedule(static) if (par)
    for (int64_t fi = 0; fi < static_cast<int64_t>(fibers); ++fi) {
      const uint64_t low = static_cast<uint64_t>(fi) % stride;
      const uint64_t high = static_cast<uint64_t>(fi) / stride;
      const uint64_t base = high * stride * q + low;
      std::vector<std::complex<double>> in(q);
      for (int r = 0; r < q; ++r) in[r] = f[base + r * stride];
      for (int rp = 0; rp < q; ++rp) {
        std::complex<double> acc = 0;
        for (int r = 0; r < q; ++r) {
          acc += in[r] * w[static_cast<size_t>(rp) * r % q];
        }
        f[base + static_cast<uint64_t>(rp) * stride] = acc;
      }
    }
    stride *= q;
  }

  std::vector<double> dist(size);
#pragma omp parallel for schedule(static) if (par)
  for (int64_t i = 0; i < static_cast<int64_t>(size); ++i) {
    dist[i] = f[i].real() / static_cast<double>(size);
  }
  return dist;
}

}  // namespace

int64_t SpectralProfile::total_boxes() const {
  int64_t b = binom2(n);
  return b * b;
}

int64_t SpectralProfile::nonzero_boxes() const {
  return total_boxes() - counts[0];
}

SpectralProfile box_sum_profile(const GroupElement& y) {
  SpectralProfile p;
  p.n = y.n;
  p.q = y.q;
  p.counts.assign(y.q, 0);
  const int m = y.n - 1;
  std::vector<int32_t> prefix(static_cast<size_t>(m + 1) * (m + 1));
  profile_counts(y.coords, y.q, prefix, p.counts);
  return p;
}

std::vector<double> cosine_table(int q) {
  std::vector<double> c(q);
  for (int a = 0; a < q; ++a) c[a] = std::cos(2.0 * std::numbers::pi * a / q);
  return c;
}

double eigenvalue(const SpectralProfile& p) {
  return eigenvalue_from_counts(p.counts, cosine_table(p.q), p.total_boxes());
}

double Spectrum::min_value() const {
  return *std::min_element(values.begin(), values.end());
}

Spectrum enumerate_spectrum(int n, int q, uint64_t cap, Exec exec) {
  const uint64_t size = group_size_checked(n, q, cap);
  Spectrum s;
  s.n = n;
  s.q = q;
  s.values.resize(size);

  const int m = n - 1;
  const int64_t total = binom2(n) * binom2(n);
  const auto cosines = cosine_table(q);
  const bool par = exec == Exec::Parallel;

  constexpr uint64_t kChunk = uint64_t{1} << 12;
  const uint64_t nchunks = (size + kChunk - 1) / kChunk;
#pragma omp parallel for schedule(dynamic) if (par)
  for (int64_t ci = 0; ci < static_cast<int64_t>(nchunks); ++ci) {
    Grid coords(m, m);
    std::vector<int32_t> prefix(static_cast<size_t>(m + 1) * (m + 1));
    std::vector<int64_t> counts(q);
    const uint64_t lo = static_cast<uint64_t>(ci) * kChunk;
    const uint64_t hi = lo + kChunk < size ? lo + kChunk : size;
    for (uint64_t idx = lo; idx < hi; ++idx) {
      decode_digits(idx, q, coords);
      std::fill(counts.begin(), counts.end(), 0);
      profile_counts(coords, q, prefix, counts);
      s.values[idx] = eigenvalue_from_counts(counts, cosines, total);
    }
  }
  return s;
}

double l2_log_bound(const Spectrum& s, uint64_t t) {
  const uint64_t size = s.values.size();
  const double half_log = std::log(0.5);
  if (size <= 1) return -std::numeric_limits<double>::infinity();
  if (t == 0) return half_log + 0.5 * std::log(static_cast<double>(size - 1));

  // log-sum-exp over 2t log|lambda_y| for y != 0, skipping exact zeros.
  double peak = -std::numeric_limits<double>::infinity();
  for (uint64_t i = 1; i < size; ++i) {
    if (s.values[i] == 0.0) continue;
    peak = std::max(peak, 2.0 * static_cast<double>(t) * std::log(std::fabs(s.values[i])));
  }
  if (std::isinf(peak)) return -std::numeric_limits<double>::infinity();

  double sum = chunked_sum(size - 1, Exec::Parallel, [&](uint64_t i) {
    double v = s.values[i + 1];
    if (v == 0.0) return 0.0;
    return std::exp(2.0 * static_cast<double>(t) * std::log(std::fabs(v)) - peak);
  });
  return half_log + 0.5 * (peak + std::log(sum));
}

double l2_bound(const Spectrum& s, uint64_t t) { return std::exp(l2_log_bound(s, t)); }

std::vector<double> exact_distribution(int n, int q, uint64_t t, uint64_t cap,
                                       InversionMethod method, Exec exec) {
  group_size_checked(n, q, cap);
  return exact_distribution_from_spectrum(enumerate_spectrum(n, q, cap, exec), t,
                                          method, exec);
}

std::vector<double> exact_distribution_from_spectrum(const Spectrum& s, uint64_t t,
                                                     InversionMethod method,
                                                     Exec exec) {
  std::vector<double> powt = eigenvalue_powers(s, t, exec);
  if (method == InversionMethod::Auto) {
    method = s.values.size() <= 2048 ? InversionMethod::Direct
                                     : InversionMethod::Transform;
  }
  return method == InversionMethod::Direct ? invert_direct(s.n, s.q, powt, exec)
                                           : invert_transform(s.n, s.q, powt, exec);
}

double tv_to_uniform(const std::vector<double>& dist) {
  const double u = 1.0 / static_cast<double>(dist.size());
  double s = chunked_sum(dist.size(), Exec::Serial,
                         [&](uint64_t i) { return std::fabs(dist[i] - u); });
  return 0.5 * s;
}

double exact_tv(int n, int q, uint64_t t, uint64_t cap, Exec exec) {
  return tv_to_uniform(exact_distribution(n, q, t, cap, InversionMethod::Auto, exec));
}

DenseMatrix transition_matrix(int n, int q, uint64_t cap) {
  const uint64_t size = group_size_checked(n, q, cap);
  DenseMatrix P;
  P.dim = size;
  P.a.assign(size * size, 0.0);

  const uint64_t nmoves = move_count(n, q);
  std::vector<GroupElement> deltas;
  deltas.reserve(nmoves);
  for (uint64_t mi = 0; mi < nmoves; ++mi) {
    GroupElement d = zero_group_element(n, q);
    apply_move(d, move_from_index(mi, n, q));
    deltas.push_back(std::move(d));
  }

  const double mass = 1.0 / static_cast<double>(nmoves);
  for (uint64_t gi = 0; gi < size; ++gi) {
    GroupElement g = group_element_from_index(gi, n, q);
    for (const auto& d : deltas) {
      GroupElement h = g;
      add_into(h, d);
      P.at(gi, group_index(h)) += mass;
    }
  }
  return P;
}

std::vector<double> power_distribution(const DenseMatrix& P, uint64_t t) {
  std::vector<double> v(P.dim, 0.0);
  v[0] = 1.0;
  std::vector<double> next(P.dim);
  for (uint64_t s = 0; s < t; ++s) {
    for (uint64_t j = 0; j < P.dim; ++j) {
      double acc = 0;
      for (uint64_t i = 0; i < P.dim; ++i) acc += v[i] * P.at(i, j);
      next[j] = acc;
    }
    v.swap(next);
  }
  return v;
}

std::vector<double> dense_symmetric_eigenvalues(const DenseMatrix& m) {
  const auto dim = static_cast<Eigen::Index>(m.dim);
  Eigen::MatrixXd a(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      a(r, c) = m.at(static_cast<uint64_t>(r), static_cast<uint64_t>(c));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("dense eigensolver failed");
  }
  std::vector<double> ev(static_cast<size_t>(dim));
  for (Eigen::Index i = 0; i < dim; ++i) ev[static_cast<size_t>(i)] = solver.eigenvalues()[i];
  return ev;
}

std::vector<std::pair<double, uint64_t>> spectrum_multiplicities(const Spectrum& s,
                                                                 double tol) {
  std::vector<double> sorted = s.values;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<double, uint64_t>> out;
  for (double v : sorted) {
    if (!out.empty() && v - out.back().first <= tol) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

TheoremTimes theorem_times(int n, int q, double c) {
  if (n < 2 || q < 2 || c < 0) {
    throw std::invalid_argument("need n >= 2, q >= 2, c >= 0");
  }
  TheoremTimes t;
  t.n = n;
  t.q = q;
  t.c = c;
  const double n2 = static_cast<double>(n) * n;
  const double gap = 1.0 - std::cos(2.0 * std::numbers::pi / q);
  const double logn = std::log(static_cast<double>(n));
  const double logq = std::log(static_cast<double>(q));
  t.t_nq = n2 / (4.0 * gap) * logn;
  t.delta_nq = n2 / gap * std::log(std::log(16.0 * n)) * std::sqrt(logn) * logq;
  t.t_upper = t.t_nq + c * t.delta_nq;
  t.t_lower = t.t_nq - n2 / (4.0 * gap) * (c + 12.0) * logq;
  return t;
}

double min_upper_c(int n) { return 640.0 / std::log(std::log(16.0 * n)); }

}  // namespace dgw
