#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dgwalk/rng.hpp"
#include "dgwalk/spectral.hpp"
#include "dgwalk/verify.hpp"
#include "oracles.hpp"

using namespace dgw;

namespace {

GroupElement element(int n, int q, std::initializer_list<int32_t> coords) {
  GroupElement y = zero_group_element(n, q);
  int i = 0;
  for (int32_t v : coords) y.coords.v[i++] = v;
  return y;
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("box sum profiles of the tiny examples") {
  CHECK(box_sum_profile(element(3, 2, {0, 0, 0, 0})).counts ==
        std::vector<int64_t>{9, 0});
  CHECK(box_sum_profile(element(3, 2, {1, 0, 0, 0})).counts ==
        std::vector<int64_t>{5, 4});
  CHECK(box_sum_profile(element(3, 2, {1, 0, 0, 1})).counts ==
        std::vector<int64_t>{3, 6});
}

TEST_CASE("profile matches the naive oracle on random elements") {
  Rng rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform_index(6));
    const int q = 2 + static_cast<int>(rng.uniform_index(6));
    GroupElement y = zero_group_element(n, q);
    for (auto& c : y.coords.v) c = static_cast<int32_t>(rng.uniform_index(q));
    SpectralProfile p = box_sum_profile(y);
    REQUIRE(p.counts == oracle::box_profile(y));
    int64_t total = 0;
    for (int64_t c : p.counts) total += c;
    REQUIRE(total == p.total_boxes());
  }
}

TEST_CASE("eigenvalues of the tiny examples") {
  CHECK(eigenvalue(box_sum_profile(element(3, 2, {0, 0, 0, 0}))) == doctest::Approx(1.0));
  CHECK(eigenvalue(box_sum_profile(element(3, 2, {1, 0, 0, 0}))) ==
        doctest::Approx(1.0 / 9).epsilon(1e-14));
  CHECK(eigenvalue(box_sum_profile(element(3, 2, {1, 0, 0, 1}))) ==
        doctest::Approx(-1.0 / 3).epsilon(1e-14));
}

TEST_CASE("n=2 q=2 spectrum is {1, -1}") {
  Spectrum s = enumerate_spectrum(2, 2);
  REQUIRE(s.values.size() == 2);
  CHECK(s.values[0] == doctest::Approx(1.0));
  CHECK(s.values[1] == doctest::Approx(-1.0));
}

TEST_CASE("(3,2) spectrum: size, trace, range, bound") {
  Spectrum s = enumerate_spectrum(3, 2);
  REQUIRE(s.values.size() == 16);
  double trace = 0;
  for (double v : s.values) {
    trace += v;
    CHECK(v >= -1.0 - 1e-12);
    CHECK(v <= 1.0 + 1e-12);
  }
  CHECK(std::fabs(trace) < 1e-12);  // no holding mass
  CHECK(s.values[0] == doctest::Approx(1.0));
  CHECK(s.min_value() >= -28.0 / 29 - 1e-12);

  auto mult = spectrum_multiplicities(s);
  REQUIRE(mult.size() == 3);
  CHECK(mult[0].first == doctest::Approx(-1.0 / 3));
  CHECK(mult[0].second == 6);
  CHECK(mult[1].first == doctest::Approx(1.0 / 9));
  CHECK(mult[1].second == 9);
  CHECK(mult[2].second == 1);
}

TEST_CASE("serial and parallel enumeration agree bitwise") {
  Spectrum a = enumerate_spectrum(4, 3, kDefaultGroupCap, Exec::Serial);
  Spectrum b = enumerate_spectrum(4, 3, kDefaultGroupCap, Exec::Parallel);
  REQUIRE(a.values == b.values);
}

TEST_CASE("enumeration matches the composed per-element path") {
  Rng rng(31);
  Spectrum s = enumerate_spectrum(3, 5);
  for (int trial = 0; trial < 100; ++trial) {
    const uint64_t idx = rng.uniform_index(s.values.size());
    GroupElement y = group_element_from_index(idx, 3, 5);
    REQUIRE(s.values[idx] == eigenvalue(box_sum_profile(y)));
  }
}

TEST_CASE("formula spectrum equals the dense oracle") {
  for (auto [n, q] : {std::pair{3, 2}, std::pair{3, 3}}) {
    Spectrum s = enumerate_spectrum(n, q);
    auto oracle_vals = dense_symmetric_eigenvalues(transition_matrix(n, q));
    CHECK(multisets_match(s.values, oracle_vals, 1e-10));
  }
}

TEST_CASE("a flipped cosine is caught by the oracle comparison") {
  Spectrum s = enumerate_spectrum(3, 2);
  auto oracle_vals = dense_symmetric_eigenvalues(transition_matrix(3, 2));
  // Recompute one eigenvalue with cos(pi) negated: (5 + 4)/9 instead of 1/9.
  Spectrum mutant = s;
  GroupElement y = element(3, 2, {1, 0, 0, 0});
  SpectralProfile p = box_sum_profile(y);
  mutant.values[group_index(y)] =
      (static_cast<double>(p.counts[0]) - p.counts[1] * std::cos(std::numbers::pi)) / 9.0;
  CHECK(multisets_match(s.values, oracle_vals, 1e-10));
  CHECK_FALSE(multisets_match(mutant.values, oracle_vals, 1e-10));
}

TEST_CASE("l2 bound starts at half the root of |G|-1 and dies off") {
  Spectrum s = enumerate_spectrum(3, 2);
  CHECK(l2_bound(s, 0) == doctest::Approx(0.5 * std::sqrt(15.0)).epsilon(1e-12));
  double prev = l2_bound(s, 0);
  for (uint64_t t = 1; t <= 50; ++t) {
    double cur = l2_bound(s, t);
    CHECK(cur <= prev + 1e-15);
    prev = cur;
  }
  CHECK(prev < 1e-20);
  // Log-space survives times that underflow any double.
  CHECK(l2_log_bound(s, 100000) < -100000.0);
  CHECK(std::isfinite(l2_log_bound(s, 100000)));
}

TEST_CASE("l2 bound dominates the exact distance") {
  Spectrum s = enumerate_spectrum(3, 2);
  for (uint64_t t = 0; t <= 50; ++t) {
    double d = tv_to_uniform(exact_distribution_from_spectrum(s, t));
    REQUIRE(d <= l2_bound(s, t) + 1e-12);
  }
}

TEST_CASE("distribution at t=0 is the point mass") {
  auto dist = exact_distribution(3, 2, 0);
  CHECK(dist[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (size_t g = 1; g < dist.size(); ++g) {
    CHECK(std::fabs(dist[g]) < 1e-12);
  }
}

TEST_CASE("distribution at t=1 is uniform on the nine move images") {
  auto dist = exact_distribution(3, 2, 1);
  int ninth = 0, zero = 0;
  for (double p : dist) {
    if (std::fabs(p - 1.0 / 9) < 1e-12) ++ninth;
    if (std::fabs(p) < 1e-12) ++zero;
  }
  CHECK(ninth == 9);
  CHECK(zero == 7);
}

TEST_CASE("inversion equals the matrix power oracle") {
  DenseMatrix P = transition_matrix(3, 2);
  for (uint64_t t : {2ull, 5ull, 17ull}) {
    auto inv = exact_distribution(3, 2, t);
    auto pow = power_distribution(P, t);
    for (size_t g = 0; g < inv.size(); ++g) {
      REQUIRE(std::fabs(inv[g] - pow[g]) < 1e-10);
    }
  }
}

TEST_CASE("direct and transform inversion agree") {
  for (auto [n, q] : {std::pair{3, 3}, std::pair{4, 2}}) {
    for (uint64_t t : {0ull, 3ull, 20ull}) {
      auto a = exact_distribution(n, q, t, kDefaultGroupCap, InversionMethod::Direct);
      auto b = exact_distribution(n, q, t, kDefaultGroupCap, InversionMethod::Transform);
      double sum = 0;
      for (size_t g = 0; g < a.size(); ++g) {
        REQUIRE(std::fabs(a[g] - b[g]) < 1e-10);
        REQUIRE(a[g] >= -1e-12);
        sum += a[g];
      }
      REQUIRE(sum == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("exact tv: start value, monotone decay, oracle agreement") {
  Spectrum s = enumerate_spectrum(3, 2);
  CHECK(tv_to_uniform(exact_distribution_from_spectrum(s, 0)) ==
        doctest::Approx(1.0 - 1.0 / 16).epsilon(1e-12));
  double prev = 1.0;
  for (uint64_t t = 0; t <= 100; ++t) {
    double d = tv_to_uniform(exact_distribution_from_spectrum(s, t));
    REQUIRE(d <= prev + 1e-12);
    prev = d;
  }
  DenseMatrix P = transition_matrix(3, 2);
  auto pow50 = power_distribution(P, 50);
  CHECK(std::fabs(exact_tv(3, 2, 50) - tv_to_uniform(pow50)) < 1e-10);
}

TEST_CASE("transition matrix of the n=2 q=3 cycle") {
  DenseMatrix P = transition_matrix(2, 3);
  REQUIRE(P.dim == 3);
  for (uint64_t g = 0; g < 3; ++g) {
    CHECK(P.at(g, g) == 0.0);
    CHECK(P.at(g, (g + 1) % 3) == doctest::Approx(0.5));
    CHECK(P.at(g, (g + 2) % 3) == doctest::Approx(0.5));
  }
}

TEST_CASE("transition matrix rows are stochastic and symmetric") {
  for (auto [n, q] : {std::pair{3, 2}, std::pair{3, 3}}) {
    DenseMatrix P = transition_matrix(n, q);
    for (uint64_t r = 0; r < P.dim; ++r) {
      double sum = 0;
      for (uint64_t c = 0; c < P.dim; ++c) {
        sum += P.at(r, c);
        REQUIRE(P.at(r, c) == P.at(c, r));
      }
      REQUIRE(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("caps throw with the required size in the message") {
  CHECK_THROWS_AS(enumerate_spectrum(6, 2), CapExceeded);
  try {
    enumerate_spectrum(6, 2);
  } catch (const CapExceeded& e) {
    CHECK(e.required_cap == (uint64_t{1} << 25));
    CHECK(std::string(e.what()).find("33554432") != std::string::npos);
  }
}

TEST_CASE("time constants") {
  TheoremTimes t = theorem_times(4, 2, 0);
  CHECK(t.t_nq == doctest::Approx(2.772588722239781).epsilon(1e-14));
  CHECK(t.t_upper == doctest::Approx(t.t_nq));
  // q=2 collapses the gap to 2: t_nq = n^2/8 log n.
  for (int n : {2, 5, 11, 40}) {
    CHECK(theorem_times(n, 2, 1.0).t_nq ==
          doctest::Approx(n * n / 8.0 * std::log(n)).epsilon(1e-13));
  }
  Rng rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform_index(60));
    const int q = 2 + static_cast<int>(rng.uniform_index(60));
    const double c = static_cast<double>(rng.uniform_index(1000)) / 100.0;
    TheoremTimes tt = theorem_times(n, q, c);
    REQUIRE(tt.t_lower <= tt.t_nq);
    REQUIRE(tt.t_nq <= tt.t_upper);
    REQUIRE(tt.delta_nq > 0);
  }
}

}  // TEST_SUITE
