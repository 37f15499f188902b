// Serial-vs-OpenMP timing for the data-parallel kernels. Each kernel runs
// both execution policies on the same inputs; the serial path doubles as the
// reference the test suite compares against.

#include <chrono>
#include <cstdio>
#include <functional>

#include "dgwalk/spectral.hpp"
#include "dgwalk/verify.hpp"
#include "dgwalk/walk.hpp"
#include "dgwalk/wilson.hpp"

namespace {

double time_ms(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-34s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

}  // namespace

int main() {
  using dgw::Exec;
  std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

  {
    auto serial = time_ms([] { dgw::enumerate_spectrum(5, 2, dgw::kDefaultGroupCap, Exec::Serial); });
    auto par = time_ms([] { dgw::enumerate_spectrum(5, 2, dgw::kDefaultGroupCap, Exec::Parallel); });
    report("spectrum n=5 q=2 (65536 chars)", serial, par);
  }
  {
    auto serial = time_ms([] { dgw::enumerate_spectrum(4, 4, dgw::kDefaultGroupCap, Exec::Serial); });
    auto par = time_ms([] { dgw::enumerate_spectrum(4, 4, dgw::kDefaultGroupCap, Exec::Parallel); });
    report("spectrum n=4 q=4 (262144 chars)", serial, par);
  }
  {
    auto serial = time_ms([] {
      dgw::exact_distribution(5, 2, 40, dgw::kDefaultGroupCap,
                              dgw::InversionMethod::Transform, Exec::Serial);
    });
    auto par = time_ms([] {
      dgw::exact_distribution(5, 2, 40, dgw::kDefaultGroupCap,
                              dgw::InversionMethod::Transform, Exec::Parallel);
    });
    report("inversion n=5 q=2 t=40", serial, par);
  }
  {
    auto serial = time_ms([] { dgw::lemma_3_2_exhaustive(19, 2, Exec::Serial); });
    auto par = time_ms([] { dgw::lemma_3_2_exhaustive(19, 2, Exec::Parallel); });
    report("interval sweep n=19 q=2 (2^18 u)", serial, par);
  }
  {
    dgw::WalkConfig cfg;
    cfg.n = 50;
    cfg.q = 2;
    cfg.seed = 7;
    auto serial = time_ms([&] { dgw::mc_tv_lower_bound(cfg, 170, 4000, Exec::Serial); });
    auto par = time_ms([&] { dgw::mc_tv_lower_bound(cfg, 170, 4000, Exec::Parallel); });
    report("MC walks n=50 q=2 t=170 x4000", serial, par);
  }
  return 0;
}
