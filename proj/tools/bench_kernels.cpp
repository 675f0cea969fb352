// Timing harness for the grid kernels: OpenMP drivers against the serial
// reference implementations, with an equality check on the outputs.

#include <chrono>
#include <cstring>
#include <iostream>

#include "powermean/classify.hpp"
#include "powermean/functionals.hpp"
#include "powermean/search.hpp"
#include "powermean/serialize.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <class F>
double time_call(F&& fn) {
  const double t0 = now_seconds();
  fn();
  return now_seconds() - t0;
}

void report(const char* name, double serial_s, double parallel_s, bool equal) {
  std::cout << name << ": serial " << serial_s * 1e3 << " ms, parallel "
            << parallel_s * 1e3 << " ms, speedup "
            << (parallel_s > 0 ? serial_s / parallel_s : 0.0)
            << (equal ? "" : "  [OUTPUT MISMATCH]") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = (argc > 1 && std::strcmp(argv[1], "--quick") == 0);
#ifdef _OPENMP
  std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "openmp: not enabled\n";
#endif
  bool all_equal = true;

  {
    const powermean::RegionMapSpec spec{-1.0, 4.0, -5.0, 4.0,
                                        quick ? 51 : 401};
    std::vector<powermean::RegionCell> a, b;
    const double ts = time_call([&] { a = powermean::region_map_serial(spec); });
    const double tp = time_call([&] { b = powermean::region_map(spec); });
    const bool equal = powermean::region_map_csv(spec, a) ==
                       powermean::region_map_csv(spec, b);
    all_equal = all_equal && equal;
    report("region-map", ts, tp, equal);
  }
  {
    const powermean::ExponentPair exps(2.5, 0.5);
    const int n = quick ? 128 : 1024;
    powermean::GridExtremum a{}, b{};
    const double ts = time_call([&] {
      a = powermean::brute_force_extremum_serial(exps, powermean::Side::RHS, n);
    });
    const double tp = time_call([&] {
      b = powermean::brute_force_extremum(exps, powermean::Side::RHS, n);
    });
    const bool equal = a.x == b.x && a.q == b.q && a.f == b.f;
    all_equal = all_equal && equal;
    report("brute-force-extremum", ts, tp, equal);
  }
  {
    const double step = quick ? 5e-3 : 5e-4;
    powermean::CGridScan a{}, b{};
    const double ts = time_call([&] { a = powermean::c_grid_scan_serial(step); });
    const double tp = time_call([&] { b = powermean::c_grid_scan(step); });
    const bool equal = a.max_value == b.max_value && a.worst_r == b.worst_r &&
                       a.worst_s == b.worst_s && a.cells == b.cells;
    all_equal = all_equal && equal;
    report("c-poly-grid-scan", ts, tp, equal);
  }
  return all_equal ? 0 : 1;
}
