// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criteria are property- and oracle-based with pinned tolerances.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "powermean/classify.hpp"
#include "powermean/functionals.hpp"
#include "powermean/means.hpp"
#include "powermean/search.hpp"
#include "powermean/serialize.hpp"

using namespace powermean;

namespace {

struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  double uniform() { return static_cast<double>(g() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  int uniform_int(int a, int b) {
    int k = static_cast<int>(uniform() * (b - a + 1));
    return a + (k > b - a ? b - a : k);
  }
};

double now() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

int g_failures = 0;

void report(int index, const std::string& name, bool pass,
            const std::string& note) {
  std::printf("[%s] %2d. %s%s%s\n", pass ? "PASS" : "FAIL", index,
              name.c_str(), note.empty() ? "" : " -- ", note.c_str());
  if (!pass) ++g_failures;
}

WeightedSample random_sample(Rng& rng) {
  const int n = rng.uniform_int(1, 8);
  std::vector<double> values(n), weights(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    values[i] = rng.uniform(1e-3, 10.0);
    if (values[i] <= 1e-3) values[i] = 1e-3 + 1e-9;
    weights[i] = -std::log(1.0 - rng.uniform());
    sum += weights[i];
  }
  for (double& w : weights) w /= sum;
  return WeightedSample(std::move(values), std::move(weights));
}

ExponentPair sample_rhs_holds(Rng& rng) {
  for (;;) {
    const double r = rng.uniform(0.0, 2.0);
    const double s = rng.uniform(-1.0, 2.0);
    if (r > s && classify_rhs(ExponentPair(r, s)).verdict == Verdict::HOLDS)
      return ExponentPair(r, s);
  }
}

ExponentPair sample_lhs_holds_strip(Rng& rng) {
  for (;;) {
    const double r = rng.uniform(1.0, 3.5);
    const double s = rng.uniform(-0.5, 1.0);
    if (r > s && classify_lhs(ExponentPair(r, s)).verdict == Verdict::HOLDS)
      return ExponentPair(r, s);
  }
}

ExponentPair sample_lhs_holds_any(Rng& rng) {
  for (;;) {
    const double r = rng.uniform(1.0, 3.5);
    const double s = rng.uniform(-1.2, 1.0);
    if (r > s && classify_lhs(ExponentPair(r, s)).verdict == Verdict::HOLDS)
      return ExponentPair(r, s);
  }
}

void criterion_region_soundness(int index, Side side) {
  Rng rng(side == Side::RHS ? 9001 : 9002);
  const double t0 = now();
  long violations = 0;
  for (int p = 0; p < 500; ++p) {
    const ExponentPair e =
        (side == Side::RHS) ? sample_rhs_holds(rng) : sample_lhs_holds_strip(rng);
    for (int k = 0; k < 200; ++k) {
      const BoundCheck bc = cf_check(random_sample(rng), e);
      const double residual =
          (side == Side::RHS) ? bc.rhs_residual : bc.lhs_residual;
      if (violates(residual, bc.gap, 1e-9)) ++violations;
    }
  }
  const double dt = now() - t0;
  char note[128];
  std::snprintf(note, sizeof(note), "%ld violations in 100000 checks, %.2f s",
                violations, dt);
  report(index,
         side == Side::RHS ? "theorem-region-soundness-rhs"
                           : "theorem-region-soundness-lhs",
         violations == 0 && dt < 10.0, note);
}

void criterion_falsification(int index) {
  struct Panel {
    double r, s;
    Side side;
  };
  const Panel panel[] = {
      {2.5, 0.5, Side::RHS},   {2.2, -0.9, Side::RHS},
      {-0.1, -0.5, Side::RHS}, {1.5, -1.2, Side::RHS},
      {0.9, 0.5, Side::LHS},   {3.5, -0.4, Side::LHS},
      {2.5, 1.4, Side::LHS},
  };
  bool ok = true;
  double worst = 0.0;
  for (const Panel& p : panel) {
    const ExponentPair e(p.r, p.s);
    const Verdict v = (p.side == Side::RHS) ? classify_rhs(e).verdict
                                            : classify_lhs(e).verdict;
    if (v != Verdict::FAILS) {
      ok = false;
      continue;
    }
    const double t0 = now();
    SearchConfig config;
    config.budget = 100000;
    const auto cert = search_counterexample(e, p.side, config);
    const double dt = now() - t0;
    worst = std::max(worst, dt);
    if (!cert || !verify_certificate(*cert) || dt >= 1.0) ok = false;
  }
  char note[96];
  std::snprintf(note, sizeof(note), "7 pairs, slowest %.3f s", worst);
  report(index, "falsification-completeness", ok, note);
}

void criterion_c_grid(int index) {
  const double t0 = now();
  const CGridScan scan = c_grid_scan(1e-3);
  const double dt = now() - t0;
  char note[160];
  std::snprintf(note, sizeof(note),
                "max %.3e at (r,s)=(%.3f,%.3f) over %ld cells, %.2f s",
                scan.max_value, scan.worst_r, scan.worst_s, scan.cells, dt);
  report(index, "c-polynomial-grid-nonpositive",
         scan.max_value <= 1e-12 && dt < 30.0, note);
}

void criterion_exact_anchors(int index) {
  const bool a = cf_necessary_bound(1.0) == 1.0;
  const double b4 = cf_necessary_bound(1e6);
  const bool b = b4 >= 3.997 && b4 <= 4.0;
  const bool c = std::abs(c0(3.0, -0.5)) <= 1e-12;
  char note[128];
  std::snprintf(note, sizeof(note), "bound(1)=%s, bound(1e6)=%.6f, c0=%.2e",
                a ? "1" : "off", b4, c0(3.0, -0.5));
  report(index, "exact-anchors", a && b && c, note);
}

void criterion_derivative_identity(int index) {
  Rng rng(9006);
  long fails = 0;
  for (int t = 0; t < 10000; ++t) {
    double r = 0.0, s = 0.0;
    do {
      r = rng.uniform(-3.0, 3.0);
      s = rng.uniform(-3.0, 3.0);
    } while (std::abs(r) < 0.05 || std::abs(s) < 0.05 || r - s < 0.05);
    const ExponentPair e(r, s);
    const double x = std::pow(10.0, rng.uniform(-1.0, 1.0));
    const double q = rng.uniform(0.0, 0.95);
    const double h = 6e-6 * x;
    const double diff =
        (f1(x + h, q, e) - f1(x - h, q, e)) / (2.0 * h * (1.0 - q));
    const double want = f2(x, q, e);
    if (!(std::abs(want - diff) <= 1e-6 * (1.0 + std::abs(want)))) ++fails;
  }
  char note[64];
  std::snprintf(note, sizeof(note), "%ld mismatches in 10000", fails);
  report(index, "derivative-identity", fails == 0, note);
}

void criterion_oracle_equivalence(int index) {
  Rng rng(9007);
  bool ok = true;
  double worst_rhs = 0.0, worst_lhs = 0.0;
  for (int t = 0; t < 50; ++t) {
    const ExponentPair e = sample_rhs_holds(rng);
    const GridExtremum ext = brute_force_extremum(e, Side::RHS, 512);
    worst_rhs = std::max(worst_rhs, ext.f);
    if (!(ext.f <= 1e-9)) ok = false;
  }
  for (int t = 0; t < 50; ++t) {
    const ExponentPair e = sample_lhs_holds_any(rng);
    const GridExtremum ext = brute_force_extremum(e, Side::LHS, 512);
    worst_lhs = std::min(worst_lhs, ext.f);
    if (!(ext.f >= -1e-9)) ok = false;
  }
  char note[96];
  std::snprintf(note, sizeof(note), "max RHS F %.2e, min LHS F %.2e",
                worst_rhs, worst_lhs);
  report(index, "oracle-equivalence", ok, note);
}

void criterion_equality_characterization(int index) {
  Rng rng(9008);
  bool ok = true;
  for (int t = 0; t < 100; ++t) {
    const int n = rng.uniform_int(1, 8);
    const double c = rng.uniform(1e-3, 10.0);
    std::vector<double> w(n);
    double sum = 0.0;
    for (double& wi : w) sum += (wi = -std::log(1.0 - rng.uniform()));
    for (double& wi : w) wi /= sum;
    double r = 0.0, s = 0.0;
    do {
      r = rng.uniform(-3.0, 3.0);
      s = rng.uniform(-3.0, 3.0);
    } while (!(r > s));
    const BoundCheck bc = cf_check(
        WeightedSample(std::vector<double>(n, c), std::move(w)),
        ExponentPair(r, s));
    if (!(std::abs(bc.gap) <= 1e-12 && std::abs(bc.lower) <= 1e-12 &&
          std::abs(bc.upper) <= 1e-12))
      ok = false;
  }
  report(index, "equality-characterization", ok, "100 all-equal samples");
}

void criterion_determinism(int index) {
  const RegionMapSpec spec{-1.0, 4.0, -5.0, 4.0, 201};
  const std::string m1 = region_map_csv(spec, region_map(spec));
  const std::string m2 = region_map_csv(spec, region_map(spec));
  SearchConfig config;
  config.seed = 12345;
  const auto c1 = search_counterexample(ExponentPair(2.5, 0.5), Side::RHS, config);
  const auto c2 = search_counterexample(ExponentPair(2.5, 0.5), Side::RHS, config);
  const auto n1 = search_counterexample(ExponentPair(1.0, 0.0), Side::RHS, config);
  const auto n2 = search_counterexample(ExponentPair(1.0, 0.0), Side::RHS, config);
  const bool map_ok = (m1 == m2);
  const bool cert_ok = c1.has_value() && c2.has_value() &&
                       certificate_json(*c1) == certificate_json(*c2);
  const bool none_ok = !n1 && !n2;
  char note[96];
  std::snprintf(note, sizeof(note), "map %s, certificate %s, none %s",
                map_ok ? "ok" : "differs", cert_ok ? "ok" : "differs",
                none_ok ? "ok" : "differs");
  report(index, "byte-determinism", map_ok && cert_ok && none_ok, note);
}

void criterion_alpha_constant(int index) {
  const double a = alpha0(5.0 / 6.0, 0.2, -1.0);
  char note[64];
  std::snprintf(note, sizeof(note), "alpha0 = %.9f", a);
  report(index, "alpha-constant-admissible", a >= 0.0889 && a < 0.089, note);
}

}  // namespace

int main() {
  criterion_region_soundness(1, Side::RHS);
  criterion_region_soundness(2, Side::LHS);
  criterion_falsification(3);
  criterion_c_grid(4);
  criterion_exact_anchors(5);
  criterion_derivative_identity(6);
  criterion_oracle_equivalence(7);
  criterion_equality_characterization(8);
  criterion_determinism(9);
  criterion_alpha_constant(10);
  std::printf("%s (%d of 10 criteria failed)\n",
              g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              g_failures);
  return g_failures;
}
