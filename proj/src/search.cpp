#include "powermean/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "powermean/detail/means_impl.hpp"
#include "powermean/functionals.hpp"

namespace powermean {

namespace {

constexpr double kXLo = 1e-8;
constexpr double kXHi = 1e8;
constexpr double kQFloor = 1e-12;
constexpr double kQCeil = 1.0 - 1e-12;

// q values crossed with the x grid; the extremes matter because boundary
// weights carry the violating configurations.
const std::vector<double>& q_ladder() {
  static const std::vector<double> ladder = [] {
    std::vector<double> q{1e-8, 1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 0.01, 0.02,
                          0.05};
    for (int i = 2; i <= 18; ++i) q.push_back(0.05 * i);  // 0.10 .. 0.90
    for (double t : {0.95, 0.98, 0.99, 1.0 - 1e-3, 1.0 - 1e-4, 1.0 - 1e-5,
                     1.0 - 1e-6, 1.0 - 1e-7, 1.0 - 1e-8})
      q.push_back(t);
    return q;
  }();
  return ladder;
}

struct Eval {
  double obj;       // residual / max(1, |gap|)
  double residual;  // raw side residual
};

Eval eval_point(double x, double q, const ExponentPair& e, Side side) {
  const double vals[2] = {1.0, x};
  const double wts[2] = {1.0 - q, q};
  const double gap = detail::power_mean_core(vals, wts, 2, e.r) -
                     detail::power_mean_core(vals, wts, 2, e.s);
  const double half_sigma = 0.5 * (e.r - e.s) * detail::variance_core(vals, wts, 2);
  double residual;
  if (side == Side::RHS) {
    residual = half_sigma / std::min(1.0, x) - gap;
  } else {
    residual = gap - half_sigma / std::max(1.0, x);
  }
  return {residual / std::max(1.0, std::abs(gap)), residual};
}

struct BestPoint {
  double obj = std::numeric_limits<double>::infinity();
  double x = 1.0;
  double q = 0.5;
  Provenance prov = Provenance::Grid;
};

double logit(double q) { return std::log(q / (1.0 - q)); }
double sigmoid(double v) { return 1.0 / (1.0 + std::exp(-v)); }

// uniform in [0,1) from raw 64-bit output; stable across standard libraries
double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Grid: return "grid";
    case Provenance::Refine: return "refine";
    default: return "limit-seed";
  }
}

std::optional<Certificate> search_counterexample(const ExponentPair& exps,
                                                 Side side,
                                                 const SearchConfig& config) {
  if (config.budget < 1) throw std::invalid_argument("budget must be >= 1");
  if (!(config.tolerance > 0.0))
    throw std::invalid_argument("tolerance must be > 0");

  const std::vector<double>& qs = q_ladder();
  const long nq = static_cast<long>(qs.size());
  const long nx =
      std::clamp(config.budget / (2 * nq), static_cast<long>(1), 4096L);
  std::vector<double> xs(nx);
  for (long i = 0; i < nx; ++i) {
    const double t = (nx == 1) ? 0.5
                               : static_cast<double>(i) /
                                     static_cast<double>(nx - 1);
    xs[i] = std::pow(10.0, -8.0 + 16.0 * t);
  }

  long used = 0;
  BestPoint best;
  auto consider = [&](double x, double q, Provenance prov) {
    const Eval ev = eval_point(x, q, exps, side);
    ++used;
    if (ev.obj < best.obj) best = BestPoint{ev.obj, x, q, prov};
  };

  // grid phase, deterministic cell order regardless of scheduling
  const long grid_count = std::min(nx * nq, config.budget);
  {
    std::vector<double> objs(grid_count);
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < grid_count; ++idx)
      objs[idx] = eval_point(xs[idx / nq], qs[idx % nq], exps, side).obj;
    used += grid_count;
    for (long idx = 0; idx < grid_count; ++idx) {
      if (objs[idx] < best.obj)
        best = BestPoint{objs[idx], xs[idx / nq], qs[idx % nq],
                         Provenance::Grid};
    }
  }

  // limit-functional seeds: a violating sign at a boundary weight marks the
  // x cell worth probing at q near that boundary
  for (long i = 0; i < nx && used + 2 < config.budget; ++i) {
    const double x = xs[i];
    if (x == 1.0) continue;
    if (side == Side::RHS && x > 1.0) {
      ++used;
      if (limit_q0(x, exps) > 0.0) consider(x, 1e-6, Provenance::LimitSeed);
      ++used;
      if (limit_q1(x, exps) > 0.0)
        consider(x, 1.0 - 1e-6, Provenance::LimitSeed);
    } else if (side == Side::LHS && x < 1.0) {
      ++used;
      if (limit_q0(x, exps) < 0.0) consider(x, 1e-6, Provenance::LimitSeed);
      ++used;
      if (limit_q1(x, exps) < 0.0)
        consider(x, 1.0 - 1e-6, Provenance::LimitSeed);
    }
  }
  if (side == Side::LHS && exps.s < 0.0 && exps.r >= 1.0) {
    // x -> 0 profile: negative values mark weights violating in the limit
    for (double y : qs) {
      if (used + 2 > config.budget) break;
      ++used;
      if (lhs_zero_profile(y, exps) < 0.0)
        consider(kXLo, std::clamp(1.0 - y, kQFloor, kQCeil),
                 Provenance::LimitSeed);
    }
  }

  // seeded random probes
  {
    std::mt19937_64 rng(config.seed);
    const long probes = std::min<long>(64, config.budget - used);
    for (long k = 0; k < probes; ++k) {
      const double x =
          std::pow(10.0, -8.0 + 16.0 * next_uniform(rng));
      const double q = sigmoid(-16.0 + 32.0 * next_uniform(rng));
      consider(x, std::clamp(q, kQFloor, kQCeil), Provenance::Grid);
    }
  }

  // derivative-free coordinate descent from the best cell, geometric step
  // shrinkage: 20 rounds, shrink x0.5
  if (std::isfinite(best.obj)) {
    double u = std::log(best.x);
    double v = logit(std::clamp(best.q, kQFloor, kQCeil));
    double du = (std::log(kXHi) - std::log(kXLo)) /
                static_cast<double>(std::max(nx - 1, 1L));
    double dv = 1.0;
    const double ulo = std::log(kXLo), uhi = std::log(kXHi);
    for (int round = 0; round < 20 && used + 4 <= config.budget; ++round) {
      double bu = u, bv = v, bobj = best.obj;
      const double cand[4][2] = {
          {u - du, v}, {u + du, v}, {u, v - dv}, {u, v + dv}};
      for (const auto& c : cand) {
        const double cx = std::exp(std::clamp(c[0], ulo, uhi));
        const double cq = std::clamp(sigmoid(c[1]), kQFloor, kQCeil);
        const Eval ev = eval_point(cx, cq, exps, side);
        ++used;
        if (ev.obj < bobj) {
          bobj = ev.obj;
          bu = c[0];
          bv = c[1];
          best = BestPoint{ev.obj, cx, cq, Provenance::Refine};
        }
      }
      u = bu;
      v = bv;
      du *= 0.5;
      dv *= 0.5;
    }
  }

  if (!(best.obj < -config.tolerance)) return std::nullopt;

  // store exactly what cf_check reproduces on the certificate sample
  WeightedSample sample({1.0, best.x}, {1.0 - best.q, best.q});
  const BoundCheck bc = cf_check(sample, exps);
  const double residual =
      (side == Side::RHS) ? bc.rhs_residual : bc.lhs_residual;
  if (!violates(residual, bc.gap, config.tolerance)) return std::nullopt;
  return Certificate{side, exps, std::move(sample), residual, best.prov};
}

namespace {

double grid_f(const ExponentPair& e, Side side, int n, long idx) {
  const long i = idx / n;  // x index
  const long j = idx % n;  // q index
  const double t = static_cast<double>(i) / static_cast<double>(n - 1);
  const double x =
      (side == Side::RHS) ? std::pow(10.0, 8.0 * t) : std::pow(10.0, -8.0 + 8.0 * t);
  const double q =
      static_cast<double>(j + 1) / static_cast<double>(n + 1);
  const double vals[2] = {1.0, x};
  const double wts[2] = {1.0 - q, q};
  return detail::power_mean_core(vals, wts, 2, e.r) -
         detail::power_mean_core(vals, wts, 2, e.s) -
         0.5 * (e.r - e.s) * detail::variance_core(vals, wts, 2);
}

GridExtremum pick_extremum(Side side, int n, const std::vector<double>& fs) {
  long at = 0;
  for (long idx = 1; idx < static_cast<long>(fs.size()); ++idx) {
    if (side == Side::RHS ? fs[idx] > fs[at] : fs[idx] < fs[at]) at = idx;
  }
  const long i = at / n, j = at % n;
  const double t = static_cast<double>(i) / static_cast<double>(n - 1);
  const double x =
      (side == Side::RHS) ? std::pow(10.0, 8.0 * t) : std::pow(10.0, -8.0 + 8.0 * t);
  return GridExtremum{x, static_cast<double>(j + 1) / static_cast<double>(n + 1),
                      fs[at]};
}

}  // namespace

GridExtremum brute_force_extremum(const ExponentPair& exps, Side side,
                                  int grid_n) {
  if (grid_n < 8) throw std::invalid_argument("grid_n must be >= 8");
  const long total = static_cast<long>(grid_n) * grid_n;
  std::vector<double> fs(total);
#pragma omp parallel for schedule(static)
  for (long idx = 0; idx < total; ++idx)
    fs[idx] = grid_f(exps, side, grid_n, idx);
  return pick_extremum(side, grid_n, fs);
}

GridExtremum brute_force_extremum_serial(const ExponentPair& exps, Side side,
                                         int grid_n) {
  if (grid_n < 8) throw std::invalid_argument("grid_n must be >= 8");
  const long total = static_cast<long>(grid_n) * grid_n;
  std::vector<double> fs(total);
  for (long idx = 0; idx < total; ++idx)
    fs[idx] = grid_f(exps, side, grid_n, idx);
  return pick_extremum(side, grid_n, fs);
}

bool verify_certificate(const Certificate& cert, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");
  const std::size_t n = cert.sample.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cert.sample.values()[a] < cert.sample.values()[b];
  });
  std::vector<long double> v(n), w(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = cert.sample.values()[order[i]];
    w[i] = cert.sample.weights()[order[i]];
  }
  const long double r = cert.exps.r, s = cert.exps.s;
  const long double gap = detail::power_mean_core(v.data(), w.data(), n, r) -
                          detail::power_mean_core(v.data(), w.data(), n, s);
  const long double half_sigma =
      0.5L * (r - s) * detail::variance_core(v.data(), w.data(), n);
  long double residual;
  if (cert.side == Side::RHS) {
    if (!(v.front() > 0.0L)) return false;  // upper bound undefined
    residual = half_sigma / v.front() - gap;
  } else {
    if (!(v.back() > 0.0L)) return false;  // all-zero sample
    residual = gap - half_sigma / v.back();
  }
  const long double scale = std::max<long double>(1.0L, std::abs(gap));
  return residual < -(static_cast<long double>(tol) / 10.0L) * scale;
}

}  // namespace powermean
