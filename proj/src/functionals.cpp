#include "powermean/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace powermean {

namespace {

// (x^t - 1)/t with the ln x limit at t = 0; series branch for small |t|
// avoids the cancellation in expm1(t ln x)/t.
double pow_ratio(double x, double t) {
  const double lx = std::log(x);
  if (std::abs(t) < 1e-8) {
    const double u = t * lx;
    return lx * (1.0 + 0.5 * u * (1.0 + u / 3.0));
  }
  return std::expm1(t * lx) / t;
}

// ln(q e^a + (1-q) e^b), stable across widely separated magnitudes.
double log_mix(double q, double a, double b) {
  const double m = std::max(a, b);
  return m + std::log(q * std::exp(a - m) + (1.0 - q) * std::exp(b - m));
}

void check_xq(double x, double q) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::invalid_argument("x must be positive and finite");
  if (!(q >= 0.0) || !(q < 1.0))
    throw std::invalid_argument("q must lie in [0, 1)");
}

void check_nonzero_exponents(const ExponentPair& e) {
  if (e.r == 0.0 || e.s == 0.0)
    throw std::invalid_argument("r and s must both be nonzero");
}

}  // namespace

AlphaParams::AlphaParams(double a1, double a2) : alpha1(a1), alpha2(a2) {
  if (!(alpha1 >= 0.0))
    throw std::invalid_argument("alpha1 must be >= 0");
}

double f1(double x, double q, const ExponentPair& exps) {
  check_xq(x, q);
  check_nonzero_exponents(exps);
  const double r = exps.r, s = exps.s;
  auto term = [x, q](double t) {
    return std::pow(q * std::pow(x, t) + 1.0 - q, (1.0 - t) / t) *
           std::pow(x, t - 1.0);
  };
  return term(r) - term(s) - (r - s) * (1.0 - q) * (x - 1.0);
}

double f2(double x, double q, const ExponentPair& exps) {
  check_xq(x, q);
  check_nonzero_exponents(exps);
  const double r = exps.r, s = exps.s;
  auto term = [x, q](double t) {
    return std::pow(q + (1.0 - q) * std::pow(x, -t), (1.0 - 2.0 * t) / t) *
           std::pow(x, -t - 1.0);
  };
  return (r - 1.0) * term(r) + (1.0 - s) * term(s) - (r - s);
}

double limit_q0(double x, const ExponentPair& exps) {
  if (!(x > 0.0)) throw std::invalid_argument("x must be positive");
  const double d = x - 1.0;
  return pow_ratio(x, exps.r) - pow_ratio(x, exps.s) -
         0.5 * (exps.r - exps.s) * d * d;
}

double limit_q1(double x, const ExponentPair& exps) {
  if (!(x > 0.0)) throw std::invalid_argument("x must be positive");
  const double d = x - 1.0;
  // (x - x^(1-t))/t = x (x^-t - 1)/(-t)
  return x * pow_ratio(x, -exps.s) - x * pow_ratio(x, -exps.r) -
         0.5 * (exps.r - exps.s) * d * d;
}

double lhs_zero_profile(double y, const ExponentPair& exps) {
  if (!(y > 0.0) || !(y <= 1.0))
    throw std::invalid_argument("y must lie in (0, 1]");
  if (exps.r < 1.0) throw std::invalid_argument("requires r >= 1");
  if (!(exps.s < 0.0)) throw std::invalid_argument("requires s < 0");
  return std::pow(y, 1.0 / exps.r - 1.0) -
         0.5 * (exps.r - exps.s) * (1.0 - y);
}

double lhs_zero_profile_argmin(const ExponentPair& exps) {
  if (exps.r < 1.0) throw std::invalid_argument("requires r >= 1");
  if (!(exps.s < 0.0)) throw std::invalid_argument("requires s < 0");
  const double base = 2.0 * (1.0 - 1.0 / exps.r) / (exps.r - exps.s);
  const double m = std::pow(base, 1.0 / (2.0 - 1.0 / exps.r));
  return std::clamp(m, std::numeric_limits<double>::min(), 1.0);
}

double cf_necessary_bound(double r) {
  if (!(r >= 1.0)) throw std::invalid_argument("requires r >= 1");
  const double z = 1.0 - 1.0 / r;
  if (z <= 0.0) return 1.0;  // r = 1, using 0^0 = 1
  return std::pow(2.0 - 1.0 / r, 2.0 - 1.0 / r) * std::pow(z, -z);
}

double c0(double r, double s) {
  return r * r * r - (5.0 + 4.0 * s) * r * r +
         (2.0 + 6.0 * s + 3.0 * s * s) * r - s * (2.0 + s);
}

double c_general(double r, double s, double alpha1, double alpha2) {
  return c0(r, s) +
         ((r - 1.0) * (2.0 * r - 1.0) * (1.0 - 3.0 * s) +
          (3.0 * r - 1.0) * (1.0 - 2.0 * s) * (1.0 - s)) *
             (alpha1 / s) +
         (2.0 * r - 1.0) * (r - 1.0) * alpha2;
}

double c1(double r, double s) {
  return r * r * r - (6.0 + s) * r * r + (s * s + 4.0) * r -
         s * (s * s - 6.0 * s + 4.0);
}

double c2(double r, double s) {
  return (r - 1.0) * (-1.0 - 2.0 * s) - (1.0 - s) * (1.0 + s);
}

double c3(double r, double s) { return c_general(r, s, 0.0, s); }

double c4(double r, double s) {
  if (r == 1.0 || r == 2.0)
    throw std::invalid_argument("c4 undefined at r = 1 and r = 2");
  return c_general(r, s, -0.0889 * s,
                   (1.0 - s * s) * s / ((r - 1.0) * (r - 2.0)));
}

double alpha0(double q1, double x0, double s) {
  if (!(q1 >= 0.0) || !(q1 <= 1.0))
    throw std::invalid_argument("q1 must lie in [0, 1]");
  if (!(x0 > 0.0) || !(x0 < 1.0))
    throw std::invalid_argument("x0 must lie in (0, 1)");
  if (!(s >= -1.0) || !(s < 0.0))
    throw std::invalid_argument("s must lie in [-1, 0)");
  return -s * std::log((1.0 - q1) * x0 + q1) / std::log(x0);
}

double alpha2_of(double q2, const ExponentPair& exps) {
  if (!(exps.r > 2.0)) throw std::invalid_argument("requires r > 2");
  if (!(exps.s >= -1.0) || !(exps.s < 0.0))
    throw std::invalid_argument("s must lie in [-1, 0)");
  if (!(q2 >= 0.5) || !(q2 < 1.0))
    throw std::invalid_argument("q2 must lie in [1/2, 1)");
  return exps.s * (1.0 - exps.s * exps.s) * q2 /
         ((exps.r - 1.0) * (exps.r - 2.0) * (1.0 - q2));
}

double q0_of(const ExponentPair& exps) {
  if (!(exps.r > 2.0)) throw std::invalid_argument("requires r > 2");
  if (!(exps.s >= -1.0) || !(exps.s < 0.0))
    throw std::invalid_argument("s must lie in [-1, 0)");
  const double p = (exps.r - 1.0) * (exps.r - 2.0);
  return p / (p + 1.0 - exps.s * exps.s);
}

std::optional<double> critical_residual(double x, double q,
                                        const ExponentPair& exps) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::invalid_argument("x must be positive and finite");
  if (!(q > 0.0) || !(q < 1.0))
    throw std::invalid_argument("q must lie in (0, 1)");
  check_nonzero_exponents(exps);
  const double r = exps.r, s = exps.s;

  const double denom = -q * (r + 1.0) * std::pow(x, r) +
                       (r - 2.0) * (1.0 - q);
  if (!(denom > 0.0)) return std::nullopt;
  if (!(r > 1.0)) return std::nullopt;
  const double numer =
      (1.0 - s) * (q * (1.0 + s) * std::pow(x, s) + (2.0 - s) * (1.0 - q));
  if (!(numer > 0.0)) return std::nullopt;

  const double lx = std::log(x);
  // both sides compared in log space: the relation spans many orders of
  // magnitude in x
  const double lhs =
      ((1.0 - 3.0 * r) / r) * log_mix(q, r * lx, 0.0) + (r - 2.0) * lx;
  const double rhs = std::log(numer) - std::log((r - 1.0) * denom) +
                     ((1.0 - 3.0 * s) / s) * log_mix(q, 0.0, -s * lx) +
                     (-1.0 - 2.0 * s) * lx;
  return lhs - rhs;
}

namespace {

struct RowScan {
  double max_value = -std::numeric_limits<double>::infinity();
  double worst_r = 0.0;
  long cells = 0;
};

// One s-row of the grid: r = 2 + k*step for k = 1..K with K landing on
// r = 3-s; c4 only for r <= 3 and at the endpoint.
RowScan scan_row(double s, double step, long k3) {
  RowScan row;
  const long K = std::lround((1.0 - s) / step);
  for (long k = 1; k <= K; ++k) {
    const double r = 2.0 + static_cast<double>(k) * step;
    double v = std::max({c1(r, s), c2(r, s), c3(r, s)});
    if (k <= k3 || k == K) v = std::max(v, c4(r, s));
    if (v > row.max_value) {
      row.max_value = v;
      row.worst_r = r;
    }
    ++row.cells;
  }
  return row;
}

CGridScan reduce_rows(const std::vector<RowScan>& rows, double step) {
  CGridScan out{-std::numeric_limits<double>::infinity(), 0.0, 0.0, 0};
  for (std::size_t j = 0; j < rows.size(); ++j) {
    out.cells += rows[j].cells;
    if (rows[j].max_value > out.max_value) {
      out.max_value = rows[j].max_value;
      out.worst_r = rows[j].worst_r;
      out.worst_s = -0.5 + static_cast<double>(j) * step;
    }
  }
  return out;
}

}  // namespace

CGridScan c_grid_scan(double step) {
  if (!(step > 0.0) || !(step <= 0.5))
    throw std::invalid_argument("step must lie in (0, 0.5]");
  const long ns = std::lround(0.5 / step);
  const long k3 = std::lround(1.0 / step);
  std::vector<RowScan> rows(ns);
#pragma omp parallel for schedule(static)
  for (long j = 0; j < ns; ++j)
    rows[j] = scan_row(-0.5 + static_cast<double>(j) * step, step, k3);
  return reduce_rows(rows, step);
}

CGridScan c_grid_scan_serial(double step) {
  if (!(step > 0.0) || !(step <= 0.5))
    throw std::invalid_argument("step must lie in (0, 0.5]");
  const long ns = std::lround(0.5 / step);
  const long k3 = std::lround(1.0 / step);
  std::vector<RowScan> rows(ns);
  for (long j = 0; j < ns; ++j)
    rows[j] = scan_row(-0.5 + static_cast<double>(j) * step, step, k3);
  return reduce_rows(rows, step);
}

}  // namespace powermean
