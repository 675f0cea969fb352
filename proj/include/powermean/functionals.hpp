#pragma once

// Scalar functionals and polynomial certificates backing the region
// classifier and the counterexample search: the two-point residual
// derivatives F1/F2, boundary limit functionals, the necessary-condition
// bound, the c-polynomial family and the alpha envelope constants.

#include <optional>

#include "powermean/means.hpp"

namespace powermean {

// alpha1 must be >= 0; alpha2 is tied to s (alpha2/s <= 1 when produced by
// alpha2_of).
struct AlphaParams {
  double alpha1;
  double alpha2;
  AlphaParams(double a1, double a2);
};

// F1(x,q) = (q x^r + 1-q)^((1-r)/r) x^(r-1)
//         - (q x^s + 1-q)^((1-s)/s) x^(s-1) - (r-s)(1-q)(x-1)
// for x > 0, 0 <= q < 1; r and s must both be nonzero.
double f1(double x, double q, const ExponentPair& exps);

// F2(x,q) = (r-1)(q + (1-q) x^-r)^((1-2r)/r) x^(-r-1)
//         + (1-s)(q + (1-q) x^-s)^((1-2s)/s) x^(-s-1) - (r-s).
// Equals (1-q)^-1 dF1/dx.
double f2(double x, double q, const ExponentPair& exps);

// Limits of F(x,1,q,1-q)/q as q -> 0+ and of F/(1-q) as q -> 1-, for the
// two-point sample with weight q on x.  Exponents of 0 take the ln x limit.
double limit_q0(double x, const ExponentPair& exps);
double limit_q1(double x, const ExponentPair& exps);

// y^(1/r-1) - (r-s)(1-y)/2 on (0,1]: the x -> 0+ profile of the lower-bound
// side when s < 0, and its closed-form minimizer clamped to (0,1].
// Requires s < 0 and r >= 1 (0^0 = 1 at r = 1).
double lhs_zero_profile(double y, const ExponentPair& exps);
double lhs_zero_profile_argmin(const ExponentPair& exps);

// (2-1/r)^(2-1/r) (1-1/r)^-(1-1/r) for r >= 1, with 0^0 = 1 so the value at
// r = 1 is exactly 1.  (r-s)/2 <= this is necessary for the lower-bound side
// when s < 0.  Increasing in r with limit 4.
double cf_necessary_bound(double r);

// c-polynomial family; non-positivity drives the s < 0 sufficiency region.
double c0(double r, double s);
double c_general(double r, double s, double alpha1, double alpha2);
inline double c_general(double r, double s, const AlphaParams& a) {
  return c_general(r, s, a.alpha1, a.alpha2);
}
double c1(double r, double s);
double c2(double r, double s);
double c3(double r, double s);            // = c_general(r, s, 0, s)
double c4(double r, double s);            // rejects r in {1, 2}

// alpha0 = -s ln((1-q1) x0 + q1) / ln(x0); the largest admissible alpha1 in
// the envelope q + (1-q) x^-s <= x^alpha1.  Requires 0 < x0 < 1, -1 <= s < 0.
double alpha0(double q1, double x0, double s);

// alpha2 with alpha2/s = (1-s^2) q2 / ((r-1)(r-2)(1-q2)); requires r > 2,
// -1 <= s < 0, 1/2 <= q2 < 1.
double alpha2_of(double q2, const ExponentPair& exps);

// The q0 with alpha2_of(q0)/s = 1, i.e. P/(P + 1-s^2) with P = (r-1)(r-2).
double q0_of(const ExponentPair& exps);

// Log-difference of the two sides of the interior stationarity relation for
// F2 in x.  Returns nothing when -q(r+1)x^r + (r-2)(1-q) <= 0 (no interior
// stationary point) or when a factor leaves the log domain.
std::optional<double> critical_residual(double x, double q,
                                        const ExponentPair& exps);

// Max of c1..c4 over the grid s in [-1/2, 0) and r in (2, 3-s], both with
// the given step; c4 is evaluated for r <= 3 and at r = 3-s only.
struct CGridScan {
  double max_value;
  double worst_r;
  double worst_s;
  long cells;
};
CGridScan c_grid_scan(double step);         // OpenMP over s-rows
CGridScan c_grid_scan_serial(double step);  // reference implementation

}  // namespace powermean
