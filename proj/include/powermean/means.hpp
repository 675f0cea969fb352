#pragma once

// Weighted power means, weighted variance, and the two-sided variance
// bounds on differences of power means, evaluated in an overflow-safe way.

#include <cstddef>
#include <vector>

namespace powermean {

inline constexpr double kDefaultTolerance = 1e-9;

// Nonnegative values with positive weights that sum to one.  Weights are
// renormalized at construction when |sum - 1| <= 1e-9 and rejected otherwise.
class WeightedSample {
 public:
  WeightedSample(std::vector<double> values, std::vector<double> weights);

  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return values_.size(); }
  double min_value() const { return min_value_; }
  double max_value() const { return max_value_; }

 private:
  std::vector<double> values_;
  std::vector<double> weights_;
  double min_value_ = 0.0;
  double max_value_ = 0.0;
};

// Ordered pair of exponents, r strictly greater than s, both finite.
struct ExponentPair {
  double r;
  double s;
  ExponentPair(double r_in, double s_in);
};

// Evaluated lower bound, mean gap, upper bound and signed slack per side.
// The bounds are (r-s)*variance/(2*max) and (r-s)*variance/(2*min); a
// nonnegative residual means the corresponding side of the bound holds.
struct BoundCheck {
  double lower = 0.0;
  double gap = 0.0;
  double upper = 0.0;
  double lhs_residual = 0.0;  // gap - lower
  double rhs_residual = 0.0;  // upper - gap
  bool upper_defined = true;  // false when min value is 0 (division by zero)
};

// M_r = (sum_i q_i x_i^r)^(1/r); the r = 0 branch is the weighted geometric
// mean.  Zero values give 0 whenever r <= 0.  Stable for large |r| via
// scaling by the max (r > 0) or min (r < 0) value.
double power_mean(const WeightedSample& sample, double r);

// sum_i q_i (x_i - A)^2 with A the weighted arithmetic mean.
double variance(const WeightedSample& sample);

BoundCheck cf_check(const WeightedSample& sample, const ExponentPair& exps);

// Residual M_r - M_s - (r-s)/2 * variance.  Callers pick the normalization
// (min value 1 for the upper-bound side, max value 1 for the lower-bound
// side) and read the sign accordingly.
double f_value(const WeightedSample& sample, const ExponentPair& exps);

// A side of the bound counts as violated only beyond a relative tolerance.
inline bool violates(double residual, double gap,
                     double tol = kDefaultTolerance) {
  double scale = (gap < 0 ? -gap : gap);
  if (scale < 1.0) scale = 1.0;
  return residual < -tol * scale;
}

}  // namespace powermean
