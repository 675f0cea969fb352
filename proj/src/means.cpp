#include "powermean/means.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "powermean/detail/means_impl.hpp"

namespace powermean {

namespace {

double kahan_sum(const std::vector<double>& v) {
  double sum = 0.0, comp = 0.0;
  for (double t : v) {
    const double y = t - comp;
    const double s = sum + y;
    comp = (s - sum) - y;
    sum = s;
  }
  return sum;
}

}  // namespace

WeightedSample::WeightedSample(std::vector<double> values,
                               std::vector<double> weights)
    : values_(std::move(values)), weights_(std::move(weights)) {
  if (values_.empty()) throw std::invalid_argument("sample must be non-empty");
  if (values_.size() != weights_.size())
    throw std::invalid_argument("values and weights must have equal length");
  for (double x : values_) {
    if (!std::isfinite(x) || x < 0.0)
      throw std::invalid_argument("values must be finite and >= 0");
  }
  for (double q : weights_) {
    if (!std::isfinite(q) || q <= 0.0)
      throw std::invalid_argument("weights must be finite and > 0");
  }
  const double sum = kahan_sum(weights_);
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("weights must sum to 1 within 1e-9, got " +
                                std::to_string(sum));
  for (double& q : weights_) q /= sum;
  min_value_ = values_[0];
  max_value_ = values_[0];
  for (double x : values_) {
    if (x < min_value_) min_value_ = x;
    if (x > max_value_) max_value_ = x;
  }
}

ExponentPair::ExponentPair(double r_in, double s_in) : r(r_in), s(s_in) {
  if (!std::isfinite(r) || !std::isfinite(s) || !(r > s))
    throw std::invalid_argument("exponent pair requires finite r > s");
}

double power_mean(const WeightedSample& sample, double r) {
  if (!std::isfinite(r))
    throw std::invalid_argument("power_mean: r must be finite");
  return detail::power_mean_core(sample.values().data(),
                                 sample.weights().data(), sample.size(), r);
}

double variance(const WeightedSample& sample) {
  return detail::variance_core(sample.values().data(),
                               sample.weights().data(), sample.size());
}

BoundCheck cf_check(const WeightedSample& sample, const ExponentPair& exps) {
  BoundCheck out;
  const double sigma = variance(sample);
  const double half = 0.5 * (exps.r - exps.s);
  out.gap = power_mean(sample, exps.r) - power_mean(sample, exps.s);
  if (sample.max_value() == 0.0) {
    // all values zero: gap and variance vanish, both bounds are 0
    out.lower = 0.0;
    out.upper = 0.0;
  } else {
    out.lower = half * sigma / sample.max_value();
    if (sample.min_value() > 0.0) {
      out.upper = half * sigma / sample.min_value();
    } else {
      out.upper = std::numeric_limits<double>::infinity();
      out.upper_defined = false;
    }
  }
  out.lhs_residual = out.gap - out.lower;
  out.rhs_residual = out.upper - out.gap;
  return out;
}

double f_value(const WeightedSample& sample, const ExponentPair& exps) {
  return power_mean(sample, exps.r) - power_mean(sample, exps.s) -
         0.5 * (exps.r - exps.s) * variance(sample);
}

}  // namespace powermean
