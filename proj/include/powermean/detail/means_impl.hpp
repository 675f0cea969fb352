#pragma once

// Evaluation cores shared by the public API, the two-point search path and
// the higher-precision certificate re-check.  Templated on the float type.

#include <cmath>
#include <cstddef>

namespace powermean::detail {

// Assumes n >= 1, x[i] >= 0, q[i] > 0 normalized, r finite.
template <class F>
F power_mean_core(const F* x, const F* q, std::size_t n, F r) {
  using std::exp;
  using std::expm1;
  using std::log;
  using std::log1p;

  if (r == F(0)) {
    F scale = x[0];
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == F(0)) return F(0);
      if (x[i] > scale) scale = x[i];
    }
    F acc = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (x[i] != scale) acc += q[i] * log(x[i] / scale);
    return scale * exp(acc);
  }

  F scale;
  if (r > F(0)) {
    scale = x[0];
    for (std::size_t i = 1; i < n; ++i)
      if (x[i] > scale) scale = x[i];
    if (scale == F(0)) return F(0);  // all values zero
  } else {
    scale = x[0];
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == F(0)) return F(0);  // limit convention for r < 0
      if (x[i] < scale) scale = x[i];
    }
  }

  // sum1 = sum_i q_i ((x_i/scale)^r - 1); every exponent r*log(x_i/scale)
  // is <= 0, so nothing overflows and the scale element contributes 0.
  F sum1 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == scale) continue;
    if (x[i] == F(0)) {
      sum1 -= q[i];  // (0/scale)^r = 0 for r > 0
      continue;
    }
    sum1 += q[i] * expm1(r * log(x[i] / scale));
  }
  return scale * exp(log1p(sum1) / r);
}

template <class F>
F arithmetic_mean_core(const F* x, const F* q, std::size_t n) {
  F a = 0;
  for (std::size_t i = 0; i < n; ++i) a += q[i] * x[i];
  return a;
}

template <class F>
F variance_core(const F* x, const F* q, std::size_t n) {
  const F a = arithmetic_mean_core(x, q, n);
  F v = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const F d = x[i] - a;
    v += q[i] * d * d;
  }
  return v;
}

}  // namespace powermean::detail
