#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "powermean/functionals.hpp"
#include "powermean/means.hpp"

using namespace powermean;

namespace {

// independent oracles for the classical special cases
double arith(const std::vector<double>& x, const std::vector<double>& q) {
  double a = 0;
  for (size_t i = 0; i < x.size(); ++i) a += q[i] * x[i];
  return a;
}
double geom(const std::vector<double>& x, const std::vector<double>& q) {
  double a = 0;
  for (size_t i = 0; i < x.size(); ++i) a += q[i] * std::log(x[i]);
  return std::exp(a);
}
double harm(const std::vector<double>& x, const std::vector<double>& q) {
  double a = 0;
  for (size_t i = 0; i < x.size(); ++i) a += q[i] / x[i];
  return 1.0 / a;
}

struct Rng {
  std::mt19937_64 g;
  explicit Rng(uint64_t seed) : g(seed) {}
  double uniform() { return static_cast<double>(g() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  int uniform_int(int a, int b) {
    int k = static_cast<int>(uniform() * (b - a + 1));
    return a + (k > b - a ? b - a : k);
  }
};

WeightedSample random_sample(Rng& rng, int n_min = 1, int n_max = 8,
                             double x_lo = 1e-3, double x_hi = 10.0) {
  const int n = rng.uniform_int(n_min, n_max);
  std::vector<double> values(n), weights(n);
  double sum = 0;
  for (int i = 0; i < n; ++i) {
    values[i] = rng.uniform(x_lo, x_hi);
    weights[i] = -std::log(1.0 - rng.uniform());
    sum += weights[i];
  }
  for (double& w : weights) w /= sum;
  return WeightedSample(std::move(values), std::move(weights));
}

}  // namespace

TEST_CASE("power_mean reproduces the classical means on (1,4) half-half") {
  const WeightedSample s({1.0, 4.0}, {0.5, 0.5});
  CHECK(power_mean(s, 1.0) == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(power_mean(s, 0.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(power_mean(s, -1.0) == doctest::Approx(1.6).epsilon(1e-12));
}

TEST_CASE("power_mean agrees with independent oracles at r in {1,0,-1}") {
  Rng rng(101);
  for (int t = 0; t < 200; ++t) {
    const WeightedSample s = random_sample(rng, 1, 8, 0.05, 10.0);
    CHECK(power_mean(s, 1.0) ==
          doctest::Approx(arith(s.values(), s.weights())).epsilon(1e-12));
    CHECK(power_mean(s, 0.0) ==
          doctest::Approx(geom(s.values(), s.weights())).epsilon(1e-12));
    CHECK(power_mean(s, -1.0) ==
          doctest::Approx(harm(s.values(), s.weights())).epsilon(1e-12));
  }
}

TEST_CASE("all-equal samples give the common value exactly, any r") {
  Rng rng(102);
  for (int t = 0; t < 50; ++t) {
    const int n = rng.uniform_int(1, 8);
    const double c = rng.uniform(1e-3, 10.0);
    std::vector<double> w(n);
    double sum = 0;
    for (double& wi : w) sum += (wi = rng.uniform(0.1, 1.0));
    for (double& wi : w) wi /= sum;
    const WeightedSample s(std::vector<double>(n, c), std::move(w));
    for (double r : {-50.0, -1.0, -1e-13, 0.0, 1e-13, 1.0, 2.5, 50.0})
      CHECK(power_mean(s, r) == c);
  }
}

TEST_CASE("variance: worked example, all-equal, and the (0,1) closed form") {
  CHECK(variance(WeightedSample({1.0, 4.0}, {0.5, 0.5})) ==
        doctest::Approx(2.25).epsilon(1e-12));
  CHECK(variance(WeightedSample({3.7, 3.7, 3.7}, {0.2, 0.5, 0.3})) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  Rng rng(103);
  for (int t = 0; t < 100; ++t) {
    const double q = rng.uniform(0.01, 0.99);
    CHECK(variance(WeightedSample({0.0, 1.0}, {q, 1.0 - q})) ==
          doctest::Approx(q * (1.0 - q)).epsilon(1e-12));
  }
}

TEST_CASE("cf_check on the AM-GM example (r,s)=(1,0)") {
  const WeightedSample s({1.0, 4.0}, {0.5, 0.5});
  const BoundCheck bc = cf_check(s, ExponentPair(1.0, 0.0));
  CHECK(bc.lower == doctest::Approx(0.28125).epsilon(1e-12));
  CHECK(bc.gap == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(bc.upper == doctest::Approx(1.125).epsilon(1e-12));
  CHECK(bc.lhs_residual > 0.0);
  CHECK(bc.rhs_residual > 0.0);
  CHECK(bc.upper_defined);
  // gap lies inside [lower, upper]
  CHECK(bc.gap >= bc.lower);
  CHECK(bc.gap <= bc.upper);
}

TEST_CASE("cf_check on all-equal samples is identically zero") {
  const WeightedSample s({2.0, 2.0, 2.0, 2.0}, {0.25, 0.25, 0.25, 0.25});
  const BoundCheck bc = cf_check(s, ExponentPair(2.5, -0.5));
  CHECK(std::abs(bc.lower) <= 1e-12);
  CHECK(std::abs(bc.gap) <= 1e-12);
  CHECK(std::abs(bc.upper) <= 1e-12);
}

TEST_CASE("f_value on the worked example and the all-equal case") {
  const WeightedSample s({1.0, 4.0}, {0.5, 0.5});
  CHECK(f_value(s, ExponentPair(1.0, 0.0)) ==
        doctest::Approx(-0.625).epsilon(1e-12));
  const WeightedSample eq({3.0, 3.0}, {0.4, 0.6});
  CHECK(f_value(eq, ExponentPair(1.0, 0.0)) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("f_value at boundary weight matches the q->0 limit functional") {
  const double q = 1e-6;
  for (double x : {0.3, 2.5, 7.0}) {
    const ExponentPair e(1.7, 0.6);
    const WeightedSample s({x, 1.0}, {q, 1.0 - q});
    const double scaled = f_value(s, e) / q;
    CHECK(scaled ==
          doctest::Approx(limit_q0(x, e)).epsilon(1e-4).scale(1.0));
  }
}

TEST_CASE("r -> power_mean is strictly increasing off the diagonal") {
  Rng rng(104);
  for (int t = 0; t < 100; ++t) {
    const WeightedSample s = random_sample(rng, 2, 8);
    double prev = power_mean(s, -6.0);
    for (int k = 1; k <= 12; ++k) {
      const double cur = power_mean(s, -6.0 + k);
      CHECK(cur > prev);
      prev = cur;
    }
  }
}

TEST_CASE("power_mean is positively homogeneous") {
  Rng rng(105);
  for (int t = 0; t < 200; ++t) {
    const WeightedSample s = random_sample(rng);
    const double lambda = std::pow(10.0, rng.uniform(-2.0, 2.0));
    const double r = rng.uniform(-5.0, 5.0);
    std::vector<double> scaled = s.values();
    for (double& x : scaled) x *= lambda;
    const double a = power_mean(WeightedSample(scaled, s.weights()), r);
    const double b = lambda * power_mean(s, r);
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
  }
}

TEST_CASE("bound residuals vanish iff the sample is all-equal") {
  Rng rng(106);
  for (int t = 0; t < 100; ++t) {
    const int n = rng.uniform_int(1, 8);
    const double c = rng.uniform(0.5, 5.0);
    std::vector<double> w(n);
    double sum = 0;
    for (double& wi : w) sum += (wi = rng.uniform(0.1, 1.0));
    for (double& wi : w) wi /= sum;
    const WeightedSample s(std::vector<double>(n, c), std::move(w));
    const BoundCheck bc = cf_check(s, ExponentPair(1.3, -0.2));
    CHECK(variance(s) <= 1e-24);
    CHECK(std::abs(bc.lhs_residual) <= 1e-12);
    CHECK(std::abs(bc.rhs_residual) <= 1e-12);
  }
  for (int t = 0; t < 100; ++t) {
    const WeightedSample s = random_sample(rng, 2, 8);
    if (variance(s) <= 1e-12) continue;
    const BoundCheck bc = cf_check(s, ExponentPair(1.3, -0.2));
    CHECK(std::max(std::abs(bc.lhs_residual), std::abs(bc.rhs_residual)) >
          1e-12);
  }
}

TEST_CASE("variance is nonnegative and permutation invariant") {
  Rng rng(107);
  for (int t = 0; t < 200; ++t) {
    const WeightedSample s = random_sample(rng, 2, 8);
    const double v = variance(s);
    CHECK(v >= 0.0);
    std::vector<size_t> order(s.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng.g);
    std::vector<double> pv, pw;
    for (size_t i : order) {
      pv.push_back(s.values()[i]);
      pw.push_back(s.weights()[i]);
    }
    CHECK(variance(WeightedSample(pv, pw)) ==
          doctest::Approx(v).epsilon(1e-12));
  }
}

TEST_CASE("power_mean near r=0 agrees with the geometric branch") {
  Rng rng(108);
  for (int t = 0; t < 100; ++t) {
    const WeightedSample s = random_sample(rng);
    const double g = power_mean(s, 0.0);
    CHECK(power_mean(s, 1e-13) == doctest::Approx(g).epsilon(1e-9));
    CHECK(power_mean(s, -1e-13) == doctest::Approx(g).epsilon(1e-9));
  }
}

TEST_CASE("zero values follow the limit conventions") {
  const WeightedSample s({0.0, 2.0}, {0.3, 0.7});
  CHECK(power_mean(s, 0.0) == 0.0);
  CHECK(power_mean(s, -1.0) == 0.0);
  CHECK(power_mean(s, -1e-13) == 0.0);
  CHECK(power_mean(s, 1.0) == doctest::Approx(1.4).epsilon(1e-12));

  const BoundCheck bc = cf_check(s, ExponentPair(1.0, 0.0));
  CHECK(!bc.upper_defined);
  CHECK(bc.lower > 0.0);
  CHECK(std::isinf(bc.upper));

  // the all-zero sample degenerates cleanly
  const BoundCheck zero = cf_check(WeightedSample({0.0, 0.0}, {0.5, 0.5}),
                                   ExponentPair(1.0, 0.0));
  CHECK(zero.gap == 0.0);
  CHECK(zero.lower == 0.0);
  CHECK(zero.upper == 0.0);
}

TEST_CASE("large |r| does not overflow") {
  const WeightedSample s({1e-6, 3.0, 1e7}, {0.2, 0.5, 0.3});
  const double big = power_mean(s, 500.0);
  CHECK(std::isfinite(big));
  CHECK(big == doctest::Approx(1e7 * std::pow(0.3, 1.0 / 500.0)).epsilon(1e-9));
  const double small = power_mean(s, -500.0);
  CHECK(std::isfinite(small));
  CHECK(small ==
        doctest::Approx(1e-6 * std::pow(0.2, -1.0 / 500.0)).epsilon(1e-9));
}

TEST_CASE("construction rejects invalid samples and accepts round-off") {
  CHECK_THROWS_AS(WeightedSample({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedSample({1.0}, {0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedSample({-1.0, 2.0}, {0.5, 0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(WeightedSample({1.0, 2.0}, {0.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(WeightedSample({1.0, 2.0}, {-0.1, 1.1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(WeightedSample({1.0, 2.0}, {0.4, 0.4}),
                  std::invalid_argument);  // sums to 0.8

  // within 1e-9 of 1: accepted and renormalized to 1e-12
  const WeightedSample s({1.0, 2.0}, {0.3, 0.7 + 1e-10});
  double sum = 0;
  for (double w : s.weights()) sum += w;
  CHECK(std::abs(sum - 1.0) <= 1e-12);
}

TEST_CASE("exponent and argument validation") {
  CHECK_THROWS_AS(ExponentPair(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ExponentPair(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(ExponentPair(std::nan(""), 0.0), std::invalid_argument);
  const WeightedSample s({1.0, 2.0}, {0.5, 0.5});
  CHECK_THROWS_AS(power_mean(s, std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}
