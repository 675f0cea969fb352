#pragma once

// Counterexample search for either side of the two-sided bound, restricted
// to two-point samples (1, x) with weight q on x: extremal configurations
// reduce to this case with a value or weight at its boundary.

#include <cstdint>
#include <optional>

#include "powermean/classify.hpp"

namespace powermean {

enum class Provenance { Grid, Refine, LimitSeed };
const char* to_string(Provenance p);

// A concrete two-point witness violating one side of the bound.  The stored
// residual is the signed side residual reproduced by cf_check on (sample,
// exps); negative beyond tolerance means violated.
struct Certificate {
  Side side;
  ExponentPair exps;
  WeightedSample sample;
  double residual;
  Provenance provenance;
};

struct SearchConfig {
  long budget = 100000;  // total residual/functional evaluations
  std::uint64_t seed = 0;
  double tolerance = kDefaultTolerance;
};

// Log-spaced x grid on [1e-8, 1e8] crossed with a q ladder that includes
// near-boundary weights, seeded by sign changes of the boundary limit
// functionals, then refined by derivative-free coordinate descent.
// Deterministic given (exps, side, budget, seed).
std::optional<Certificate> search_counterexample(const ExponentPair& exps,
                                                 Side side,
                                                 const SearchConfig& config =
                                                     SearchConfig{});

// Exhaustive oracle: the extremal residual F = M_r - M_s - (r-s)/2 * sigma
// over a grid_n x grid_n (x, q) grid with the side-appropriate
// normalization (x in [1, 1e8] for the upper-bound side, [1e-8, 1] for the
// lower-bound side).  The upper-bound side reports the maximum, the
// lower-bound side the minimum.
struct GridExtremum {
  double x;
  double q;
  double f;
};
GridExtremum brute_force_extremum(const ExponentPair& exps, Side side,
                                  int grid_n);  // OpenMP
GridExtremum brute_force_extremum_serial(const ExponentPair& exps, Side side,
                                         int grid_n);

// Recomputes the bound check at extended precision with ascending-value
// summation order; true iff the violation persists beyond tol/10.
bool verify_certificate(const Certificate& cert,
                        double tol = kDefaultTolerance);

}  // namespace powermean
