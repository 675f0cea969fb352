#pragma once

// Maps an exponent pair to a verdict per side of the two-sided bound.  The
// upper-bound side has a complete characterization; the lower-bound side is
// complete for -1/2 <= s <= 1 and otherwise decided by necessary conditions,
// sufficiency rules, or left open.  Verdicts carry the tag of the rule that
// fired.

#include <string>
#include <vector>

#include "powermean/means.hpp"

namespace powermean {

enum class Side { RHS, LHS };
enum class Verdict { HOLDS, FAILS, UNKNOWN };

const char* to_string(Side side);
const char* to_string(Verdict verdict);

// Rule tags attached to HOLDS/FAILS verdicts.
namespace citation {
inline constexpr const char* thm1_rhs = "thm1-rhs";
inline constexpr const char* thm1_lhs = "thm1-lhs";
inline constexpr const char* lem0 = "lem0";
inline constexpr const char* lem1_necessary = "lem1-necessary";
inline constexpr const char* eq2_2 = "eq2.2";
inline constexpr const char* remark_s_ge_m4 = "remark-s>=-4";
inline constexpr const char* thm3_a = "thm3-a";
inline constexpr const char* thm3_b = "thm3-b";
}  // namespace citation

struct Classification {
  Side side = Side::RHS;
  Verdict verdict = Verdict::UNKNOWN;
  std::string citation;  // empty for UNKNOWN
  std::string detail;    // the predicate that fired
  std::vector<std::string> passed_necessary;  // filled for UNKNOWN verdicts
};

// Upper-bound side: HOLDS iff 0 <= r+s <= 3, r <= 2, s >= -1; never UNKNOWN.
Classification classify_rhs(const ExponentPair& exps);

// Lower-bound side: complete iff-rule for -1/2 <= s <= 1; otherwise
// necessary conditions in fixed order, then sufficiency, then UNKNOWN.
Classification classify_lhs(const ExponentPair& exps);

struct RegionMapSpec {
  double r_min;
  double r_max;
  double s_min;
  double s_max;
  int grid_n;  // points per axis, >= 2, endpoints included
};

struct RegionCell {
  double r = 0.0;
  double s = 0.0;
  bool degenerate = false;  // r <= s, no classification
  Classification rhs;
  Classification lhs;
};

// Row-major table, s outer and r inner; output ordering is deterministic
// regardless of scheduling.
std::vector<RegionCell> region_map(const RegionMapSpec& spec);  // OpenMP
std::vector<RegionCell> region_map_serial(const RegionMapSpec& spec);

}  // namespace powermean
