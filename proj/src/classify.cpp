#include "powermean/classify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "powermean/functionals.hpp"

namespace powermean {

namespace {

// Absorbs float noise in exactly-zero cases like c0(3, -1/2) = 0.
constexpr double kCSignTol = 1e-12;

Classification make(Side side, Verdict v, const char* cite,
                    std::string detail) {
  Classification c;
  c.side = side;
  c.verdict = v;
  c.citation = (v == Verdict::UNKNOWN) ? "" : cite;
  c.detail = std::move(detail);
  return c;
}

bool in_lem0_box(double r, double s) {
  return 1.0 <= r && r <= 2.0 && -1.0 <= s && s <= 1.0;
}

}  // namespace

const char* to_string(Side side) {
  return side == Side::RHS ? "rhs" : "lhs";
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::HOLDS: return "HOLDS";
    case Verdict::FAILS: return "FAILS";
    default: return "UNKNOWN";
  }
}

Classification classify_rhs(const ExponentPair& exps) {
  const double r = exps.r, s = exps.s;
  // previously-known cases carry their own tag
  if (s == 0.0) {
    if (r <= 2.0)
      return make(Side::RHS, Verdict::HOLDS, citation::lem0, "s=0 && 0<r<=2");
    return make(Side::RHS, Verdict::FAILS, citation::lem0, "s=0 && r>2");
  }
  if (in_lem0_box(r, s))
    return make(Side::RHS, Verdict::HOLDS, citation::lem0,
                "1<=r<=2 && -1<=s<=1");
  if (r + s < 0.0)
    return make(Side::RHS, Verdict::FAILS, citation::thm1_rhs, "r+s<0");
  if (r + s > 3.0)
    return make(Side::RHS, Verdict::FAILS, citation::thm1_rhs, "r+s>3");
  if (r > 2.0)
    return make(Side::RHS, Verdict::FAILS, citation::thm1_rhs, "r>2");
  if (s < -1.0)
    return make(Side::RHS, Verdict::FAILS, citation::thm1_rhs, "s<-1");
  return make(Side::RHS, Verdict::HOLDS, citation::thm1_rhs,
              "0<=r+s<=3 && r<=2 && s>=-1");
}

Classification classify_lhs(const ExponentPair& exps) {
  const double r = exps.r, s = exps.s;
  if (s == 0.0) {
    if (1.0 <= r && r <= 3.0)
      return make(Side::LHS, Verdict::HOLDS, citation::lem0, "s=0 && 1<=r<=3");
    return make(Side::LHS, Verdict::FAILS, citation::lem0,
                r < 1.0 ? "s=0 && r<1" : "s=0 && r>3");
  }
  if (in_lem0_box(r, s))
    return make(Side::LHS, Verdict::HOLDS, citation::lem0,
                "1<=r<=2 && -1<=s<=1");

  if (-0.5 <= s && s <= 1.0) {
    // complete characterization on this strip
    if (r < 1.0)
      return make(Side::LHS, Verdict::FAILS, citation::thm1_lhs, "r<1");
    if (r + s < 0.0)
      return make(Side::LHS, Verdict::FAILS, citation::thm1_lhs, "r+s<0");
    if (r + s > 3.0)
      return make(Side::LHS, Verdict::FAILS, citation::thm1_lhs, "r+s>3");
    return make(Side::LHS, Verdict::HOLDS, citation::thm1_lhs,
                "-1/2<=s<=1 && 0<=r+s<=3 && r>=1");
  }

  // s < -1/2 or s > 1: necessary conditions in fixed citation order
  std::vector<std::string> passed;
  if (r < 1.0)
    return make(Side::LHS, Verdict::FAILS, citation::lem1_necessary, "r<1");
  passed.push_back("r>=1");
  if (r + s < 0.0)
    return make(Side::LHS, Verdict::FAILS, citation::lem1_necessary, "r+s<0");
  if (r + s > 3.0)
    return make(Side::LHS, Verdict::FAILS, citation::lem1_necessary, "r+s>3");
  passed.push_back("0<=r+s<=3");
  if (r * s > 2.0)
    return make(Side::LHS, Verdict::FAILS, citation::lem1_necessary, "rs>2");
  passed.push_back("rs<=2");
  if (s < -4.0)
    return make(Side::LHS, Verdict::FAILS, citation::remark_s_ge_m4, "s<-4");
  passed.push_back("s>=-4");
  if (s < 0.0) {
    if (0.5 * (r - s) > cf_necessary_bound(r))
      return make(Side::LHS, Verdict::FAILS, citation::eq2_2,
                  "(r-s)/2>eq2.2-bound");
    passed.push_back("(r-s)/2<=eq2.2-bound");
  }

  // sufficiency rules
  if ((r - 1.0) * (r - 2.0) <= 1.0 - s * s)
    return make(Side::LHS, Verdict::HOLDS, citation::thm3_a,
                "(r-1)(r-2)<=1-s^2");
  if (-1.0 < s && s < -0.5 && 2.0 < r && r < 3.0 - s) {
    const double cmax = std::max({c1(r, s), c2(r, s), c3(r, s), c4(r, s)});
    if (cmax <= kCSignTol)
      return make(Side::LHS, Verdict::HOLDS, citation::thm3_b,
                  "-1<s<-1/2 && 2<r<3-s && max(c1..c4)<=0");
  }

  Classification c = make(Side::LHS, Verdict::UNKNOWN, "",
                          "necessary conditions passed; no sufficiency rule "
                          "applies");
  c.passed_necessary = std::move(passed);
  return c;
}

namespace {

RegionCell classify_cell(const RegionMapSpec& spec, long idx) {
  const long n = spec.grid_n;
  const long j = idx / n;  // s index (outer)
  const long i = idx % n;  // r index (inner)
  RegionCell cell;
  cell.r = spec.r_min + static_cast<double>(i) * (spec.r_max - spec.r_min) /
                            static_cast<double>(n - 1);
  cell.s = spec.s_min + static_cast<double>(j) * (spec.s_max - spec.s_min) /
                            static_cast<double>(n - 1);
  if (!(cell.r > cell.s)) {
    cell.degenerate = true;
    return cell;
  }
  const ExponentPair exps(cell.r, cell.s);
  cell.rhs = classify_rhs(exps);
  cell.lhs = classify_lhs(exps);
  return cell;
}

void check_spec(const RegionMapSpec& spec) {
  if (spec.grid_n < 2) throw std::invalid_argument("grid_n must be >= 2");
  if (!std::isfinite(spec.r_min) || !std::isfinite(spec.r_max) ||
      !std::isfinite(spec.s_min) || !std::isfinite(spec.s_max))
    throw std::invalid_argument("ranges must be finite");
  if (!(spec.r_min <= spec.r_max) || !(spec.s_min <= spec.s_max))
    throw std::invalid_argument("ranges must be ordered");
}

}  // namespace

std::vector<RegionCell> region_map(const RegionMapSpec& spec) {
  check_spec(spec);
  const long total = static_cast<long>(spec.grid_n) * spec.grid_n;
  std::vector<RegionCell> cells(total);
#pragma omp parallel for schedule(static)
  for (long idx = 0; idx < total; ++idx) cells[idx] = classify_cell(spec, idx);
  return cells;
}

std::vector<RegionCell> region_map_serial(const RegionMapSpec& spec) {
  check_spec(spec);
  const long total = static_cast<long>(spec.grid_n) * spec.grid_n;
  std::vector<RegionCell> cells(total);
  for (long idx = 0; idx < total; ++idx) cells[idx] = classify_cell(spec, idx);
  return cells;
}

}  // namespace powermean
