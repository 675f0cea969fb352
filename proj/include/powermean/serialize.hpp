#pragma once

// Text formats for the command-line front end: sample files, the region-map
// CSV, and JSON for classifications, bound checks and certificates.
// Numbers are printed with 17 significant digits so values round-trip
// exactly.

#include <string>
#include <vector>

#include "powermean/classify.hpp"
#include "powermean/search.hpp"

namespace powermean {

std::string format_double(double v);  // %.17g

// One "value,weight" pair per line; '#' starts a comment, blank lines are
// ignored.  Throws std::runtime_error listing offending line numbers.
WeightedSample parse_sample_file(const std::string& path);
WeightedSample parse_sample_text(const std::string& text,
                                 const std::string& origin);

std::string region_map_csv(const RegionMapSpec& spec,
                           const std::vector<RegionCell>& cells);

std::string classification_json(const ExponentPair& exps,
                                const Classification& rhs,
                                const Classification& lhs);

std::string bound_check_json(const BoundCheck& check, bool lhs_ok,
                             bool rhs_ok);
std::string bound_check_text(const BoundCheck& check, bool lhs_ok,
                             bool rhs_ok);

std::string certificate_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& json_text);

}  // namespace powermean
