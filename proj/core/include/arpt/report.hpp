#pragma once

#include "arpt/classifier.hpp"

#include <stdexcept>
#include <string>

namespace arpt {

class report_parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// JSON document for one report.  Integers outside the int64 range are
/// written as decimal strings; points are {"x": [a_num, a_den, b_num, b_den],
/// "y": [...], "d": d} or "infinity".
std::string emit_json(const ClassificationReport& report, int indent = 2);
/// Inverse of emit_json.  Throws report_parse_error on malformed input.
ClassificationReport parse_json(const std::string& text);

/// Tab-separated columns: label, semistable, rat_torsion, quad_torsion, mu3,
/// n_ar_points, max_ar_order, consistent.
std::string tsv_header();
std::string tsv_row(const ClassificationReport& report);

ReductionKind reduction_kind_from_string(const std::string& s);

}  // namespace arpt
