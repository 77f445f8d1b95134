#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fibrekit/criteria.hpp"
#include "fibrekit/input.hpp"

namespace fibrekit {

/// "(9, 0, 1)"
std::string tuple_text(const std::vector<Int>& values);

/// "PASS  fiber-cm  g1 = sum ...  [lhs 0, rhs 0]"
std::string criterion_line(const CriterionResult& c);

/// Hilbert table as aligned columns n, H, H_K, H_F.
std::string table_text(const HilbertTable& table);

/// "h(t) over (1-t)^d; ..." with the Cohen-Macaulay flag for a negative coefficient.
std::string series_text(const SeriesNumerator& s, bool k_is_maximal = true);

/// Full human-readable analysis.
std::string render_text(const AnalysisReport& report);

/// Structured report (JSON, two-space indent). `doc` is embedded verbatim as
/// canonical input text under "input"; see docs/report-schema.md.
std::string render_tree(const AnalysisReport& report, const InputDocument& doc);

/// Reads the "input" member back out of a structured report.
InputDocument parse_report_input(std::string_view json_text);

}  // namespace fibrekit
