#pragma once

// Schema-versioned text records for the CLI: tab-separated rows and one JSON
// object per line. Every emitted record parses back to the same values.

#include <string>
#include <vector>

#include "lspace/admissibility.hpp"
#include "lspace/enumerate.hpp"
#include "lspace/invariants.hpp"

namespace lspace::records {

inline constexpr const char* schema = "lspace/1";

/// Column header for classification rows.
std::string classification_tsv_header();
std::string to_tsv(const ClassificationRow& row);
/// Rebuilds the row, recomputing the polynomial from the gap column.
ClassificationRow classification_from_tsv(const std::string& line);

std::string to_json_line(const ClassificationRow& row);
ClassificationRow classification_from_json_line(const std::string& line);

std::string to_json_line(const FilterReport& report);
FilterReport filter_report_from_json_line(const std::string& line);

std::string to_json_line(const InvariantProfile& profile);
InvariantProfile profile_from_json_line(const std::string& line);

/// Parses the output of FilterReport::witness_text back into the report.
void apply_witness(FilterReport& report, const std::string& text);

}  // namespace lspace::records
