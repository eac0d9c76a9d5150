#pragma once

#include "cosmetic/engine.hpp"

#include <span>
#include <string>
#include <string_view>

namespace cosmetic {

inline constexpr int kReportSchemaVersion = 1;

enum class ReportFormat { json, csv, markdown };

/// Throws std::invalid_argument for anything but json, csv, markdown.
ReportFormat parse_report_format(std::string_view name);

// All emitters are deterministic: same input, same bytes.

std::string emit_report(const ClassificationTable& table, ReportFormat format);
std::string emit_report(std::span<const CandidateFamily> families, ReportFormat format);
std::string emit_report(std::span<const PairResult> pairs, const FilterSet& filters, ReportFormat format);

}  // namespace cosmetic
