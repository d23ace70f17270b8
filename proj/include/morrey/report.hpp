#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "morrey/norm.hpp"

namespace morrey {

enum class ReportFormat { table, json, csv };

/// Accepts "table", "json", "csv"; throws ArgumentError otherwise.
ReportFormat parse_report_format(std::string_view name);

/// Everything one CLI invocation produced. Summary values and result cells are
/// scalars (numbers, strings, booleans) or flat arrays of scalars.
struct RunReport {
  std::string command;
  std::vector<std::string> argv;
  std::optional<SpaceParams> space;
  nlohmann::ordered_json tolerances = nlohmann::ordered_json::object();
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  /// Rows with identical keys, in column order.
  std::vector<nlohmann::ordered_json> results;
  /// Free-form lines appended to the human table only.
  std::vector<std::string> notes;
  double elapsed_seconds = 0.0;
};

/// Self-describing JSON document. Timing is omitted unless requested so that
/// identical invocations produce identical bytes.
std::string to_json(const RunReport& report, bool include_timing = false);
/// Header line plus one line per result row, preceded by '#' metadata lines.
std::string to_csv(const RunReport& report, bool include_timing = false);
std::string to_table(const RunReport& report);

std::string render(const RunReport& report, ReportFormat format, bool include_timing = false);

}  // namespace morrey
