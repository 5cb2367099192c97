#ifndef MEDAUG_EVALKIT_REPORT_H_
#define MEDAUG_EVALKIT_REPORT_H_

#include <string>
#include <string_view>

#include "medaug/evalkit/metrics.h"

namespace medaug {

inline constexpr int kReportSchemaVersion = 1;

// Stable JSON: fixed key order, shortest round-trip number formatting,
// trailing newline. Identical reports serialize to identical bytes.
std::string report_to_json(const MetricsReport& report);

// Throws std::invalid_argument on documents that are not a report of a
// known schema version.
MetricsReport report_from_json(std::string_view json);

// Strict block then lenient block, precision/recall/F columns, four decimals.
std::string format_report_table(const MetricsReport& report);

std::string delta_to_json(const ReportDelta& delta);
std::string format_delta_table(const ReportDelta& delta);

}  // namespace medaug

#endif  // MEDAUG_EVALKIT_REPORT_H_
