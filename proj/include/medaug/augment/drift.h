#ifndef MEDAUG_AUGMENT_DRIFT_H_
#define MEDAUG_AUGMENT_DRIFT_H_

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "medaug/augment/records.h"
#include "medaug/textproc/sentences.h"

namespace medaug {

// Proportions indexed like kAllEventLabels.
using LabelDistribution = std::array<double, 3>;

enum class DriftVerdict { kPass, kWarn, kFail };

std::string_view drift_verdict_name(DriftVerdict verdict);

struct DriftReport {
  LabelDistribution source{};
  LabelDistribution accepted{};
  std::size_t source_mentions = 0;
  std::size_t accepted_mentions = 0;
  double l1_distance = 0.0;
  double threshold = 0.2;
  DriftVerdict verdict = DriftVerdict::kPass;
};

// Band edges are compared with a 1e-9 slack so that distances which are
// equal in exact arithmetic land in the lower band.
inline constexpr double kDriftSlack = 1e-9;

// Pass when l1 <= threshold/2, Warn when l1 <= threshold, Fail otherwise.
DriftVerdict classify_drift(double l1, double threshold);

DriftReport compare_distributions(const LabelDistribution& source,
                                  const LabelDistribution& accepted, double threshold);

// Label proportions by mention count: source over the units, accepted over
// the realigned mentions of Accepted records. Throws
// AugmentError(kEmptyAcceptedSet) when no record is Accepted.
DriftReport monitor_drift(const std::vector<SentenceUnit>& source_units,
                          const std::vector<AugmentationRecord>& records, double threshold);

std::string drift_to_json(const DriftReport& report);

}  // namespace medaug

#endif  // MEDAUG_AUGMENT_DRIFT_H_
