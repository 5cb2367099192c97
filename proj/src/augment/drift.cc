#include "medaug/augment/drift.h"

#include <cmath>

#include "json.hpp"
#include "medaug/augment/errors.h"

namespace medaug {

std::string_view drift_verdict_name(DriftVerdict verdict) {
  switch (verdict) {
    case DriftVerdict::kPass:
      return "Pass";
    case DriftVerdict::kWarn:
      return "Warn";
    case DriftVerdict::kFail:
      return "Fail";
  }
  return "Fail";
}

DriftVerdict classify_drift(double l1, double threshold) {
  if (l1 <= threshold / 2 + kDriftSlack) return DriftVerdict::kPass;
  if (l1 <= threshold + kDriftSlack) return DriftVerdict::kWarn;
  return DriftVerdict::kFail;
}

DriftReport compare_distributions(const LabelDistribution& source,
                                  const LabelDistribution& accepted, double threshold) {
  DriftReport r;
  r.source = source;
  r.accepted = accepted;
  r.threshold = threshold;
  for (std::size_t i = 0; i < source.size(); ++i) r.l1_distance += std::fabs(source[i] - accepted[i]);
  r.verdict = classify_drift(r.l1_distance, threshold);
  return r;
}

namespace {

std::size_t label_index(EventLabel label) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (kAllEventLabels[i] == label) return i;
  }
  return 2;
}

LabelDistribution normalize(const std::array<std::size_t, 3>& counts, std::size_t total) {
  LabelDistribution d{};
  for (std::size_t i = 0; i < 3; ++i) {
    d[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  }
  return d;
}

}  // namespace

DriftReport monitor_drift(const std::vector<SentenceUnit>& source_units,
                          const std::vector<AugmentationRecord>& records, double threshold) {
  std::array<std::size_t, 3> src{}, acc{};
  std::size_t src_total = 0, acc_total = 0, accepted_records = 0;
  for (const SentenceUnit& u : source_units) {
    for (const MentionSpan& m : u.mentions) {
      ++src[label_index(m.label)];
      ++src_total;
    }
  }
  for (const AugmentationRecord& r : records) {
    if (!r.verdict.accepted()) continue;
    ++accepted_records;
    for (const MentionSpan& m : r.realigned_mentions) {
      ++acc[label_index(m.label)];
      ++acc_total;
    }
  }
  if (accepted_records == 0 || acc_total == 0) {
    throw AugmentError(AugmentError::Kind::kEmptyAcceptedSet, "EmptyAcceptedSet: nothing to compare");
  }
  if (src_total == 0) {
    throw AugmentError(AugmentError::Kind::kNoEligibleUnits, "source units hold no mentions");
  }
  DriftReport r = compare_distributions(normalize(src, src_total), normalize(acc, acc_total), threshold);
  r.source_mentions = src_total;
  r.accepted_mentions = acc_total;
  return r;
}

std::string drift_to_json(const DriftReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  auto dist = [](const LabelDistribution& d) {
    nlohmann::ordered_json o;
    for (std::size_t i = 0; i < 3; ++i) o[std::string(label_name(kAllEventLabels[i]))] = d[i];
    return o;
  };
  j["source"] = dist(r.source);
  j["accepted"] = dist(r.accepted);
  j["source_mentions"] = r.source_mentions;
  j["accepted_mentions"] = r.accepted_mentions;
  j["l1_distance"] = r.l1_distance;
  j["threshold"] = r.threshold;
  j["verdict"] = drift_verdict_name(r.verdict);
  return j.dump(2) + "\n";
}

}  // namespace medaug
