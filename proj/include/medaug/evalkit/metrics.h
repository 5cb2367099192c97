#ifndef MEDAUG_EVALKIT_METRICS_H_
#define MEDAUG_EVALKIT_METRICS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "medaug/corpus/types.h"
#include "medaug/evalkit/matching.h"

namespace medaug {

// Precision, recall and F1 with every 0/0 taken as 0.
struct PRF {
  double precision = 0.0;
  double recall = 0.0;
  double fscore = 0.0;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  static PRF from_counts(std::size_t tp, std::size_t fp, std::size_t fn);
  bool operator==(const PRF&) const = default;
};

struct MetricsBlock {
  PRF micro;
  // Unweighted mean of per-class precision, recall and F. Its counts are the
  // sums over the classes that entered the mean.
  PRF macro;
  // Event label names for event classification; a single "Drug" class for
  // identification.
  std::map<std::string, PRF> per_class;

  bool operator==(const MetricsBlock&) const = default;
};

struct MetricsReport {
  TaskMode task = TaskMode::kEventClassification;
  MatchPolicy policy = MatchPolicy::kMaximum;
  bool macro_excludes_absent = true;
  MetricsBlock strict;
  MetricsBlock lenient;
  std::size_t documents = 0;
  std::size_t gold_mentions = 0;
  std::size_t predicted_mentions = 0;
  // Documents whose gold mentions intersect; only there can greedy and
  // maximum lenient pairing disagree on the gold side.
  std::size_t overlapping_gold_documents = 0;

  const MetricsBlock& block(MatchMode mode) const {
    return mode == MatchMode::kStrict ? strict : lenient;
  }
  bool operator==(const MetricsReport&) const = default;
};

struct ScoreOptions {
  // Leave classes with neither gold nor predicted mentions out of the macro
  // mean. When false, every class of the task is averaged.
  bool macro_exclude_absent = true;
  MatchPolicy policy = MatchPolicy::kMaximum;
  // Score only documents of this split.
  std::optional<Split> split;
  std::size_t jobs = 1;
};

class ScoreError : public std::runtime_error {
 public:
  enum class Kind { kUnknownDocument, kInvalidSpan, kTaskMismatch };

  ScoreError(Kind kind, const std::string& message, std::string doc_id = {})
      : std::runtime_error(message), kind_(kind), doc_id_(std::move(doc_id)) {}

  Kind kind() const { return kind_; }
  const std::string& doc_id() const { return doc_id_; }

 private:
  Kind kind_;
  std::string doc_id_;
};

using Predictions = std::map<std::string, std::vector<MentionSpan>>;

// Documents without predictions contribute only false negatives.
MetricsReport score(const Corpus& gold, const Predictions& predictions, TaskMode task,
                    const ScoreOptions& options = {});

// Macro average over the given per-class scores.
PRF macro_average(const std::map<std::string, PRF>& per_class, bool exclude_absent);

struct DeltaEntry {
  std::string key;  // e.g. "strict.micro.fscore", "lenient.class.Disposition.recall"
  double a = 0.0;
  double b = 0.0;
  double delta = 0.0;  // b - a
  bool changed = false;
};

struct ReportDelta {
  TaskMode task = TaskMode::kEventClassification;
  std::vector<DeltaEntry> entries;

  const DeltaEntry* find(const std::string& key) const;
  bool any_changed() const;
};

// Throws ScoreError(kTaskMismatch) when the reports score different tasks.
ReportDelta diff_reports(const MetricsReport& a, const MetricsReport& b);

}  // namespace medaug

#endif  // MEDAUG_EVALKIT_METRICS_H_
