#ifndef MEDAUG_AUGMENT_RECORDS_H_
#define MEDAUG_AUGMENT_RECORDS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "medaug/corpus/types.h"

namespace medaug {

inline constexpr int kRecordSchemaVersion = 1;

enum class VerdictKind {
  kAccepted,
  kRejectedMissingEntity,
  kRejectedRealignFailure,
  kProviderError,
};

std::string_view verdict_kind_name(VerdictKind kind);

struct Verdict {
  VerdictKind kind = VerdictKind::kAccepted;
  std::vector<std::u32string> missing;  // kRejectedMissingEntity
  std::string error_kind;               // kProviderError: RateLimited, Timeout, ...
  std::string message;

  bool accepted() const { return kind == VerdictKind::kAccepted; }
  bool operator==(const Verdict&) const = default;
};

// One provider exchange for one sampled unit.
struct AugmentationRecord {
  std::string record_id;
  std::string source_doc_id;
  std::size_t unit_start = 0;
  std::size_t unit_end = 0;
  std::u32string unit_text;
  std::vector<MentionSpan> source_mentions;  // unit-local offsets
  int attempt = 0;
  std::string prompt;
  std::string candidate_text;  // provider output, verbatim
  // Offsets index the NFC form of candidate_text.
  std::vector<MentionSpan> realigned_mentions;
  Verdict verdict;

  bool operator==(const AugmentationRecord&) const = default;
};

// One JSON object per line, keys in a fixed order.
std::string record_to_json_line(const AugmentationRecord& record);
std::string records_to_jsonl(const std::vector<AugmentationRecord>& records);

// Throws AugmentError(kMalformedRecord).
AugmentationRecord record_from_json(std::string_view line);
std::vector<AugmentationRecord> records_from_jsonl(std::string_view content);

}  // namespace medaug

#endif  // MEDAUG_AUGMENT_RECORDS_H_
