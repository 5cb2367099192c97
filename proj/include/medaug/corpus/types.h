#ifndef MEDAUG_CORPUS_TYPES_H_
#define MEDAUG_CORPUS_TYPES_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace medaug {

// Medication event labels. Drug-only annotations (identification corpora)
// map to kUndetermined with MentionSpan::drug set.
enum class EventLabel { kDisposition, kNoDisposition, kUndetermined };

inline constexpr EventLabel kAllEventLabels[] = {
    EventLabel::kDisposition, EventLabel::kNoDisposition, EventLabel::kUndetermined};

std::string_view label_name(EventLabel label);
std::optional<EventLabel> parse_event_label(std::string_view name);

// Identification ignores labels; EventClassification requires them to agree.
enum class TaskMode { kIdentification, kEventClassification };

std::string_view task_name(TaskMode task);
std::optional<TaskMode> parse_task(std::string_view name);

struct MentionSpan {
  std::string id;
  std::size_t start = 0;  // inclusive, in Unicode scalar values
  std::size_t end = 0;    // exclusive
  std::u32string surface;
  EventLabel label = EventLabel::kUndetermined;
  bool drug = false;  // annotated as `Drug` in the source file

  std::size_t length() const { return end - start; }
  bool operator==(const MentionSpan&) const = default;
};

// Canonical mention order: (start, end, id).
bool mention_less(const MentionSpan& a, const MentionSpan& b);
void sort_mentions(std::vector<MentionSpan>& mentions);

struct AnnotatedDocument {
  std::string doc_id;
  std::u32string text;
  std::vector<MentionSpan> mentions;

  bool operator==(const AnnotatedDocument&) const = default;
};

enum class Split { kTrain, kDev, kTest };

std::string_view split_name(Split split);
std::optional<Split> parse_split(std::string_view name);

struct Corpus {
  std::string name;
  std::map<std::string, AnnotatedDocument> documents;
  std::map<std::string, Split> split;
  // Augmented document id -> source document id.
  std::map<std::string, std::string> augmented_from;

  // Documents without an explicit split are training documents.
  Split split_of(const std::string& doc_id) const;
  bool is_augmented(const std::string& doc_id) const {
    return augmented_from.count(doc_id) != 0;
  }

  bool operator==(const Corpus&) const = default;
};

}  // namespace medaug

#endif  // MEDAUG_CORPUS_TYPES_H_
