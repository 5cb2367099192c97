#include "medaug/corpus/types.h"

#include <algorithm>
#include <tuple>

#include "medaug/corpus/errors.h"

namespace medaug {

std::string_view label_name(EventLabel label) {
  switch (label) {
    case EventLabel::kDisposition:
      return "Disposition";
    case EventLabel::kNoDisposition:
      return "NoDisposition";
    case EventLabel::kUndetermined:
      return "Undetermined";
  }
  return "Undetermined";
}

std::optional<EventLabel> parse_event_label(std::string_view name) {
  for (EventLabel label : kAllEventLabels) {
    if (label_name(label) == name) return label;
  }
  return std::nullopt;
}

std::string_view task_name(TaskMode task) {
  return task == TaskMode::kIdentification ? "id" : "event";
}

std::optional<TaskMode> parse_task(std::string_view name) {
  if (name == "id" || name == "identification") return TaskMode::kIdentification;
  if (name == "event" || name == "event_classification") return TaskMode::kEventClassification;
  return std::nullopt;
}

bool mention_less(const MentionSpan& a, const MentionSpan& b) {
  return std::tie(a.start, a.end, a.id) < std::tie(b.start, b.end, b.id);
}

void sort_mentions(std::vector<MentionSpan>& mentions) {
  std::stable_sort(mentions.begin(), mentions.end(), mention_less);
}

std::string_view split_name(Split split) {
  switch (split) {
    case Split::kTrain:
      return "train";
    case Split::kDev:
      return "dev";
    case Split::kTest:
      return "test";
  }
  return "train";
}

std::optional<Split> parse_split(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "dev") return Split::kDev;
  if (name == "test") return Split::kTest;
  return std::nullopt;
}

Split Corpus::split_of(const std::string& doc_id) const {
  auto it = split.find(doc_id);
  return it == split.end() ? Split::kTrain : it->second;
}

std::string_view parse_error_kind_name(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformedLine:
      return "MalformedLine";
    case ParseErrorKind::kDiscontinuousSpan:
      return "DiscontinuousSpan";
    case ParseErrorKind::kInvalidOffsets:
      return "InvalidOffsets";
    case ParseErrorKind::kOffsetOutOfRange:
      return "OffsetOutOfRange";
    case ParseErrorKind::kSurfaceMismatch:
      return "SurfaceMismatch";
    case ParseErrorKind::kUnknownLabel:
      return "UnknownLabel";
    case ParseErrorKind::kDuplicateMentionId:
      return "DuplicateMentionId";
    case ParseErrorKind::kInvalidEncoding:
      return "InvalidEncoding";
    case ParseErrorKind::kMissingPair:
      return "MissingPair";
    case ParseErrorKind::kInvalidManifest:
      return "InvalidManifest";
    case ParseErrorKind::kIo:
      return "Io";
  }
  return "Unknown";
}

namespace {

std::string format_parse_error(ParseErrorKind kind, const std::string& detail, int line_no,
                               const std::string& mention_id, const std::string& doc_id) {
  std::string msg(parse_error_kind_name(kind));
  std::string where;
  if (!doc_id.empty()) where += "doc " + doc_id;
  if (line_no > 0) where += (where.empty() ? "" : ", ") + std::string("line ") + std::to_string(line_no);
  if (!mention_id.empty()) where += (where.empty() ? "" : ", ") + mention_id;
  if (!where.empty()) msg += "(" + where + ")";
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, const std::string& detail, int line_no,
                       std::string mention_id, std::string doc_id)
    : std::runtime_error(format_parse_error(kind, detail, line_no, mention_id, doc_id)),
      kind_(kind),
      detail_(detail),
      line_no_(line_no),
      mention_id_(std::move(mention_id)),
      doc_id_(std::move(doc_id)) {}

ParseError ParseError::with_doc(const std::string& doc_id) const {
  return ParseError(kind_, detail_, line_no_, mention_id_, doc_id);
}

}  // namespace medaug
