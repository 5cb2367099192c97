#ifndef MEDAUG_CORPUS_ERRORS_H_
#define MEDAUG_CORPUS_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace medaug {

enum class ParseErrorKind {
  kMalformedLine,
  kDiscontinuousSpan,
  kInvalidOffsets,     // start >= end
  kOffsetOutOfRange,
  kSurfaceMismatch,
  kUnknownLabel,
  kDuplicateMentionId,
  kInvalidEncoding,
  kMissingPair,
  kInvalidManifest,
  kIo,
};

std::string_view parse_error_kind_name(ParseErrorKind kind);

// Every failure while reading annotation data. Exactly one kind per error;
// line_no is 1-based and 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, const std::string& detail, int line_no = 0,
             std::string mention_id = {}, std::string doc_id = {});

  ParseErrorKind kind() const { return kind_; }
  int line_no() const { return line_no_; }
  const std::string& mention_id() const { return mention_id_; }
  const std::string& doc_id() const { return doc_id_; }
  const std::string& detail() const { return detail_; }

  // Returns a copy annotated with the document the error came from.
  ParseError with_doc(const std::string& doc_id) const;

 private:
  ParseErrorKind kind_;
  std::string detail_;
  int line_no_;
  std::string mention_id_;
  std::string doc_id_;
};

}  // namespace medaug

#endif  // MEDAUG_CORPUS_ERRORS_H_
