#ifndef MEDAUG_CORPUS_STANDOFF_H_
#define MEDAUG_CORPUS_STANDOFF_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "medaug/corpus/errors.h"
#include "medaug/corpus/types.h"

namespace medaug {

// Standoff lines look like
//
//   T<digits> TAB <Label> SP <start> SP <end> TAB <surface>
//
// with Label one of Disposition, NoDisposition, Undetermined or Drug.
// Offsets count Unicode scalar values of the NFC-normalized text. Newlines
// inside a mention are written as spaces in the surface field.

// Decodes and NFC-normalizes `text_utf8`, then parses `standoff` against it.
// Throws ParseError; never returns a partial document.
AnnotatedDocument parse_document(const std::string& doc_id, std::string_view text_utf8,
                                 std::string_view standoff);

// Same, for text that is already decoded and normalized.
AnnotatedDocument parse_document(const std::string& doc_id, std::u32string text,
                                 std::string_view standoff);

// Like parse_document, but a bad line is appended to `errors` and skipped
// instead of aborting. Returns nullopt only when the text cannot be decoded.
std::optional<AnnotatedDocument> parse_document_collecting(const std::string& doc_id,
                                                           std::string_view text_utf8,
                                                           std::string_view standoff,
                                                           std::vector<ParseError>* errors);

std::string serialize_annotations(const AnnotatedDocument& doc);

}  // namespace medaug

#endif  // MEDAUG_CORPUS_STANDOFF_H_
