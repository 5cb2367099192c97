#ifndef MEDAUG_TEXTPROC_BIO_H_
#define MEDAUG_TEXTPROC_BIO_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "medaug/corpus/types.h"
#include "medaug/textproc/sentences.h"
#include "medaug/textproc/tokenizer.h"

namespace medaug {

// Token-level view of a unit. Token offsets index the unit text; unit_start
// locates the unit in its document.
struct TaggedSequence {
  std::string doc_id;
  std::size_t unit_start = 0;
  std::vector<Token> tokens;
  std::vector<std::string> tags;  // O | B-<Label> | I-<Label>

  bool operator==(const TaggedSequence&) const = default;
};

struct EncodeStats {
  std::size_t snapped = 0;  // mentions widened to token boundaries
  std::size_t dropped = 0;  // mentions covering no token, or colliding with an earlier one
};

struct DecodeStats {
  std::size_t repaired = 0;  // I- tags that could not continue a span, read as B-
};

// Class name used in tags: "Drug" for identification, the event label name
// otherwise.
std::string tag_class(const MentionSpan& mention, TaskMode task);

// O plus B-/I- for every class of the task, in a fixed order.
std::vector<std::string> tag_inventory(TaskMode task);

TaggedSequence encode_bio(const SentenceUnit& unit, TaskMode task, EncodeStats* stats = nullptr);

// Maximal B/I runs become mentions over `text` (the text the token offsets
// index). Mention ids are T1, T2, ... in order. Throws std::invalid_argument
// on tags outside the grammar or a tag/token count mismatch.
std::vector<MentionSpan> decode_bio(const TaggedSequence& seq, std::u32string_view text,
                                    DecodeStats* stats = nullptr);

}  // namespace medaug

#endif  // MEDAUG_TEXTPROC_BIO_H_
