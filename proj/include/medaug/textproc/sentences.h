#ifndef MEDAUG_TEXTPROC_SENTENCES_H_
#define MEDAUG_TEXTPROC_SENTENCES_H_

#include <cstddef>
#include <string>
#include <vector>

#include "medaug/corpus/types.h"

namespace medaug {

// A sentence-sized slice of a document. Mentions are re-based so that their
// offsets index `text`.
struct SentenceUnit {
  std::string doc_id;
  std::size_t start = 0;  // offsets of the slice in the document
  std::size_t end = 0;
  std::u32string text;
  std::vector<MentionSpan> mentions;

  bool operator==(const SentenceUnit&) const = default;
};

// Rule-based segmentation. A boundary follows '.', '!' or '?' when the next
// characters are whitespace and then an uppercase letter or digit; a newline
// followed by optional whitespace and an uppercase letter or digit is also a
// boundary. Boundaries that would cut a mention are dropped. Units are
// trimmed of surrounding whitespace; whitespace-only stretches produce no
// unit.
std::vector<SentenceUnit> split_sentences(const AnnotatedDocument& doc);

}  // namespace medaug

#endif  // MEDAUG_TEXTPROC_SENTENCES_H_
