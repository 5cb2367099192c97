#ifndef MEDAUG_TEXTPROC_CONLL_H_
#define MEDAUG_TEXTPROC_CONLL_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "medaug/corpus/types.h"
#include "medaug/textproc/bio.h"

namespace medaug {

// Token-classification export. Each unit is written as
//
//   # doc_id = <id>
//   <surface> TAB <start> TAB <end> TAB <tag>
//   ...
//
// followed by a blank line. Offsets are document offsets.
std::string write_conll(const std::vector<TaggedSequence>& sequences);

// Inverse of write_conll. Returned sequences carry document offsets in their
// tokens and unit_start = 0. Throws std::invalid_argument on malformed input.
std::vector<TaggedSequence> read_conll(std::string_view content);

// Sentence-splits and encodes every document, grouped by split.
std::map<Split, std::vector<TaggedSequence>> encode_corpus(const Corpus& corpus, TaskMode task,
                                                           EncodeStats* stats = nullptr);

}  // namespace medaug

#endif  // MEDAUG_TEXTPROC_CONLL_H_
