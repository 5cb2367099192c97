#ifndef MEDAUG_AUGMENT_ALIGNMENT_H_
#define MEDAUG_AUGMENT_ALIGNMENT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "medaug/augment/records.h"
#include "medaug/corpus/types.h"
#include "medaug/textproc/sentences.h"

namespace medaug {

using CharRange = std::pair<std::size_t, std::size_t>;  // [first, second)

// Matches entity_key(needle) against haystack at `pos`: letters compare
// case-folded and a space in the key matches any non-empty whitespace run.
// Returns the end of the match or npos.
std::size_t match_entity_at(std::u32string_view haystack, std::size_t pos,
                            std::u32string_view key);

// Leftmost non-overlapping occurrences of `needle` in `haystack`.
std::vector<CharRange> find_occurrences(std::u32string_view haystack, std::u32string_view needle);

// Accepted when every mention surface of the unit occurs in the candidate at
// least as often as it occurs among the unit's mentions (case-insensitive,
// whitespace-normalized). Otherwise RejectedMissingEntity listing each
// short surface once, in unit order.
Verdict validate_candidate(const SentenceUnit& unit, std::u32string_view candidate);

// Binds each unit mention, in unit order, to the leftmost occurrence of its
// surface that does not overlap an earlier binding. Spans keep the source
// id and label; surfaces take the candidate's casing. Returned in canonical
// mention order. Throws AugmentError(kRealignFailure).
std::vector<MentionSpan> realign_entities(const SentenceUnit& unit, std::u32string_view candidate);

}  // namespace medaug

#endif  // MEDAUG_AUGMENT_ALIGNMENT_H_
