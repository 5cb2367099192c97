#ifndef MEDAUG_EVALKIT_MATCHING_H_
#define MEDAUG_EVALKIT_MATCHING_H_

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "medaug/corpus/types.h"

namespace medaug {

// Strict: both offsets equal. Lenient: the offset ranges intersect.
enum class MatchMode { kStrict, kLenient };

std::string_view match_mode_name(MatchMode mode);

// kGreedy walks gold mentions in (start, end) order and gives each the
// unmatched compatible prediction with the largest overlap, ties going to
// the smaller start, then the smaller end.
//
// kMaximum starts from the greedy pairing and then grows it along
// augmenting paths (candidates tried in the same preference order) until no
// gold mention can be matched without unmatching another. The pair count is
// a maximum one-to-one matching. Pure greedy can fall short of that in
// lenient mode even when gold spans are disjoint, e.g. gold [0,10) and
// [10,12) against predictions [8,11) and [0,1).
enum class MatchPolicy { kMaximum, kGreedy };

struct MatchResult {
  std::vector<std::pair<MentionSpan, MentionSpan>> pairs;  // (gold, pred)
  std::vector<MentionSpan> unmatched_gold;
  std::vector<MentionSpan> unmatched_pred;

  std::size_t tp() const { return pairs.size(); }
};

std::size_t overlap_length(const MentionSpan& a, const MentionSpan& b);

// Whether gold and pred may be paired under the mode and task.
bool compatible(const MentionSpan& gold, const MentionSpan& pred, MatchMode mode, TaskMode task);

// One-to-one pairing of the mentions of a single document. The result does
// not depend on the input order of either list.
MatchResult match_spans(const std::vector<MentionSpan>& gold, const std::vector<MentionSpan>& pred,
                        MatchMode mode, TaskMode task,
                        MatchPolicy policy = MatchPolicy::kMaximum);

// True if any two gold mentions intersect.
bool has_overlaps(const std::vector<MentionSpan>& mentions);

}  // namespace medaug

#endif  // MEDAUG_EVALKIT_MATCHING_H_
