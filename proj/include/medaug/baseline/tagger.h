#ifndef MEDAUG_BASELINE_TAGGER_H_
#define MEDAUG_BASELINE_TAGGER_H_

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "medaug/baseline/gazetteer.h"
#include "medaug/corpus/types.h"
#include "medaug/textproc/tokenizer.h"

namespace medaug {

struct Rule {
  std::set<std::u32string> triggers;  // case-folded words
  std::size_t window = 3;             // tokens to the left of the mention
  EventLabel label = EventLabel::kUndetermined;
};

// Rules are tried in order and the first whose window holds one of its
// triggers decides the label. The window stops at sentence punctuation.
struct RuleSet {
  std::vector<Rule> rules;
  EventLabel fallback = EventLabel::kUndetermined;

  static RuleSet defaults();

  // Removes every rule emitting `label`.
  RuleSet without(EventLabel label) const;
  // Label for a mention whose first token is tokens[first].
  EventLabel label_for(const std::vector<Token>& tokens, std::size_t first) const;
};

// Longest-match-first gazetteer lookup over token sequences, left to right.
// Returned spans are sorted, non-overlapping and named T1, T2, ...
std::vector<MentionSpan> tag(const std::u32string& text, const Gazetteer& gazetteer,
                             const RuleSet& rules);

}  // namespace medaug

#endif  // MEDAUG_BASELINE_TAGGER_H_
