#include "medaug/baseline/tagger.h"

#include <algorithm>

#include "medaug/corpus/unicode.h"
#include "medaug/textproc/tokenizer.h"

namespace medaug {

RuleSet RuleSet::defaults() {
  RuleSet r;
  r.rules.push_back({{U"start", U"begin", U"increase", U"decrease", U"stop", U"discontinue",
                      U"switch", U"hold"},
                     3,
                     EventLabel::kDisposition});
  r.rules.push_back({{U"continue", U"takes", U"remains", U"maintain"}, 3, EventLabel::kNoDisposition});
  return r;
}

RuleSet RuleSet::without(EventLabel label) const {
  RuleSet r = *this;
  r.rules.erase(std::remove_if(r.rules.begin(), r.rules.end(),
                               [&](const Rule& rule) { return rule.label == label; }),
                r.rules.end());
  return r;
}

namespace {

bool sentence_stop(const Token& t) {
  return t.surface == U"." || t.surface == U"!" || t.surface == U"?";
}

}  // namespace

EventLabel RuleSet::label_for(const std::vector<Token>& tokens, std::size_t first) const {
  for (const Rule& rule : rules) {
    for (std::size_t k = 1; k <= rule.window && k <= first; ++k) {
      const Token& t = tokens[first - k];
      if (sentence_stop(t)) break;
      if (rule.triggers.count(fold_case(t.surface))) return rule.label;
    }
  }
  return fallback;
}

std::vector<MentionSpan> tag(const std::u32string& text, const Gazetteer& gazetteer,
                             const RuleSet& rules) {
  const std::vector<Token> tokens = tokenize(text);
  std::vector<MentionSpan> spans;
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t match_len = 0;
    const std::size_t longest = std::min(gazetteer.max_tokens, tokens.size() - i);
    for (std::size_t len = longest; len >= 1; --len) {
      const Token& last = tokens[i + len - 1];
      const std::u32string_view slice =
          std::u32string_view(text).substr(tokens[i].start, last.end - tokens[i].start);
      if (gazetteer.contains(slice)) {
        match_len = len;
        break;
      }
    }
    if (match_len == 0) {
      ++i;
      continue;
    }
    MentionSpan m;
    m.id = "T" + std::to_string(spans.size() + 1);
    m.start = tokens[i].start;
    m.end = tokens[i + match_len - 1].end;
    m.surface = text.substr(m.start, m.end - m.start);
    m.label = rules.label_for(tokens, i);
    spans.push_back(std::move(m));
    i += match_len;
  }
  return spans;
}

}  // namespace medaug
