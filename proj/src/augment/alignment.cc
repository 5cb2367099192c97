#include "medaug/augment/alignment.h"

#include <map>

#include "medaug/augment/errors.h"
#include "medaug/corpus/unicode.h"

namespace medaug {

std::size_t match_entity_at(std::u32string_view haystack, std::size_t pos,
                            std::u32string_view key) {
  if (key.empty()) return std::u32string_view::npos;
  std::size_t h = pos;
  for (char32_t k : key) {
    if (h >= haystack.size()) return std::u32string_view::npos;
    if (k == U' ') {
      if (!is_space(haystack[h])) return std::u32string_view::npos;
      while (h < haystack.size() && is_space(haystack[h])) ++h;
      continue;
    }
    if (fold_case(haystack[h]) != k) return std::u32string_view::npos;
    ++h;
  }
  return h;
}

std::vector<CharRange> find_occurrences(std::u32string_view haystack, std::u32string_view needle) {
  const std::u32string key = entity_key(needle);
  std::vector<CharRange> out;
  std::size_t pos = 0;
  while (pos < haystack.size()) {
    const std::size_t end = match_entity_at(haystack, pos, key);
    if (end == std::u32string_view::npos) {
      ++pos;
      continue;
    }
    out.emplace_back(pos, end);
    pos = end;
  }
  return out;
}

Verdict validate_candidate(const SentenceUnit& unit, std::u32string_view candidate) {
  // key -> (required count, first surface seen)
  std::map<std::u32string, std::pair<std::size_t, std::u32string>> required;
  std::vector<std::u32string> order;
  for (const MentionSpan& m : unit.mentions) {
    const std::u32string key = entity_key(m.surface);
    auto [it, inserted] = required.try_emplace(key, 0, m.surface);
    if (inserted) order.push_back(key);
    ++it->second.first;
  }
  Verdict v;
  for (const std::u32string& key : order) {
    const auto& [count, surface] = required[key];
    if (find_occurrences(candidate, surface).size() < count) v.missing.push_back(surface);
  }
  if (!v.missing.empty()) {
    v.kind = VerdictKind::kRejectedMissingEntity;
    for (std::size_t i = 0; i < v.missing.size(); ++i) {
      v.message += (i ? ", " : "missing: ") + encode_utf8(v.missing[i]);
    }
  }
  return v;
}

std::vector<MentionSpan> realign_entities(const SentenceUnit& unit, std::u32string_view candidate) {
  std::vector<MentionSpan> source = unit.mentions;
  sort_mentions(source);
  std::vector<MentionSpan> bound;
  for (const MentionSpan& m : source) {
    const std::u32string key = entity_key(m.surface);
    bool placed = false;
    for (std::size_t pos = 0; pos < candidate.size() && !placed; ++pos) {
      const std::size_t end = match_entity_at(candidate, pos, key);
      if (end == std::u32string_view::npos) continue;
      bool used = false;
      for (const MentionSpan& b : bound) used = used || (pos < b.end && b.start < end);
      if (used) continue;
      MentionSpan r = m;
      r.start = pos;
      r.end = end;
      r.surface = std::u32string(candidate.substr(pos, end - pos));
      bound.push_back(std::move(r));
      placed = true;
    }
    if (!placed) {
      throw AugmentError(AugmentError::Kind::kRealignFailure,
                         "RealignFailure(" + m.id + " '" + encode_utf8(m.surface) + "')");
    }
  }
  sort_mentions(bound);
  return bound;
}

}  // namespace medaug
