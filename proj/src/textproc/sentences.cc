#include "medaug/textproc/sentences.h"

#include <algorithm>

#include "medaug/corpus/unicode.h"

namespace medaug {
namespace {

bool opens_sentence(char32_t c) { return is_upper(c) || is_digit(c); }

// Returns the offset where the next sentence would start if a boundary is
// placed right after position i (exclusive end of the current sentence),
// or npos.
std::size_t boundary_after(const std::u32string& text, std::size_t i) {
  const char32_t c = text[i];
  std::size_t j = i + 1;
  if (c == U'.' || c == U'!' || c == U'?') {
    if (j >= text.size() || !is_space(text[j])) return std::u32string::npos;
  } else if (c != U'\n') {
    return std::u32string::npos;
  }
  while (j < text.size() && is_space(text[j])) ++j;
  if (j < text.size() && opens_sentence(text[j])) return j;
  return std::u32string::npos;
}

bool cuts_mention(const AnnotatedDocument& doc, std::size_t gap_begin, std::size_t gap_end) {
  for (const MentionSpan& m : doc.mentions) {
    if (m.start < gap_end && m.end > gap_begin) return true;
  }
  return false;
}

void emit(const AnnotatedDocument& doc, std::size_t raw_begin, std::size_t raw_end,
          std::vector<SentenceUnit>* units) {
  std::size_t begin = raw_begin;
  std::size_t end = raw_end;
  while (begin < end && is_space(doc.text[begin])) ++begin;
  while (end > begin && is_space(doc.text[end - 1])) --end;
  // Trimming never drops whitespace that belongs to a mention.
  for (const MentionSpan& m : doc.mentions) {
    if (m.start >= raw_begin && m.end <= raw_end) {
      if (begin == end) {
        begin = m.start;
        end = m.end;
      }
      begin = std::min(begin, m.start);
      end = std::max(end, m.end);
    }
  }
  if (begin == end) return;
  SentenceUnit unit;
  unit.doc_id = doc.doc_id;
  unit.start = begin;
  unit.end = end;
  unit.text = doc.text.substr(begin, end - begin);
  for (const MentionSpan& m : doc.mentions) {
    if (m.start >= begin && m.end <= end) {
      MentionSpan local = m;
      local.start -= begin;
      local.end -= begin;
      unit.mentions.push_back(std::move(local));
    }
  }
  sort_mentions(unit.mentions);
  units->push_back(std::move(unit));
}

}  // namespace

std::vector<SentenceUnit> split_sentences(const AnnotatedDocument& doc) {
  std::vector<SentenceUnit> units;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < doc.text.size(); ++i) {
    const std::size_t next = boundary_after(doc.text, i);
    if (next == std::u32string::npos) continue;
    const std::size_t end = doc.text[i] == U'\n' ? i : i + 1;
    if (cuts_mention(doc, end, next) || end <= begin) continue;
    emit(doc, begin, end, &units);
    begin = next;
    i = next - 1;
  }
  emit(doc, begin, doc.text.size(), &units);
  return units;
}

}  // namespace medaug
