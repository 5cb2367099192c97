#include "medaug/textproc/bio.h"

#include <stdexcept>

namespace medaug {

std::string tag_class(const MentionSpan& mention, TaskMode task) {
  if (task == TaskMode::kIdentification) return "Drug";
  return std::string(label_name(mention.label));
}

std::vector<std::string> tag_inventory(TaskMode task) {
  std::vector<std::string> tags = {"O"};
  if (task == TaskMode::kIdentification) {
    tags.push_back("B-Drug");
    tags.push_back("I-Drug");
    return tags;
  }
  for (EventLabel label : kAllEventLabels) {
    tags.push_back("B-" + std::string(label_name(label)));
    tags.push_back("I-" + std::string(label_name(label)));
  }
  return tags;
}

TaggedSequence encode_bio(const SentenceUnit& unit, TaskMode task, EncodeStats* stats) {
  TaggedSequence seq;
  seq.doc_id = unit.doc_id;
  seq.unit_start = unit.start;
  seq.tokens = tokenize(unit.text);
  seq.tags.assign(seq.tokens.size(), "O");

  EncodeStats local;
  for (const MentionSpan& m : unit.mentions) {
    std::size_t first = seq.tokens.size();
    std::size_t last = 0;
    for (std::size_t t = 0; t < seq.tokens.size(); ++t) {
      if (seq.tokens[t].end > m.start && seq.tokens[t].start < m.end) {
        if (first == seq.tokens.size()) first = t;
        last = t;
      }
    }
    if (first == seq.tokens.size()) {
      ++local.dropped;
      continue;
    }
    bool free = true;
    for (std::size_t t = first; t <= last; ++t) free = free && seq.tags[t] == "O";
    if (!free) {
      ++local.dropped;
      continue;
    }
    if (seq.tokens[first].start != m.start || seq.tokens[last].end != m.end) ++local.snapped;
    const std::string cls = tag_class(m, task);
    seq.tags[first] = "B-" + cls;
    for (std::size_t t = first + 1; t <= last; ++t) seq.tags[t] = "I-" + cls;
  }
  if (stats) {
    stats->snapped += local.snapped;
    stats->dropped += local.dropped;
  }
  return seq;
}

namespace {

struct ParsedTag {
  char kind;  // 'O', 'B' or 'I'
  std::string cls;
};

ParsedTag parse_tag(const std::string& tag) {
  if (tag == "O") return {'O', {}};
  if (tag.size() > 2 && (tag[0] == 'B' || tag[0] == 'I') && tag[1] == '-') {
    std::string cls = tag.substr(2);
    if (cls == "Drug" || parse_event_label(cls)) return {tag[0], std::move(cls)};
  }
  throw std::invalid_argument("invalid BIO tag '" + tag + "'");
}

}  // namespace

std::vector<MentionSpan> decode_bio(const TaggedSequence& seq, std::u32string_view text,
                                    DecodeStats* stats) {
  if (seq.tags.size() != seq.tokens.size()) {
    throw std::invalid_argument("tag count does not match token count");
  }
  std::vector<MentionSpan> spans;
  std::size_t repaired = 0;
  std::string open_cls;  // class of the span being extended, empty if none

  for (std::size_t t = 0; t < seq.tokens.size(); ++t) {
    ParsedTag tag = parse_tag(seq.tags[t]);
    if (tag.kind == 'O') {
      open_cls.clear();
      continue;
    }
    if (tag.kind == 'I' && tag.cls == open_cls) {
      spans.back().end = seq.tokens[t].end;
      continue;
    }
    if (tag.kind == 'I') ++repaired;

    MentionSpan m;
    m.start = seq.tokens[t].start;
    m.end = seq.tokens[t].end;
    if (tag.cls == "Drug") {
      m.label = EventLabel::kUndetermined;
      m.drug = true;
    } else {
      m.label = *parse_event_label(tag.cls);
    }
    spans.push_back(std::move(m));
    open_cls = tag.cls;
  }

  for (std::size_t i = 0; i < spans.size(); ++i) {
    MentionSpan& m = spans[i];
    if (m.end > text.size()) throw std::invalid_argument("token offsets exceed text");
    m.id = "T" + std::to_string(i + 1);
    m.surface = std::u32string(text.substr(m.start, m.end - m.start));
  }
  if (stats) stats->repaired += repaired;
  return spans;
}

}  // namespace medaug
