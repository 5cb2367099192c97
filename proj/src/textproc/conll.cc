#include "medaug/textproc/conll.h"

#include <charconv>
#include <stdexcept>

#include "medaug/corpus/unicode.h"
#include "medaug/textproc/sentences.h"

namespace medaug {

namespace {

constexpr std::string_view kDocPrefix = "# doc_id = ";

std::size_t to_offset(std::string_view s, int line_no) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("CoNLL line " + std::to_string(line_no) + ": bad offset");
  }
  return v;
}

}  // namespace

std::string write_conll(const std::vector<TaggedSequence>& sequences) {
  std::string out;
  for (const TaggedSequence& seq : sequences) {
    out += kDocPrefix;
    out += seq.doc_id;
    out += '\n';
    for (std::size_t i = 0; i < seq.tokens.size(); ++i) {
      const Token& tok = seq.tokens[i];
      out += encode_utf8(tok.surface);
      out += '\t' + std::to_string(seq.unit_start + tok.start);
      out += '\t' + std::to_string(seq.unit_start + tok.end);
      out += '\t' + seq.tags[i] + '\n';
    }
    out += '\n';
  }
  return out;
}

std::vector<TaggedSequence> read_conll(std::string_view content) {
  std::vector<TaggedSequence> out;
  TaggedSequence current;
  bool open = false;
  int line_no = 0;
  std::size_t pos = 0;
  auto flush = [&] {
    if (open) out.push_back(std::move(current));
    current = TaggedSequence{};
    open = false;
  };
  while (pos < content.size()) {
    std::size_t nl = content.find('\n', pos);
    if (nl == std::string_view::npos) nl = content.size();
    std::string_view line = content.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.substr(0, kDocPrefix.size()) == kDocPrefix) {
      flush();
      current.doc_id = std::string(line.substr(kDocPrefix.size()));
      open = true;
      continue;
    }
    std::vector<std::string_view> fields;
    std::size_t f = 0;
    while (true) {
      std::size_t tab = line.find('\t', f);
      fields.push_back(line.substr(f, tab == std::string_view::npos ? tab : tab - f));
      if (tab == std::string_view::npos) break;
      f = tab + 1;
    }
    if (fields.size() != 4) {
      throw std::invalid_argument("CoNLL line " + std::to_string(line_no) + ": expected 4 fields");
    }
    Token tok{decode_utf8(fields[0]), to_offset(fields[1], line_no), to_offset(fields[2], line_no)};
    current.tokens.push_back(std::move(tok));
    current.tags.emplace_back(fields[3]);
    open = true;
  }
  flush();
  return out;
}

std::map<Split, std::vector<TaggedSequence>> encode_corpus(const Corpus& corpus, TaskMode task,
                                                           EncodeStats* stats) {
  std::map<Split, std::vector<TaggedSequence>> out;
  for (const auto& [id, doc] : corpus.documents) {
    auto& bucket = out[corpus.split_of(id)];
    for (const SentenceUnit& unit : split_sentences(doc)) {
      bucket.push_back(encode_bio(unit, task, stats));
    }
  }
  return out;
}

}  // namespace medaug
