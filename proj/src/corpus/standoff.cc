#include "medaug/corpus/standoff.h"

#include <charconv>
#include <set>
#include <vector>

#include "medaug/corpus/errors.h"
#include "medaug/corpus/unicode.h"

namespace medaug {
namespace {

std::u32string newlines_to_spaces(std::u32string_view s) {
  std::u32string out(s);
  for (char32_t& c : out) {
    if (c == U'\n' || c == U'\r') c = U' ';
  }
  return out;
}

bool valid_mention_id(std::string_view id) {
  if (id.size() < 2 || id[0] != 'T') return false;
  for (char c : id.substr(1)) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

bool parse_offset(std::string_view s, std::size_t* out) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string_view> split_spaces(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(' ', pos);
    if (next == std::string_view::npos) next = s.size();
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return parts;
}

bool blank(std::string_view line) {
  for (char c : line) {
    if (c != ' ' && c != '\t') return false;
  }
  return true;
}

MentionSpan parse_line(std::string_view line, int line_no, const std::u32string& text) {
  const std::size_t tab1 = line.find('\t');
  const std::size_t tab2 = tab1 == std::string_view::npos ? tab1 : line.find('\t', tab1 + 1);
  if (tab2 == std::string_view::npos) {
    throw ParseError(ParseErrorKind::kMalformedLine, "expected three tab-separated fields", line_no);
  }
  const std::string_view id = line.substr(0, tab1);
  const std::string_view middle = line.substr(tab1 + 1, tab2 - tab1 - 1);
  const std::string_view surface_field = line.substr(tab2 + 1);

  if (!valid_mention_id(id)) {
    throw ParseError(ParseErrorKind::kMalformedLine,
                     "mention id must be T followed by digits, got '" + std::string(id) + "'",
                     line_no);
  }
  MentionSpan m;
  m.id = std::string(id);

  if (middle.find(';') != std::string_view::npos) {
    throw ParseError(ParseErrorKind::kDiscontinuousSpan, "discontinuous spans are not supported",
                     line_no, m.id);
  }
  const auto parts = split_spaces(middle);
  if (parts.size() != 3) {
    throw ParseError(ParseErrorKind::kMalformedLine, "expected '<Label> <start> <end>'", line_no,
                     m.id);
  }
  if (parts[0] == "Drug") {
    m.label = EventLabel::kUndetermined;
    m.drug = true;
  } else if (auto label = parse_event_label(parts[0])) {
    m.label = *label;
  } else {
    throw ParseError(ParseErrorKind::kUnknownLabel, "label '" + std::string(parts[0]) + "'",
                     line_no, m.id);
  }
  if (!parse_offset(parts[1], &m.start) || !parse_offset(parts[2], &m.end)) {
    throw ParseError(ParseErrorKind::kMalformedLine, "offsets must be non-negative decimals",
                     line_no, m.id);
  }
  if (m.start >= m.end) {
    throw ParseError(ParseErrorKind::kInvalidOffsets,
                     std::to_string(m.start) + " >= " + std::to_string(m.end), line_no, m.id);
  }
  if (m.end > text.size()) {
    throw ParseError(ParseErrorKind::kOffsetOutOfRange,
                     "end " + std::to_string(m.end) + " exceeds text length " +
                         std::to_string(text.size()),
                     line_no, m.id);
  }
  m.surface = text.substr(m.start, m.end - m.start);
  std::u32string given;
  try {
    given = to_nfc(decode_utf8(surface_field));
  } catch (const ParseError& e) {
    throw ParseError(ParseErrorKind::kInvalidEncoding, "surface: " + e.detail(), line_no, m.id);
  }
  if (given != newlines_to_spaces(m.surface)) {
    throw ParseError(ParseErrorKind::kSurfaceMismatch,
                     "annotation says '" + std::string(surface_field) + "', text has '" +
                         encode_utf8(m.surface) + "'",
                     line_no, m.id);
  }
  return m;
}

}  // namespace

AnnotatedDocument parse_document(const std::string& doc_id, std::string_view text_utf8,
                                 std::string_view standoff) {
  try {
    return parse_document(doc_id, to_nfc(decode_utf8(text_utf8)), standoff);
  } catch (const ParseError& e) {
    if (!e.doc_id().empty()) throw;
    throw e.with_doc(doc_id);
  }
}

namespace {

AnnotatedDocument parse_lines(const std::string& doc_id, std::u32string text,
                              std::string_view standoff, std::vector<ParseError>* errors) {
  AnnotatedDocument doc;
  doc.doc_id = doc_id;
  doc.text = std::move(text);

  std::set<std::string> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < standoff.size()) {
    std::size_t nl = standoff.find('\n', pos);
    if (nl == std::string_view::npos) nl = standoff.size();
    std::string_view line = standoff.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (blank(line)) continue;

    try {
      MentionSpan m;
      try {
        m = parse_line(line, line_no, doc.text);
      } catch (const ParseError& e) {
        throw e.with_doc(doc_id);
      }
      if (!seen.insert(m.id).second) {
        throw ParseError(ParseErrorKind::kDuplicateMentionId, "mention id reused", line_no, m.id,
                         doc_id);
      }
      doc.mentions.push_back(std::move(m));
    } catch (const ParseError& e) {
      if (!errors) throw;
      errors->push_back(e);
    }
  }
  sort_mentions(doc.mentions);
  return doc;
}

}  // namespace

AnnotatedDocument parse_document(const std::string& doc_id, std::u32string text,
                                 std::string_view standoff) {
  return parse_lines(doc_id, std::move(text), standoff, nullptr);
}

std::optional<AnnotatedDocument> parse_document_collecting(const std::string& doc_id,
                                                           std::string_view text_utf8,
                                                           std::string_view standoff,
                                                           std::vector<ParseError>* errors) {
  std::u32string text;
  try {
    text = to_nfc(decode_utf8(text_utf8));
  } catch (const ParseError& e) {
    errors->push_back(e.with_doc(doc_id));
    return std::nullopt;
  }
  return parse_lines(doc_id, std::move(text), standoff, errors);
}

std::string serialize_annotations(const AnnotatedDocument& doc) {
  std::vector<MentionSpan> mentions = doc.mentions;
  sort_mentions(mentions);
  std::string out;
  for (const MentionSpan& m : mentions) {
    out += m.id;
    out += '\t';
    out += m.drug ? std::string_view("Drug") : label_name(m.label);
    out += ' ';
    out += std::to_string(m.start);
    out += ' ';
    out += std::to_string(m.end);
    out += '\t';
    out += encode_utf8(newlines_to_spaces(m.surface));
    out += '\n';
  }
  return out;
}

}  // namespace medaug
