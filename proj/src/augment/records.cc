#include "medaug/augment/records.h"

#include "json.hpp"
#include "medaug/augment/errors.h"
#include "medaug/corpus/errors.h"
#include "medaug/corpus/unicode.h"

namespace medaug {

using ordered_json = nlohmann::ordered_json;

std::string_view verdict_kind_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::kAccepted:
      return "Accepted";
    case VerdictKind::kRejectedMissingEntity:
      return "RejectedMissingEntity";
    case VerdictKind::kRejectedRealignFailure:
      return "RejectedRealignFailure";
    case VerdictKind::kProviderError:
      return "ProviderError";
  }
  return "Unknown";
}

namespace {

ordered_json mention_json(const MentionSpan& m) {
  ordered_json j;
  j["id"] = m.id;
  j["start"] = m.start;
  j["end"] = m.end;
  j["surface"] = encode_utf8(m.surface);
  j["label"] = m.drug ? std::string("Drug") : std::string(label_name(m.label));
  return j;
}

MentionSpan mention_from(const ordered_json& j) {
  MentionSpan m;
  m.id = j.at("id").get<std::string>();
  m.start = j.at("start").get<std::size_t>();
  m.end = j.at("end").get<std::size_t>();
  m.surface = decode_utf8(j.at("surface").get<std::string>());
  const std::string label = j.at("label").get<std::string>();
  if (label == "Drug") {
    m.drug = true;
    m.label = EventLabel::kUndetermined;
  } else if (auto l = parse_event_label(label)) {
    m.label = *l;
  } else {
    throw AugmentError(AugmentError::Kind::kMalformedRecord, "unknown label '" + label + "'");
  }
  return m;
}

ordered_json mentions_json(const std::vector<MentionSpan>& mentions) {
  ordered_json arr = ordered_json::array();
  for (const MentionSpan& m : mentions) arr.push_back(mention_json(m));
  return arr;
}

std::vector<MentionSpan> mentions_from(const ordered_json& arr) {
  std::vector<MentionSpan> out;
  for (const auto& j : arr) out.push_back(mention_from(j));
  return out;
}

}  // namespace

std::string record_to_json_line(const AugmentationRecord& r) {
  ordered_json j;
  j["schema_version"] = kRecordSchemaVersion;
  j["record_id"] = r.record_id;
  j["source_doc_id"] = r.source_doc_id;
  j["unit_start"] = r.unit_start;
  j["unit_end"] = r.unit_end;
  j["unit_text"] = encode_utf8(r.unit_text);
  j["source_mentions"] = mentions_json(r.source_mentions);
  j["attempt"] = r.attempt;
  j["prompt"] = r.prompt;
  j["candidate_text"] = r.candidate_text;
  ordered_json v;
  v["kind"] = verdict_kind_name(r.verdict.kind);
  ordered_json missing = ordered_json::array();
  for (const auto& m : r.verdict.missing) missing.push_back(encode_utf8(m));
  v["missing"] = missing;
  v["error_kind"] = r.verdict.error_kind;
  v["message"] = r.verdict.message;
  j["verdict"] = v;
  j["realigned_mentions"] = mentions_json(r.realigned_mentions);
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

std::string records_to_jsonl(const std::vector<AugmentationRecord>& records) {
  std::string out;
  for (const auto& r : records) out += record_to_json_line(r) + "\n";
  return out;
}

AugmentationRecord record_from_json(std::string_view line) {
  try {
    const ordered_json j = ordered_json::parse(line);
    if (j.at("schema_version").get<int>() != kRecordSchemaVersion) {
      throw AugmentError(AugmentError::Kind::kMalformedRecord, "unsupported record schema version");
    }
    AugmentationRecord r;
    r.record_id = j.at("record_id").get<std::string>();
    r.source_doc_id = j.at("source_doc_id").get<std::string>();
    r.unit_start = j.at("unit_start").get<std::size_t>();
    r.unit_end = j.at("unit_end").get<std::size_t>();
    r.unit_text = decode_utf8(j.at("unit_text").get<std::string>());
    r.source_mentions = mentions_from(j.at("source_mentions"));
    r.attempt = j.at("attempt").get<int>();
    r.prompt = j.at("prompt").get<std::string>();
    r.candidate_text = j.at("candidate_text").get<std::string>();
    const auto& v = j.at("verdict");
    const std::string kind = v.at("kind").get<std::string>();
    bool known = false;
    for (VerdictKind k : {VerdictKind::kAccepted, VerdictKind::kRejectedMissingEntity,
                          VerdictKind::kRejectedRealignFailure, VerdictKind::kProviderError}) {
      if (verdict_kind_name(k) == kind) {
        r.verdict.kind = k;
        known = true;
      }
    }
    if (!known) throw AugmentError(AugmentError::Kind::kMalformedRecord, "unknown verdict '" + kind + "'");
    for (const auto& m : v.at("missing")) r.verdict.missing.push_back(decode_utf8(m.get<std::string>()));
    r.verdict.error_kind = v.at("error_kind").get<std::string>();
    r.verdict.message = v.at("message").get<std::string>();
    r.realigned_mentions = mentions_from(j.at("realigned_mentions"));
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw AugmentError(AugmentError::Kind::kMalformedRecord, std::string("malformed record: ") + e.what());
  } catch (const ParseError& e) {
    throw AugmentError(AugmentError::Kind::kMalformedRecord, std::string("malformed record: ") + e.what());
  }
}

std::vector<AugmentationRecord> records_from_jsonl(std::string_view content) {
  std::vector<AugmentationRecord> out;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos < content.size()) {
    std::size_t nl = content.find('\n', pos);
    if (nl == std::string_view::npos) nl = content.size();
    std::string_view line = content.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(record_from_json(line));
    } catch (const AugmentError& e) {
      throw AugmentError(e.kind(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace medaug
