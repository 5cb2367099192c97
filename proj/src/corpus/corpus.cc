#include "medaug/corpus/corpus.h"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "medaug/corpus/errors.h"
#include "medaug/corpus/files.h"
#include "medaug/corpus/standoff.h"
#include "medaug/corpus/unicode.h"

namespace medaug {

namespace fs = std::filesystem;

namespace {

std::vector<std::pair<std::string, std::string>> read_tsv_pairs(const fs::path& path) {
  const std::string content = read_file(path);
  std::vector<std::pair<std::string, std::string>> rows;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t nl = content.find('\n', pos);
    if (nl == std::string::npos) nl = content.size();
    std::string line = content.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos || tab == 0) {
      throw ParseError(ParseErrorKind::kInvalidManifest,
                       path.filename().string() + ": expected two tab-separated fields", line_no);
    }
    rows.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return rows;
}

}  // namespace

Corpus load_corpus(const fs::path& root, const LoadOptions& options) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw ParseError(ParseErrorKind::kIo, "not a directory: " + root.string());
  }
  std::set<std::string> txt, ann;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    const fs::path& p = entry.path();
    if (p.extension() == ".txt") txt.insert(p.stem().string());
    if (p.extension() == ".ann") ann.insert(p.stem().string());
  }
  std::set<std::string> all = txt;
  all.insert(ann.begin(), ann.end());
  for (const std::string& id : all) {
    if (!txt.count(id) || !ann.count(id)) {
      throw ParseError(ParseErrorKind::kMissingPair,
                       txt.count(id) ? "missing .ann" : "missing .txt", 0, {}, id);
    }
  }

  const std::vector<std::string> ids(all.begin(), all.end());
  std::vector<AnnotatedDocument> docs(ids.size());
  parallel_for(ids.size(), options.jobs, [&](std::size_t i) {
    const std::string text = read_file(root / (ids[i] + ".txt"));
    const std::string standoff = read_file(root / (ids[i] + ".ann"));
    docs[i] = parse_document(ids[i], text, standoff);
  });

  Corpus corpus;
  corpus.name = fs::absolute(root).lexically_normal().filename().string();
  if (corpus.name.empty()) corpus.name = fs::absolute(root).lexically_normal().parent_path().filename().string();
  for (auto& doc : docs) {
    corpus.split[doc.doc_id] = Split::kTrain;
    std::string id = doc.doc_id;
    corpus.documents.emplace(std::move(id), std::move(doc));
  }

  const fs::path manifest = root / kSplitManifest;
  if (fs::exists(manifest)) {
    int row = 0;
    for (const auto& [doc_id, name] : read_tsv_pairs(manifest)) {
      ++row;
      auto split = parse_split(name);
      if (!split) {
        throw ParseError(ParseErrorKind::kInvalidManifest, "unknown split '" + name + "'", row,
                         {}, doc_id);
      }
      if (!corpus.documents.count(doc_id)) {
        throw ParseError(ParseErrorKind::kInvalidManifest, "manifest names an unknown document",
                         row, {}, doc_id);
      }
      corpus.split[doc_id] = *split;
    }
  }
  const fs::path provenance = root / kProvenanceFile;
  if (fs::exists(provenance)) {
    for (const auto& [doc_id, source] : read_tsv_pairs(provenance)) {
      if (!corpus.documents.count(doc_id)) {
        throw ParseError(ParseErrorKind::kInvalidManifest,
                         "provenance list names an unknown document", 0, {}, doc_id);
      }
      corpus.augmented_from[doc_id] = source;
    }
  }
  return corpus;
}

void write_corpus(const Corpus& corpus, const fs::path& root) {
  fs::create_directories(root);
  std::string manifest;
  for (const auto& [id, doc] : corpus.documents) {
    atomic_write(root / (id + ".txt"), encode_utf8(doc.text));
    atomic_write(root / (id + ".ann"), serialize_annotations(doc));
    manifest += id + "\t" + std::string(split_name(corpus.split_of(id))) + "\n";
  }
  atomic_write(root / kSplitManifest, manifest);
  if (!corpus.augmented_from.empty()) {
    std::string provenance;
    for (const auto& [id, source] : corpus.augmented_from) provenance += id + "\t" + source + "\n";
    atomic_write(root / kProvenanceFile, provenance);
  }
}

std::string_view issue_category_name(IssueCategory category) {
  switch (category) {
    case IssueCategory::kOffsetOutOfRange:
      return "OffsetOutOfRange";
    case IssueCategory::kInvalidSpan:
      return "InvalidSpan";
    case IssueCategory::kEmptySurface:
      return "EmptySurface";
    case IssueCategory::kSurfaceMismatch:
      return "SurfaceMismatch";
    case IssueCategory::kDuplicateMentionId:
      return "DuplicateMentionId";
    case IssueCategory::kDrugLabelMismatch:
      return "DrugLabelMismatch";
    case IssueCategory::kDocIdMismatch:
      return "DocIdMismatch";
    case IssueCategory::kSplitWithoutDocument:
      return "SplitWithoutDocument";
    case IssueCategory::kOverlappingMentions:
      return "OverlappingMentions";
    case IssueCategory::kMalformedLine:
      return "MalformedLine";
    case IssueCategory::kDiscontinuousSpan:
      return "DiscontinuousSpan";
    case IssueCategory::kUnknownLabel:
      return "UnknownLabel";
    case IssueCategory::kInvalidEncoding:
      return "InvalidEncoding";
    case IssueCategory::kMissingPair:
      return "MissingPair";
    case IssueCategory::kInvalidManifest:
      return "InvalidManifest";
  }
  return "Unknown";
}

Severity severity_of(IssueCategory category) {
  return category == IssueCategory::kOverlappingMentions ? Severity::kWarning : Severity::kError;
}

std::vector<Issue> validate_corpus(const Corpus& corpus) {
  std::vector<Issue> issues;
  auto add = [&](const std::string& doc, const std::string& mention, IssueCategory cat,
                 std::string msg) { issues.push_back({doc, mention, cat, std::move(msg)}); };

  for (const auto& [key, doc] : corpus.documents) {
    if (doc.doc_id != key) {
      add(key, {}, IssueCategory::kDocIdMismatch, "stored under '" + key + "' but named '" + doc.doc_id + "'");
    }
    std::set<std::string> ids;
    for (const MentionSpan& m : doc.mentions) {
      if (!ids.insert(m.id).second) {
        add(key, m.id, IssueCategory::kDuplicateMentionId, "mention id used more than once");
      }
      if (m.surface.empty()) add(key, m.id, IssueCategory::kEmptySurface, "empty surface");
      if (m.start >= m.end) {
        add(key, m.id, IssueCategory::kInvalidSpan,
            std::to_string(m.start) + " >= " + std::to_string(m.end));
        continue;
      }
      if (m.end > doc.text.size()) {
        add(key, m.id, IssueCategory::kOffsetOutOfRange,
            "end " + std::to_string(m.end) + " > " + std::to_string(doc.text.size()));
        continue;
      }
      if (doc.text.compare(m.start, m.end - m.start, m.surface) != 0) {
        add(key, m.id, IssueCategory::kSurfaceMismatch,
            "surface '" + encode_utf8(m.surface) + "' vs text '" +
                encode_utf8(doc.text.substr(m.start, m.end - m.start)) + "'");
      }
      if (m.drug && m.label != EventLabel::kUndetermined) {
        add(key, m.id, IssueCategory::kDrugLabelMismatch, "Drug mention with an event label");
      }
    }

    std::vector<const MentionSpan*> order;
    for (const MentionSpan& m : doc.mentions) {
      if (m.start < m.end) order.push_back(&m);
    }
    std::sort(order.begin(), order.end(),
              [](const MentionSpan* a, const MentionSpan* b) { return mention_less(*a, *b); });
    const MentionSpan* reach = nullptr;  // earlier mention with the largest end
    for (const MentionSpan* m : order) {
      if (reach && m->start < reach->end) {
        add(key, m->id, IssueCategory::kOverlappingMentions, "overlaps " + reach->id);
      }
      if (!reach || m->end > reach->end) reach = m;
    }
  }
  for (const auto& [doc_id, split] : corpus.split) {
    (void)split;
    if (!corpus.documents.count(doc_id)) {
      add(doc_id, {}, IssueCategory::kSplitWithoutDocument, "split entry without a document");
    }
  }
  return issues;
}

namespace {

IssueCategory category_for(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformedLine:
      return IssueCategory::kMalformedLine;
    case ParseErrorKind::kDiscontinuousSpan:
      return IssueCategory::kDiscontinuousSpan;
    case ParseErrorKind::kInvalidOffsets:
      return IssueCategory::kInvalidSpan;
    case ParseErrorKind::kOffsetOutOfRange:
      return IssueCategory::kOffsetOutOfRange;
    case ParseErrorKind::kSurfaceMismatch:
      return IssueCategory::kSurfaceMismatch;
    case ParseErrorKind::kUnknownLabel:
      return IssueCategory::kUnknownLabel;
    case ParseErrorKind::kDuplicateMentionId:
      return IssueCategory::kDuplicateMentionId;
    case ParseErrorKind::kInvalidEncoding:
      return IssueCategory::kInvalidEncoding;
    case ParseErrorKind::kMissingPair:
      return IssueCategory::kMissingPair;
    case ParseErrorKind::kInvalidManifest:
    case ParseErrorKind::kIo:
      break;
  }
  return IssueCategory::kInvalidManifest;
}

}  // namespace

std::vector<Issue> validate_directory(const fs::path& root, const LoadOptions& options) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw ParseError(ParseErrorKind::kIo, "not a directory: " + root.string());
  }
  std::vector<Issue> issues;
  std::set<std::string> txt, ann;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    const fs::path& p = entry.path();
    if (p.extension() == ".txt") txt.insert(p.stem().string());
    if (p.extension() == ".ann") ann.insert(p.stem().string());
  }
  std::vector<std::string> ids;
  std::set<std::string> on_disk = txt;
  on_disk.insert(ann.begin(), ann.end());
  for (const std::string& id : on_disk) {
    if (txt.count(id) && ann.count(id)) {
      ids.push_back(id);
    } else {
      issues.push_back({id, {}, IssueCategory::kMissingPair,
                        txt.count(id) ? "missing .ann" : "missing .txt"});
    }
  }

  std::vector<std::optional<AnnotatedDocument>> docs(ids.size());
  std::vector<std::vector<ParseError>> errors(ids.size());
  parallel_for(ids.size(), options.jobs, [&](std::size_t i) {
    const std::string text = read_file(root / (ids[i] + ".txt"));
    const std::string standoff = read_file(root / (ids[i] + ".ann"));
    docs[i] = parse_document_collecting(ids[i], text, standoff, &errors[i]);
  });

  Corpus corpus;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (const ParseError& e : errors[i]) {
      Issue issue{ids[i], e.mention_id(), category_for(e.kind()), e.detail()};
      issue.line_no = e.line_no();
      issues.push_back(std::move(issue));
    }
    if (docs[i]) corpus.documents.emplace(ids[i], std::move(*docs[i]));
  }

  const fs::path manifest = root / kSplitManifest;
  if (fs::exists(manifest)) {
    try {
      int row = 0;
      for (const auto& [doc_id, name] : read_tsv_pairs(manifest)) {
        ++row;
        auto split = parse_split(name);
        if (!split) {
          Issue issue{doc_id, {}, IssueCategory::kInvalidManifest, "unknown split '" + name + "'"};
          issue.line_no = row;
          issues.push_back(std::move(issue));
        } else if (!on_disk.count(doc_id)) {
          corpus.split[doc_id] = *split;
        } else if (corpus.documents.count(doc_id)) {
          corpus.split[doc_id] = *split;
        }
      }
    } catch (const ParseError& e) {
      Issue issue{std::string(kSplitManifest), {}, IssueCategory::kInvalidManifest, e.detail()};
      issue.line_no = e.line_no();
      issues.push_back(std::move(issue));
    }
  }

  for (Issue& issue : validate_corpus(corpus)) issues.push_back(std::move(issue));
  std::stable_sort(issues.begin(), issues.end(),
                   [](const Issue& a, const Issue& b) { return a.doc_id < b.doc_id; });
  return issues;
}

bool has_errors(const std::vector<Issue>& issues) {
  return std::any_of(issues.begin(), issues.end(),
                     [](const Issue& i) { return i.severity() == Severity::kError; });
}

}  // namespace medaug
