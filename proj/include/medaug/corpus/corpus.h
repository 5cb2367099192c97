#ifndef MEDAUG_CORPUS_CORPUS_H_
#define MEDAUG_CORPUS_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "medaug/corpus/types.h"

namespace medaug {

// File names recognized inside a corpus directory besides <id>.txt/<id>.ann.
inline constexpr std::string_view kSplitManifest = "splits.tsv";
inline constexpr std::string_view kProvenanceFile = "augmented.tsv";

struct LoadOptions {
  std::size_t jobs = 1;
};

// Reads paired <id>.txt/<id>.ann files plus the optional split manifest
// (`<doc_id>\t<train|dev|test>` per line). Documents absent from the
// manifest are assigned to train. Throws ParseError; errors raised while
// parsing a document carry its doc_id.
Corpus load_corpus(const std::filesystem::path& root, const LoadOptions& options = {});

// Writes every document as a .txt/.ann pair plus the split manifest (and the
// provenance list when the corpus has augmented documents). Each file is
// written atomically.
void write_corpus(const Corpus& corpus, const std::filesystem::path& root);

enum class IssueCategory {
  kOffsetOutOfRange,
  kInvalidSpan,
  kEmptySurface,
  kSurfaceMismatch,
  kDuplicateMentionId,
  kDrugLabelMismatch,
  kDocIdMismatch,
  kSplitWithoutDocument,
  kOverlappingMentions,  // warning
  // Raised while reading files (validate_directory only).
  kMalformedLine,
  kDiscontinuousSpan,
  kUnknownLabel,
  kInvalidEncoding,
  kMissingPair,
  kInvalidManifest,
};

enum class Severity { kError, kWarning };

std::string_view issue_category_name(IssueCategory category);
Severity severity_of(IssueCategory category);

struct Issue {
  std::string doc_id;
  std::string mention_id;
  IssueCategory category;
  std::string message;
  int line_no = 0;  // .ann or manifest line, 0 if none

  Severity severity() const { return severity_of(category); }
};

// Reports every invariant violation; overlapping mentions are reported as
// warnings. Issues are ordered by document, then mention.
std::vector<Issue> validate_corpus(const Corpus& corpus);

// Reads a corpus directory without stopping at the first problem: bad
// annotation lines, undecodable texts, unpaired files and bad manifest rows
// become issues alongside those of validate_corpus. Throws ParseError(kIo)
// when the directory or a file cannot be read.
std::vector<Issue> validate_directory(const std::filesystem::path& root,
                                      const LoadOptions& options = {});

bool has_errors(const std::vector<Issue>& issues);

}  // namespace medaug

#endif  // MEDAUG_CORPUS_CORPUS_H_
