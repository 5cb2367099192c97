#ifndef MEDAUG_TESTS_SUPPORT_H_
#define MEDAUG_TESTS_SUPPORT_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "medaug/corpus/errors.h"
#include "medaug/corpus/types.h"
#include "medaug/evalkit/metrics.h"
#include "medaug/textproc/sentences.h"

namespace medaug::testing {

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

void write_text(const std::filesystem::path& path, const std::string& content);

MentionSpan span(std::size_t start, std::size_t end, EventLabel label, std::string id = "T1");

// Builds a document whose mention surfaces are taken from `text`.
AnnotatedDocument make_doc(const std::string& doc_id, const std::u32string& text,
                           std::vector<MentionSpan> mentions);

// Reference scorer: exhaustive search for a maximum one-to-one matching per
// class, then P/R/F straight from the definitions.
struct OracleCounts {
  std::size_t tp = 0, fp = 0, fn = 0;
};
struct OracleBlock {
  std::map<std::string, OracleCounts> per_class;
  double micro_p = 0, micro_r = 0, micro_f = 0;
  double macro_p = 0, macro_r = 0, macro_f = 0;
  std::size_t micro_tp = 0;
};
struct OracleReport {
  OracleBlock strict;
  OracleBlock lenient;
};

// Size of a maximum matching between gold and pred where edge(i, j) says
// whether gold[i] and pred[j] may pair. Exponential in pred.size() (<= 20).
std::size_t brute_force_matching(std::size_t n_gold, std::size_t n_pred,
                                 const std::vector<std::vector<bool>>& edge);

OracleReport oracle_score(const Corpus& gold, const Predictions& pred, TaskMode task,
                          bool macro_exclude_absent = true);

// Small random corpus for scorer tests: up to max_docs documents of random
// text, up to max_mentions gold mentions per document (overlapping when
// allow_overlap), and predictions derived from gold by copying, shifting,
// relabeling, dropping and inventing spans.
struct RandomScoringCase {
  Corpus gold;
  Predictions pred;
};
RandomScoringCase random_scoring_case(std::mt19937_64& rng, std::size_t max_docs,
                                      std::size_t max_mentions, bool allow_overlap);

// Random document with mixed-script text (accents, CJK, emoji, tabs,
// newlines) and non-overlapping mentions.
AnnotatedDocument random_document(std::mt19937_64& rng, const std::string& doc_id);

// Random sentence unit whose mentions cover whole tokens: words from a
// mixed-script pool, some punctuation, 0 to 4 mentions of 1 to 3 tokens.
SentenceUnit random_aligned_unit(std::mt19937_64& rng);

// One broken .txt/.ann pair per parse failure the standoff reader detects.
struct MalformedFixture {
  std::string name;
  std::string text;
  std::string standoff;
  ParseErrorKind expected;
  int line_no;
};
std::vector<MalformedFixture> malformed_fixtures();

}  // namespace medaug::testing

#endif  // MEDAUG_TESTS_SUPPORT_H_
