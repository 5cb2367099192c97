#ifndef MEDAUG_AUGMENT_PIPELINE_H_
#define MEDAUG_AUGMENT_PIPELINE_H_

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "medaug/augment/config.h"
#include "medaug/augment/drift.h"
#include "medaug/augment/prompt.h"
#include "medaug/augment/provider.h"
#include "medaug/augment/records.h"
#include "medaug/textproc/sentences.h"

namespace medaug {

// Append-only log of raw provider responses, written as they arrive and
// before validation. Line order follows completion order.
class ResponseJournal {
 public:
  explicit ResponseJournal(const std::filesystem::path& path);

  void append(const std::string& record_id, const std::string& prompt,
              const std::string& response);

 private:
  std::mutex mu_;
  std::ofstream out_;
};

struct AugmentStats {
  std::size_t sampled = 0;
  std::size_t generated = 0;  // provider calls that returned text
  std::size_t accepted = 0;
  std::size_t rejected_missing_entity = 0;
  std::size_t rejected_realign_failure = 0;
  std::size_t provider_errors = 0;
  std::size_t units_without_acceptance = 0;
};

struct AugmentRun {
  std::vector<SentenceUnit> sampled;
  // Every attempt, ordered by (source doc, unit start, attempt).
  std::vector<AugmentationRecord> records;
  std::optional<DriftReport> drift;  // absent when nothing was accepted
  AugmentStats stats;
};

// Validates and realigns one candidate against its unit. Fills verdict and
// realigned mentions of `record`.
void judge_candidate(const SentenceUnit& unit, AugmentationRecord* record);

// Asks the provider for one unit, re-asking after a rejection up to
// `max_retries` times. Provider errors end the unit.
std::vector<AugmentationRecord> augment_unit(const SentenceUnit& unit, const PromptTemplate& tmpl,
                                             ParaphraseProvider& provider, int max_retries,
                                             ResponseJournal* journal = nullptr);

// sample -> prompt -> paraphrase -> validate -> realign -> drift. Units run
// on up to cfg.concurrency threads; results do not depend on the thread
// count. Throws ConfigError when cfg has no seed, AugmentError when nothing
// is eligible.
AugmentRun run_augmentation(const Corpus& corpus, const AugmentConfig& cfg,
                            const PromptTemplate& tmpl, ParaphraseProvider& provider,
                            ResponseJournal* journal = nullptr);

}  // namespace medaug

#endif  // MEDAUG_AUGMENT_PIPELINE_H_
