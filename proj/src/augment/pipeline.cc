#include "medaug/augment/pipeline.h"

#include "json.hpp"
#include "medaug/augment/alignment.h"
#include "medaug/augment/errors.h"
#include "medaug/augment/sampling.h"
#include "medaug/corpus/errors.h"
#include "medaug/corpus/files.h"
#include "medaug/corpus/unicode.h"

namespace medaug {

ResponseJournal::ResponseJournal(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  out_.open(path, std::ios::app | std::ios::binary);
  if (!out_) throw ParseError(ParseErrorKind::kIo, "cannot open journal " + path.string());
}

void ResponseJournal::append(const std::string& record_id, const std::string& prompt,
                             const std::string& response) {
  nlohmann::ordered_json j;
  j["record_id"] = record_id;
  j["prompt"] = prompt;
  j["response"] = response;
  const std::string line = j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
  std::lock_guard<std::mutex> lock(mu_);
  out_ << line << '\n';
  out_.flush();
}

void judge_candidate(const SentenceUnit& unit, AugmentationRecord* record) {
  std::u32string candidate;
  try {
    candidate = to_nfc(decode_utf8(record->candidate_text));
  } catch (const ParseError& e) {
    record->verdict.kind = VerdictKind::kProviderError;
    record->verdict.error_kind = std::string(provider_error_kind_name(ProviderError::Kind::kMalformedResponse));
    record->verdict.message = e.what();
    return;
  }
  record->verdict = validate_candidate(unit, candidate);
  if (!record->verdict.accepted()) return;
  try {
    record->realigned_mentions = realign_entities(unit, candidate);
  } catch (const AugmentError& e) {
    record->verdict.kind = VerdictKind::kRejectedRealignFailure;
    record->verdict.message = e.what();
  }
}

std::vector<AugmentationRecord> augment_unit(const SentenceUnit& unit, const PromptTemplate& tmpl,
                                             ParaphraseProvider& provider, int max_retries,
                                             ResponseJournal* journal) {
  std::vector<AugmentationRecord> records;
  ParaphraseRequest request;
  request.prompt = render_prompt(tmpl, unit);
  request.source_text = encode_utf8(unit.text);
  for (const MentionSpan& m : unit.mentions) request.entities.push_back(encode_utf8(m.surface));

  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    AugmentationRecord r;
    r.record_id = unit.doc_id + "@" + std::to_string(unit.start) + "-" + std::to_string(unit.end) +
                  "/a" + std::to_string(attempt);
    r.source_doc_id = unit.doc_id;
    r.unit_start = unit.start;
    r.unit_end = unit.end;
    r.unit_text = unit.text;
    r.source_mentions = unit.mentions;
    r.attempt = attempt;
    r.prompt = request.prompt;
    request.attempt = attempt;
    try {
      r.candidate_text = provider.paraphrase(request);
    } catch (const ProviderError& e) {
      r.verdict.kind = VerdictKind::kProviderError;
      r.verdict.error_kind = std::string(provider_error_kind_name(e.kind()));
      r.verdict.message = e.what();
      records.push_back(std::move(r));
      break;
    }
    if (journal) journal->append(r.record_id, r.prompt, r.candidate_text);
    judge_candidate(unit, &r);
    const bool done = r.verdict.accepted() || r.verdict.kind == VerdictKind::kProviderError;
    records.push_back(std::move(r));
    if (done) break;
  }
  return records;
}

AugmentRun run_augmentation(const Corpus& corpus, const AugmentConfig& cfg,
                            const PromptTemplate& tmpl, ParaphraseProvider& provider,
                            ResponseJournal* journal) {
  cfg.validate();
  tmpl.validate();
  if (!cfg.seed) throw ConfigError("augmentation needs a seed");

  AugmentRun run;
  run.sampled = sample_units(corpus, cfg.fraction, *cfg.seed);

  std::vector<std::vector<AugmentationRecord>> per_unit(run.sampled.size());
  parallel_for(run.sampled.size(), cfg.concurrency, [&](std::size_t i) {
    per_unit[i] = augment_unit(run.sampled[i], tmpl, provider, cfg.max_retries_per_unit, journal);
  });

  AugmentStats& s = run.stats;
  s.sampled = run.sampled.size();
  for (auto& unit_records : per_unit) {
    bool unit_accepted = false;
    for (auto& r : unit_records) {
      switch (r.verdict.kind) {
        case VerdictKind::kAccepted:
          ++s.accepted;
          ++s.generated;
          unit_accepted = true;
          break;
        case VerdictKind::kRejectedMissingEntity:
          ++s.rejected_missing_entity;
          ++s.generated;
          break;
        case VerdictKind::kRejectedRealignFailure:
          ++s.rejected_realign_failure;
          ++s.generated;
          break;
        case VerdictKind::kProviderError:
          ++s.provider_errors;
          if (!r.candidate_text.empty()) ++s.generated;
          break;
      }
      run.records.push_back(std::move(r));
    }
    if (!unit_accepted) ++s.units_without_acceptance;
  }
  if (s.accepted > 0) run.drift = monitor_drift(run.sampled, run.records, cfg.drift_threshold);
  return run;
}

}  // namespace medaug
