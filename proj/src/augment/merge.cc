#include "medaug/augment/merge.h"

#include <map>

#include "medaug/augment/errors.h"
#include "medaug/corpus/unicode.h"

namespace medaug {

std::vector<AugmentationRecord> accepted_only(const std::vector<AugmentationRecord>& records) {
  std::vector<AugmentationRecord> out;
  for (const auto& r : records) {
    if (r.verdict.accepted()) out.push_back(r);
  }
  return out;
}

Corpus merge_corpus(const Corpus& original, const std::vector<AugmentationRecord>& accepted) {
  Corpus merged = original;
  std::map<std::string, int> next_k;
  for (const AugmentationRecord& r : accepted) {
    if (!r.verdict.accepted()) {
      throw AugmentError(AugmentError::Kind::kNotAccepted,
                         "record " + r.record_id + " is " +
                             std::string(verdict_kind_name(r.verdict.kind)));
    }
    const std::string id = r.source_doc_id + "#aug" + std::to_string(++next_k[r.source_doc_id]);
    if (merged.documents.count(id)) {
      throw AugmentError(AugmentError::Kind::kIdCollision, "IdCollision(" + id + ")");
    }
    AnnotatedDocument doc;
    doc.doc_id = id;
    doc.text = to_nfc(decode_utf8(r.candidate_text));
    doc.mentions = r.realigned_mentions;
    sort_mentions(doc.mentions);
    merged.documents.emplace(id, std::move(doc));
    merged.split[id] = Split::kTrain;
    merged.augmented_from[id] = r.source_doc_id;
  }
  return merged;
}

}  // namespace medaug
