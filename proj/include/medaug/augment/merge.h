#ifndef MEDAUG_AUGMENT_MERGE_H_
#define MEDAUG_AUGMENT_MERGE_H_

#include <vector>

#include "medaug/augment/records.h"
#include "medaug/corpus/types.h"

namespace medaug {

// Adds one training document per record, named <source_doc>#aug<k> with k
// counting from 1 per source document in record order. Text is the NFC form
// of the candidate; mentions are the realigned ones. Original documents are
// left as they are. Throws AugmentError(kNotAccepted) if a record is not
// Accepted and AugmentError(kIdCollision) if a new id is taken.
Corpus merge_corpus(const Corpus& original, const std::vector<AugmentationRecord>& accepted);

// Records whose verdict is Accepted, in order.
std::vector<AugmentationRecord> accepted_only(const std::vector<AugmentationRecord>& records);

}  // namespace medaug

#endif  // MEDAUG_AUGMENT_MERGE_H_
