#ifndef MEDAUG_AUGMENT_SAMPLING_H_
#define MEDAUG_AUGMENT_SAMPLING_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "medaug/corpus/types.h"
#include "medaug/textproc/sentences.h"

namespace medaug {

// Uniform integer in [0, n) from a Mersenne Twister stream. Unlike the
// standard distributions its output is the same on every standard library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

// Sentence units of non-augmented training documents that hold at least one
// mention, ordered by (doc_id, start).
std::vector<SentenceUnit> eligible_units(const Corpus& corpus);

// max(1, round(fraction * n)), never more than n.
std::size_t sample_size(std::size_t n, double fraction);

// Draws sample_size(N, fraction) of the N eligible units without
// replacement, uniformly, seeded by `seed`. Returned in (doc_id, start)
// order. Throws AugmentError(kNoEligibleUnits).
std::vector<SentenceUnit> sample_units(const Corpus& corpus, double fraction, std::uint64_t seed);

}  // namespace medaug

#endif  // MEDAUG_AUGMENT_SAMPLING_H_
