#include "medaug/augment/sampling.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "medaug/augment/errors.h"

namespace medaug {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

std::vector<SentenceUnit> eligible_units(const Corpus& corpus) {
  std::vector<SentenceUnit> out;
  for (const auto& [id, doc] : corpus.documents) {
    if (corpus.split_of(id) != Split::kTrain || corpus.is_augmented(id)) continue;
    for (SentenceUnit& unit : split_sentences(doc)) {
      if (!unit.mentions.empty()) out.push_back(std::move(unit));
    }
  }
  return out;
}

std::size_t sample_size(std::size_t n, double fraction) {
  const auto rounded = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
  return std::min(n, std::max<std::size_t>(1, rounded));
}

std::vector<SentenceUnit> sample_units(const Corpus& corpus, double fraction, std::uint64_t seed) {
  std::vector<SentenceUnit> units = eligible_units(corpus);
  if (units.empty()) {
    throw AugmentError(AugmentError::Kind::kNoEligibleUnits,
                       "NoEligibleUnits: no training sentence holds a mention");
  }
  const std::size_t k = sample_size(units.size(), fraction);

  std::vector<std::size_t> index(units.size());
  std::iota(index.begin(), index.end(), 0);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + uniform_below(rng, units.size() - i);
    std::swap(index[i], index[j]);
  }
  index.resize(k);
  std::sort(index.begin(), index.end());

  std::vector<SentenceUnit> sample;
  sample.reserve(k);
  for (std::size_t i : index) sample.push_back(std::move(units[i]));
  return sample;
}

}  // namespace medaug
