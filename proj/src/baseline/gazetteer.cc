#include "medaug/baseline/gazetteer.h"

#include <algorithm>

#include "medaug/corpus/unicode.h"
#include "medaug/textproc/tokenizer.h"

namespace medaug {

bool Gazetteer::contains(std::u32string_view surface) const {
  return entries.count(entity_key(surface)) != 0;
}

void Gazetteer::add(std::u32string_view surface) {
  std::u32string key = entity_key(surface);
  if (key.empty()) return;
  max_tokens = std::max(max_tokens, tokenize(key).size());
  entries.insert(std::move(key));
}

Gazetteer build_gazetteer(const Corpus& corpus) {
  Gazetteer g;
  g.built_from = corpus.name;
  for (const auto& [id, doc] : corpus.documents) {
    if (corpus.split_of(id) != Split::kTrain) continue;
    for (const MentionSpan& m : doc.mentions) g.add(m.surface);
  }
  if (g.entries.empty()) {
    throw EmptyTrainingSetError("EmptyTrainingSet: corpus '" + corpus.name +
                                "' has no training mentions");
  }
  return g;
}

}  // namespace medaug
