#ifndef MEDAUG_BASELINE_GAZETTEER_H_
#define MEDAUG_BASELINE_GAZETTEER_H_

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

#include "medaug/corpus/types.h"

namespace medaug {

class EmptyTrainingSetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Known medication surfaces, stored as entity keys (case-folded, whitespace
// collapsed).
struct Gazetteer {
  std::set<std::u32string> entries;
  std::string built_from;
  std::size_t max_tokens = 0;  // token length of the longest entry

  bool contains(std::u32string_view surface) const;
  void add(std::u32string_view surface);
};

// Distinct mention surfaces of the training split. Throws
// EmptyTrainingSetError when the split has no mentions.
Gazetteer build_gazetteer(const Corpus& corpus);

}  // namespace medaug

#endif  // MEDAUG_BASELINE_GAZETTEER_H_
