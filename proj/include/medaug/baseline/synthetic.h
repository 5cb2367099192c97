#ifndef MEDAUG_BASELINE_SYNTHETIC_H_
#define MEDAUG_BASELINE_SYNTHETIC_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "medaug/corpus/types.h"

namespace medaug {

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SyntheticSpec {
  std::size_t n_documents = 200;
  std::size_t min_sentences = 2;  // medication sentences per document
  std::size_t max_sentences = 6;
  std::vector<std::string> medications = {
      "Lipitor",    "metformin",  "lisinopril",  "aspirin",     "warfarin",
      "insulin glargine", "atorvastatin", "amlodipine", "furosemide", "levothyroxine",
      "prednisone", "gabapentin", "omeprazole",  "metoprolol succinate", "albuterol"};
  // Proportions for Disposition, NoDisposition, Undetermined.
  std::array<double, 3> label_mix = {0.3, 0.5, 0.2};
  double dev_fraction = 0.1;
  double test_fraction = 0.1;
  std::uint64_t seed = 0;

  // Throws SpecError.
  void validate() const;
};

// Reads a JSON spec; absent keys keep their defaults. `seed` is required
// unless `seed_override` is given. Throws SpecError.
SyntheticSpec parse_synthetic_spec(std::string_view json, const std::uint64_t* seed_override);

// Builds a corpus of templated clinical sentences. Medication sentences read
// "<Trigger> <Drug> <dose> <freq>." with the trigger taken from the default
// rule lexicon of the sentence's label; Undetermined sentences use lead-ins
// outside every lexicon. Filler sentences carry no mention. Label counts
// follow label_mix by largest remainder, and every medication appears in
// the training split whenever it has at least as many mentions as there are
// medications. Pure function of the spec.
Corpus generate_synthetic(const SyntheticSpec& spec);

}  // namespace medaug

#endif  // MEDAUG_BASELINE_SYNTHETIC_H_
