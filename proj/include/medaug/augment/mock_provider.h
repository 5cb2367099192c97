#ifndef MEDAUG_AUGMENT_MOCK_PROVIDER_H_
#define MEDAUG_AUGMENT_MOCK_PROVIDER_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "medaug/augment/provider.h"

namespace medaug {

// 64-bit FNV-1a over the bytes of `data`.
std::uint64_t fnv1a64(std::string_view data);

// Offline stand-in for a chat model. Rewrites the source sentence with a
// small clinical synonym table and one of four clause frames, both picked
// from a hash of the prompt and the attempt number. Characters inside any
// occurrence of a listed entity are never changed, so entity surfaces
// survive verbatim. Output is a pure function of the request.
class MockProvider : public ParaphraseProvider {
 public:
  std::string paraphrase(const ParaphraseRequest& request) override;
};

}  // namespace medaug

#endif  // MEDAUG_AUGMENT_MOCK_PROVIDER_H_
