#ifndef MEDAUG_AUGMENT_HTTP_PROVIDER_H_
#define MEDAUG_AUGMENT_HTTP_PROVIDER_H_

#include <functional>
#include <string>

#include "medaug/augment/config.h"
#include "medaug/augment/provider.h"

namespace medaug {

// Chat-completion client. POSTs
//
//   {"model": ..., "messages": [{"role": "user", "content": <prompt>}],
//    "temperature": ...}
//
// and returns choices[0].message.content. 429 responses and transport
// failures are retried with exponential backoff up to max_attempts tries in
// total; the last failure is rethrown. Other non-2xx statuses are rejections
// and are not retried.
class HttpProvider : public ParaphraseProvider {
 public:
  using Sleeper = std::function<void(double seconds)>;

  // Reads the bearer token from the environment variable named in the
  // config. Throws ConfigError if the endpoint is unusable or the variable
  // is unset.
  explicit HttpProvider(ProviderConfig config);

  // Replaces the sleep used between retries (tests use a recorder).
  void set_sleeper(Sleeper sleeper) { sleeper_ = std::move(sleeper); }

  std::string paraphrase(const ParaphraseRequest& request) override;

  // Builds the request body for `prompt`.
  std::string request_body(const std::string& prompt) const;

 private:
  std::string send_once(const std::string& body);

  ProviderConfig config_;
  std::string scheme_host_port_;
  std::string path_;
  std::string token_;
  TokenBucket bucket_;
  Sleeper sleeper_;
};

// Extracts choices[0].message.content. Throws ProviderError(kMalformedResponse).
std::string parse_chat_completion(const std::string& body);

}  // namespace medaug

#endif  // MEDAUG_AUGMENT_HTTP_PROVIDER_H_
