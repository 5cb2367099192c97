#ifndef MEDAUG_AUGMENT_PROVIDER_H_
#define MEDAUG_AUGMENT_PROVIDER_H_

#include <chrono>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace medaug {

// What a provider is asked to paraphrase. Network providers send only the
// prompt; the structured fields let offline providers work without parsing
// the prompt back apart.
struct ParaphraseRequest {
  std::string prompt;
  std::string source_text;            // UTF-8 unit text
  std::vector<std::string> entities;  // UTF-8 mention surfaces, unit order
  int attempt = 0;                    // 0 for the first ask of a unit
};

class ProviderError : public std::runtime_error {
 public:
  enum class Kind { kRateLimited, kTimeout, kProviderRejection, kMalformedResponse };

  ProviderError(Kind kind, const std::string& message, double retry_after_seconds = 0.0)
      : std::runtime_error(message), kind_(kind), retry_after_(retry_after_seconds) {}

  Kind kind() const { return kind_; }
  double retry_after_seconds() const { return retry_after_; }

 private:
  Kind kind_;
  double retry_after_;
};

std::string_view provider_error_kind_name(ProviderError::Kind kind);

// Implementations must be safe to call from several threads at once.
class ParaphraseProvider {
 public:
  virtual ~ParaphraseProvider() = default;

  // Returns the candidate text verbatim. Throws ProviderError.
  virtual std::string paraphrase(const ParaphraseRequest& request) = 0;
};

// Token bucket shared by concurrent callers. A rate of 0 never blocks.
class TokenBucket {
 public:
  using Clock = std::chrono::steady_clock;

  TokenBucket(double rate_per_second, double burst);

  void acquire();

 private:
  double rate_;
  double burst_;
  double tokens_;
  Clock::time_point last_;
  std::mutex mu_;
};

// Exponential backoff: initial * 2^retry, capped, and never shorter than a
// server-supplied retry-after.
double backoff_delay(int retry, double initial_seconds, double max_seconds,
                     double retry_after_seconds);

}  // namespace medaug

#endif  // MEDAUG_AUGMENT_PROVIDER_H_
