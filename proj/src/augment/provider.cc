#include "medaug/augment/provider.h"

#include <algorithm>
#include <cmath>
#include <thread>

namespace medaug {

std::string_view provider_error_kind_name(ProviderError::Kind kind) {
  switch (kind) {
    case ProviderError::Kind::kRateLimited:
      return "RateLimited";
    case ProviderError::Kind::kTimeout:
      return "Timeout";
    case ProviderError::Kind::kProviderRejection:
      return "ProviderRejection";
    case ProviderError::Kind::kMalformedResponse:
      return "MalformedResponse";
  }
  return "Unknown";
}

TokenBucket::TokenBucket(double rate_per_second, double burst)
    : rate_(rate_per_second), burst_(std::max(1.0, burst)), tokens_(burst_), last_(Clock::now()) {}

void TokenBucket::acquire() {
  if (rate_ <= 0.0) return;
  std::unique_lock<std::mutex> lock(mu_);
  while (true) {
    const auto now = Clock::now();
    const double elapsed = std::chrono::duration<double>(now - last_).count();
    tokens_ = std::min(burst_, tokens_ + elapsed * rate_);
    last_ = now;
    if (tokens_ >= 1.0) {
      tokens_ -= 1.0;
      return;
    }
    const double wait = (1.0 - tokens_) / rate_;
    // Sleeping under the lock keeps callers in FIFO-ish order.
    std::this_thread::sleep_for(std::chrono::duration<double>(wait));
  }
}

double backoff_delay(int retry, double initial_seconds, double max_seconds,
                     double retry_after_seconds) {
  const double exp = initial_seconds * std::pow(2.0, retry);
  return std::max(std::min(exp, max_seconds), retry_after_seconds);
}

}  // namespace medaug
