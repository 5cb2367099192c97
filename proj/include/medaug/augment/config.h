#ifndef MEDAUG_AUGMENT_CONFIG_H_
#define MEDAUG_AUGMENT_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace medaug {

enum class ProviderKind { kMock, kHttp };

struct ProviderConfig {
  ProviderKind kind = ProviderKind::kMock;
  std::string endpoint = "https://api.openai.com/v1/chat/completions";
  std::string model = "gpt-3.5-turbo";
  // Name of the environment variable holding the bearer token. Empty means
  // no Authorization header is sent.
  std::string api_key_env = "OPENAI_API_KEY";
  double temperature = 0.7;
  double timeout_seconds = 60.0;
  int max_attempts = 5;  // per request, counting the first try
  double backoff_initial_seconds = 1.0;
  double backoff_max_seconds = 60.0;
  double requests_per_second = 0.0;  // 0 disables the token bucket
};

struct AugmentConfig {
  std::filesystem::path corpus;  // training corpus directory
  double fraction = 0.10;
  std::optional<std::uint64_t> seed;
  int max_retries_per_unit = 2;
  double drift_threshold = 0.2;
  std::string prompt_template_id = "default";
  std::filesystem::path template_dir;  // empty: built-in templates only
  std::size_t concurrency = 1;         // provider calls in flight
  ProviderConfig provider;

  // Throws ConfigError when an invariant is violated.
  void validate() const;
};

std::string_view provider_kind_name(ProviderKind kind);
std::optional<ProviderKind> parse_provider_kind(std::string_view name);

// Reads a JSON config file. Relative paths inside it resolve against the
// file's directory. Unknown keys are rejected. Throws ConfigError.
AugmentConfig load_augment_config(const std::filesystem::path& path);

AugmentConfig parse_augment_config(std::string_view json, const std::filesystem::path& base_dir);

}  // namespace medaug

#endif  // MEDAUG_AUGMENT_CONFIG_H_
