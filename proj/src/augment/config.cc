#include "medaug/augment/config.h"

#include <set>

#include "json.hpp"
#include "medaug/augment/errors.h"
#include "medaug/corpus/errors.h"
#include "medaug/corpus/files.h"

namespace medaug {

using nlohmann::json;

std::string_view provider_kind_name(ProviderKind kind) {
  return kind == ProviderKind::kMock ? "mock" : "http";
}

std::optional<ProviderKind> parse_provider_kind(std::string_view name) {
  if (name == "mock") return ProviderKind::kMock;
  if (name == "http") return ProviderKind::kHttp;
  return std::nullopt;
}

void AugmentConfig::validate() const {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw ConfigError("fraction must lie in (0, 1], got " + std::to_string(fraction));
  }
  if (!(drift_threshold >= 0.0 && drift_threshold <= 2.0)) {
    throw ConfigError("drift_threshold must lie in [0, 2]");
  }
  if (max_retries_per_unit < 0) throw ConfigError("max_retries_per_unit must be >= 0");
  if (concurrency == 0) throw ConfigError("concurrency must be >= 1");
  if (prompt_template_id.empty()) throw ConfigError("prompt_template_id is empty");
  if (provider.max_attempts < 1) throw ConfigError("provider.max_attempts must be >= 1");
  if (provider.timeout_seconds <= 0) throw ConfigError("provider.timeout_seconds must be > 0");
  if (provider.requests_per_second < 0) throw ConfigError("provider.requests_per_second must be >= 0");
}

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!known.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

template <typename T>
void read(const json& obj, const char* key, T* out) {
  if (obj.contains(key)) *out = obj.at(key).get<T>();
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() || base.empty() ? path : base / path;
}

}  // namespace

AugmentConfig parse_augment_config(std::string_view text, const std::filesystem::path& base_dir) {
  AugmentConfig cfg;
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    reject_unknown(j,
                   {"corpus", "fraction", "seed", "max_retries_per_unit", "drift_threshold",
                    "prompt_template_id", "template_dir", "concurrency", "provider"},
                   "config");
    if (j.contains("corpus")) cfg.corpus = resolve(base_dir, j.at("corpus").get<std::string>());
    read(j, "fraction", &cfg.fraction);
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    read(j, "max_retries_per_unit", &cfg.max_retries_per_unit);
    read(j, "drift_threshold", &cfg.drift_threshold);
    read(j, "prompt_template_id", &cfg.prompt_template_id);
    if (j.contains("template_dir")) {
      cfg.template_dir = resolve(base_dir, j.at("template_dir").get<std::string>());
    }
    read(j, "concurrency", &cfg.concurrency);
    if (j.contains("provider")) {
      const json& p = j.at("provider");
      reject_unknown(p,
                     {"kind", "endpoint", "model", "api_key_env", "temperature", "timeout_seconds",
                      "max_attempts", "backoff_initial_seconds", "backoff_max_seconds",
                      "requests_per_second"},
                     "provider");
      if (p.contains("kind")) {
        auto kind = parse_provider_kind(p.at("kind").get<std::string>());
        if (!kind) throw ConfigError("provider.kind must be 'mock' or 'http'");
        cfg.provider.kind = *kind;
      }
      read(p, "endpoint", &cfg.provider.endpoint);
      read(p, "model", &cfg.provider.model);
      read(p, "api_key_env", &cfg.provider.api_key_env);
      read(p, "temperature", &cfg.provider.temperature);
      read(p, "timeout_seconds", &cfg.provider.timeout_seconds);
      read(p, "max_attempts", &cfg.provider.max_attempts);
      read(p, "backoff_initial_seconds", &cfg.provider.backoff_initial_seconds);
      read(p, "backoff_max_seconds", &cfg.provider.backoff_max_seconds);
      read(p, "requests_per_second", &cfg.provider.requests_per_second);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

AugmentConfig load_augment_config(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const ParseError& e) {
    throw ConfigError(e.what());
  }
  return parse_augment_config(text, path.parent_path());
}

}  // namespace medaug
