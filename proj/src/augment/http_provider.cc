#include "medaug/augment/http_provider.h"

#include <cstdlib>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "medaug/augment/errors.h"

namespace medaug {

using nlohmann::json;

namespace {

void split_url(const std::string& url, std::string* scheme_host_port, std::string* path) {
  const std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw ConfigError("endpoint must be an absolute URL: " + url);
  const std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw ConfigError("endpoint scheme must be http or https: " + url);
  }
  const std::size_t slash = url.find('/', scheme_end + 3);
  *scheme_host_port = slash == std::string::npos ? url : url.substr(0, slash);
  *path = slash == std::string::npos ? "/" : url.substr(slash);
  if (scheme_host_port->size() <= scheme_end + 3) throw ConfigError("endpoint has no host: " + url);
}

double parse_retry_after(const std::string& value) {
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  return end != value.c_str() && v > 0 ? v : 0.0;
}

}  // namespace

std::string parse_chat_completion(const std::string& body) {
  try {
    const json j = json::parse(body);
    const json& content = j.at("choices").at(0).at("message").at("content");
    if (!content.is_string()) {
      throw ProviderError(ProviderError::Kind::kMalformedResponse, "message content is not a string");
    }
    return content.get<std::string>();
  } catch (const json::exception& e) {
    throw ProviderError(ProviderError::Kind::kMalformedResponse,
                        std::string("unexpected response: ") + e.what());
  }
}

HttpProvider::HttpProvider(ProviderConfig config)
    : config_(std::move(config)),
      bucket_(config_.requests_per_second, config_.requests_per_second),
      sleeper_([](double s) { std::this_thread::sleep_for(std::chrono::duration<double>(s)); }) {
  split_url(config_.endpoint, &scheme_host_port_, &path_);
  if (!config_.api_key_env.empty()) {
    const char* value = std::getenv(config_.api_key_env.c_str());
    if (value == nullptr || *value == '\0') {
      throw ConfigError("environment variable " + config_.api_key_env + " is not set");
    }
    token_ = value;
  }
}

std::string HttpProvider::request_body(const std::string& prompt) const {
  nlohmann::ordered_json j;
  j["model"] = config_.model;
  j["messages"] = nlohmann::ordered_json::array({{{"role", "user"}, {"content", prompt}}});
  j["temperature"] = config_.temperature;
  return j.dump();
}

std::string HttpProvider::send_once(const std::string& body) {
  bucket_.acquire();
  httplib::Client client(scheme_host_port_);
  const auto secs = std::chrono::duration<double>(config_.timeout_seconds);
  const auto timeout = std::chrono::duration_cast<std::chrono::microseconds>(secs);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  httplib::Headers headers;
  if (!token_.empty()) headers.emplace("Authorization", "Bearer " + token_);

  auto res = client.Post(path_, headers, body, "application/json");
  if (!res) {
    throw ProviderError(ProviderError::Kind::kTimeout,
                        "request failed: " + httplib::to_string(res.error()));
  }
  if (res->status == 429) {
    throw ProviderError(ProviderError::Kind::kRateLimited, "HTTP 429",
                        parse_retry_after(res->get_header_value("Retry-After")));
  }
  if (res->status < 200 || res->status >= 300) {
    std::string message = "HTTP " + std::to_string(res->status);
    try {
      const json j = json::parse(res->body);
      if (j.contains("error") && j["error"].contains("message")) {
        message += ": " + j["error"]["message"].get<std::string>();
      }
    } catch (const json::exception&) {
    }
    throw ProviderError(ProviderError::Kind::kProviderRejection, message);
  }
  return parse_chat_completion(res->body);
}

std::string HttpProvider::paraphrase(const ParaphraseRequest& request) {
  const std::string body = request_body(request.prompt);
  for (int attempt = 0;; ++attempt) {
    try {
      return send_once(body);
    } catch (const ProviderError& e) {
      const bool transient = e.kind() == ProviderError::Kind::kRateLimited ||
                             e.kind() == ProviderError::Kind::kTimeout;
      if (!transient || attempt + 1 >= config_.max_attempts) throw;
      sleeper_(backoff_delay(attempt, config_.backoff_initial_seconds, config_.backoff_max_seconds,
                             e.retry_after_seconds()));
    }
  }
}

}  // namespace medaug
