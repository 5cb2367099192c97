#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "json.hpp"
#include "medaug/augment/errors.h"
#include "medaug/augment/http_provider.h"
#include "medaug/augment/pipeline.h"
#include "medaug/augment/prompt.h"
#include "medaug/augment/records.h"
#include "support.h"

using namespace medaug;
using nlohmann::json;

namespace {

// Local chat-completion stand-in. The handler decides each reply.
class FakeServer {
 public:
  using Handler = std::function<void(const httplib::Request&, httplib::Response&)>;
  explicit FakeServer(Handler handler) {
    server_.Post("/v1/chat/completions", [this, handler](const httplib::Request& req,
                                                         httplib::Response& res) {
      {
        std::lock_guard<std::mutex> lock(mu_);
        bodies_.push_back(req.body);
        auth_.push_back(req.get_header_value("Authorization"));
      }
      handler(req, res);
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FakeServer() {
    server_.stop();
    thread_.join();
  }
  std::string endpoint() const {
    return "http://127.0.0.1:" + std::to_string(port_) + "/v1/chat/completions";
  }
  std::vector<std::string> bodies() {
    std::lock_guard<std::mutex> lock(mu_);
    return bodies_;
  }
  std::vector<std::string> auth() {
    std::lock_guard<std::mutex> lock(mu_);
    return auth_;
  }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  std::mutex mu_;
  std::vector<std::string> bodies_;
  std::vector<std::string> auth_;
};

std::string completion(const std::string& content) {
  return json{{"choices", {{{"message", {{"role", "assistant"}, {"content", content}}}}}}}.dump();
}

ProviderConfig config_for(const std::string& endpoint) {
  ProviderConfig c;
  c.kind = ProviderKind::kHttp;
  c.endpoint = endpoint;
  c.model = "test-model";
  c.api_key_env = "MEDAUG_TEST_TOKEN";
  c.temperature = 0.5;
  c.timeout_seconds = 5;
  c.max_attempts = 3;
  c.backoff_initial_seconds = 1;
  c.backoff_max_seconds = 4;
  return c;
}

ParaphraseRequest request(const std::string& prompt) {
  ParaphraseRequest r;
  r.prompt = prompt;
  return r;
}

struct TokenEnv {
  TokenEnv() { setenv("MEDAUG_TEST_TOKEN", "s3cret-token", 1); }
  ~TokenEnv() { unsetenv("MEDAUG_TEST_TOKEN"); }
};

}  // namespace

TEST_CASE("rate limited once, then answered") {
  TokenEnv env;
  std::atomic<int> calls{0};
  FakeServer server([&](const httplib::Request&, httplib::Response& res) {
    if (calls++ == 0) {
      res.status = 429;
      res.set_header("Retry-After", "3");
      return;
    }
    res.set_content(completion("Initiate Lipitor."), "application/json");
  });
  HttpProvider provider(config_for(server.endpoint()));
  std::vector<double> sleeps;
  provider.set_sleeper([&](double s) { sleeps.push_back(s); });

  CHECK(provider.paraphrase(request("Rephrase: Start Lipitor.")) == "Initiate Lipitor.");
  CHECK(sleeps == std::vector<double>{3.0});
  const auto bodies = server.bodies();
  REQUIRE(bodies.size() == 2);
  const json sent = json::parse(bodies[0]);
  CHECK(sent["model"] == "test-model");
  CHECK(sent["temperature"] == 0.5);
  CHECK(sent["messages"][0]["role"] == "user");
  CHECK(sent["messages"][0]["content"] == "Rephrase: Start Lipitor.");
  CHECK(server.auth()[0] == "Bearer s3cret-token");
  CHECK(bodies[0].find("s3cret") == std::string::npos);
}

TEST_CASE("persistent rate limiting gives up after max_attempts") {
  TokenEnv env;
  FakeServer server([](const httplib::Request&, httplib::Response& res) { res.status = 429; });
  HttpProvider provider(config_for(server.endpoint()));
  std::vector<double> sleeps;
  provider.set_sleeper([&](double s) { sleeps.push_back(s); });
  try {
    provider.paraphrase(request("x"));
    FAIL("no error");
  } catch (const ProviderError& e) {
    CHECK(e.kind() == ProviderError::Kind::kRateLimited);
  }
  CHECK(sleeps == std::vector<double>{1.0, 2.0});
  CHECK(server.bodies().size() == 3);
}

TEST_CASE("client errors are rejections and are not retried") {
  TokenEnv env;
  FakeServer server([](const httplib::Request&, httplib::Response& res) {
    res.status = 400;
    res.set_content(R"({"error": {"message": "content policy"}})", "application/json");
  });
  HttpProvider provider(config_for(server.endpoint()));
  int sleeps = 0;
  provider.set_sleeper([&](double) { ++sleeps; });
  try {
    provider.paraphrase(request("x"));
    FAIL("no error");
  } catch (const ProviderError& e) {
    CHECK(e.kind() == ProviderError::Kind::kProviderRejection);
    CHECK(std::string(e.what()).find("content policy") != std::string::npos);
  }
  CHECK(sleeps == 0);
  CHECK(server.bodies().size() == 1);
}

TEST_CASE("malformed bodies") {
  TokenEnv env;
  FakeServer server([](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"choices": []})", "application/json");
  });
  HttpProvider provider(config_for(server.endpoint()));
  try {
    provider.paraphrase(request("x"));
    FAIL("no error");
  } catch (const ProviderError& e) {
    CHECK(e.kind() == ProviderError::Kind::kMalformedResponse);
  }
  CHECK(parse_chat_completion(completion("ok")) == "ok");
  CHECK_THROWS_AS(parse_chat_completion("<html>"), ProviderError);
  CHECK_THROWS_AS(parse_chat_completion(R"({"choices":[{"message":{"content":null}}]})"), ProviderError);
}

TEST_CASE("unreachable endpoint is a timeout after retries") {
  TokenEnv env;
  int port = 0;
  {
    httplib::Server probe;
    port = probe.bind_to_any_port("127.0.0.1");
  }
  ProviderConfig cfg = config_for("http://127.0.0.1:" + std::to_string(port) + "/v1/chat/completions");
  cfg.timeout_seconds = 1;
  HttpProvider provider(cfg);
  std::vector<double> sleeps;
  provider.set_sleeper([&](double s) { sleeps.push_back(s); });
  try {
    provider.paraphrase(request("x"));
    FAIL("no error");
  } catch (const ProviderError& e) {
    CHECK(e.kind() == ProviderError::Kind::kTimeout);
  }
  CHECK(sleeps.size() == 2);
}

TEST_CASE("configuration errors") {
  unsetenv("MEDAUG_TEST_TOKEN");
  CHECK_THROWS_AS(HttpProvider(config_for("http://127.0.0.1:1/x")), ConfigError);
  TokenEnv env;
  CHECK_THROWS_AS(HttpProvider(config_for("127.0.0.1/x")), ConfigError);
  CHECK_THROWS_AS(HttpProvider(config_for("ftp://host/x")), ConfigError);

  ProviderConfig open = config_for("http://127.0.0.1:1/x");
  open.api_key_env.clear();
  unsetenv("MEDAUG_TEST_TOKEN");
  CHECK_NOTHROW(HttpProvider{open});
}

TEST_CASE("backoff schedule") {
  CHECK(backoff_delay(0, 1, 60, 0) == 1);
  CHECK(backoff_delay(3, 1, 60, 0) == 8);
  CHECK(backoff_delay(10, 1, 60, 0) == 60);
  CHECK(backoff_delay(0, 1, 60, 30) == 30);
  CHECK(backoff_delay(2, 0.5, 60, 1) == 2);
}

TEST_CASE("token bucket paces requests") {
  TokenBucket unlimited(0, 0);
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < 1000; ++i) unlimited.acquire();
  TokenBucket bucket(50, 1);
  for (int i = 0; i < 6; ++i) bucket.acquire();
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  // One token up front, then five refills at 50 per second.
  CHECK(elapsed >= 0.09);
}

TEST_CASE("pipeline over http") {
  TokenEnv env;
  FakeServer server([](const httplib::Request& req, httplib::Response& res) {
    const std::string prompt = json::parse(req.body)["messages"][0]["content"];
    const std::string sentence = prompt.substr(prompt.rfind("Sentence: ") + 10);
    res.set_content(completion("As noted, " + sentence), "application/json");
  });
  Corpus c;
  c.documents["a"] = medaug::testing::make_doc(
      "a", U"Start Lipitor 20mg daily. Continue metformin.",
      {medaug::testing::span(6, 13, EventLabel::kDisposition, "T1"),
       medaug::testing::span(35, 44, EventLabel::kNoDisposition, "T2")});
  AugmentConfig cfg;
  cfg.seed = 1;
  cfg.fraction = 1.0;
  cfg.concurrency = 2;
  cfg.provider = config_for(server.endpoint());
  HttpProvider provider(cfg.provider);
  const AugmentRun run = run_augmentation(c, cfg, default_template(), provider);
  REQUIRE(run.records.size() == 2);
  CHECK(run.records[0].candidate_text == "As noted, Start Lipitor 20mg daily.");
  CHECK(run.records[0].realigned_mentions[0].start == 16);
  CHECK(run.stats.accepted == 2);
  CHECK(records_to_jsonl(run.records).find("s3cret") == std::string::npos);
}
