#pragma once

#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pqd/annotate/annotation.hpp"
#include "pqd/describe/description.hpp"
#include "pqd/describe/prompts.hpp"

namespace pqd::describe {

struct LLMClientConfig {
  std::string endpoint{"https://api.openai.com/v1/chat/completions"};
  std::string model{"gpt-3.5-turbo-0301"};
  double temperature{1.0};
  double timeout_s{60.0};
  int max_retries{3};
  double retry_backoff_s{2.0};
  std::string api_key_env{"OPENAI_API_KEY"};
  std::filesystem::path audit_log;  // JSONL of every exchange; empty disables
  int max_in_flight{4};

  nlohmann::json to_json() const;
  static LLMClientConfig from_json(const nlohmann::json& j);
};

// Transport failure after retries are exhausted.
class TransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LLMClient {
 public:
  virtual ~LLMClient() = default;
  // Returns the assistant message content.
  virtual std::string complete(const std::vector<ChatMessage>& messages) = 0;
};

// JSON chat-completion request body for `messages`.
nlohmann::json chat_request_body(const std::string& model, double temperature,
                                 const std::vector<ChatMessage>& messages);
// Assistant content of a chat-completion response; ParseError when absent.
std::string chat_response_content(const std::string& body);

// Chat-completion client over HTTP(S). Thread-safe; at most max_in_flight
// requests are outstanding at once.
class HttpChatClient : public LLMClient {
 public:
  explicit HttpChatClient(LLMClientConfig config);
  std::string complete(const std::vector<ChatMessage>& messages) override;
  const LLMClientConfig& config() const { return config_; }

 private:
  void audit(const nlohmann::json& record);

  LLMClientConfig config_;
  std::string scheme_host_port_;
  std::string path_;
  std::string api_key_;
  std::mutex audit_mutex_;
  std::mutex slots_mutex_;
  std::condition_variable slots_cv_;
  int in_flight_{0};
};

// Routes each request to one of several clients by weight, e.g. a 60/40
// split between two models. Selection is a pure function of the request
// counter and seed, so a re-run makes the same assignments.
class ClientMix : public LLMClient {
 public:
  struct Member {
    std::shared_ptr<LLMClient> client;
    double weight;
  };
  ClientMix(std::vector<Member> members, std::uint64_t seed);
  std::string complete(const std::vector<ChatMessage>& messages) override;
  // Index of the member used for request number `k`.
  std::size_t pick(std::uint64_t k) const;

 private:
  std::vector<Member> members_;
  std::uint64_t seed_;
  std::mutex mutex_;
  std::uint64_t counter_{0};
};

// Text after the style's answer tag, whitespace-stripped. ParseError (with
// the raw completion attached) when the tag is missing.
std::string extract_tagged_answer(const std::string& completion, Style style);

Description llm_describe(const annotate::AnnotationTrack& track, Style style, LLMClient& client);

}  // namespace pqd::describe
