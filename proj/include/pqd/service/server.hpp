#pragma once

#include <condition_variable>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "pqd/describe/llm_client.hpp"
#include "pqd/describe/tokenizer.hpp"
#include "pqd/eval/scoring.hpp"
#include "pqd/policy/model.hpp"
#include "pqd/sim/simulator.hpp"

namespace httplib {
class Server;
}

namespace pqd::service {

inline constexpr int kMaxRollouts = 16;

// An invalid request; `status` is the HTTP code to answer with and
// `fields` maps offending fields to messages.
class RequestError : public std::runtime_error {
 public:
  RequestError(int status, const std::string& what, nlohmann::json fields = nlohmann::json::object())
      : std::runtime_error(what), status_(status), fields_(std::move(fields)) {}
  int status() const noexcept { return status_; }
  const nlohmann::json& fields() const noexcept { return fields_; }

 private:
  int status_;
  nlohmann::json fields_;
};

struct RolloutRequest {
  std::string prompt;
  sim::BehaviorDescriptor bd;
  int n_rollouts{5};
  double temperature{1.0};
  std::uint64_t seed{0};
  bool judge{false};  // also score with the LLM judge when one is configured

  // 400 with per-field diagnostics on malformed bodies, 422 when bd lies
  // outside the map.
  static RolloutRequest parse(const nlohmann::json& body, const sim::MazeMap& map);
  nlohmann::json to_json() const;
};

struct RolloutResponse {
  std::vector<std::vector<std::array<double, 2>>> trajectories;  // robot positions, H + 1 each
  std::vector<std::array<double, 2>> achieved_bds;
  std::vector<double> bd_errors;       // normalized by the map diagonal
  std::vector<double> bd_errors_abs;   // world units
  std::vector<double> oracle_scores;
  std::vector<double> judge_scores;    // empty unless requested and available
  int chosen_index{0};                 // argmin bd error, lowest index on ties
  nlohmann::json intent;               // what the oracle scored against

  nlohmann::json to_json() const;
};

struct ServiceOptions {
  eval::OracleParams oracle{};
  int workers{1};       // rollouts computed concurrently
  int max_queue{8};     // requests allowed to wait for a worker; beyond that 503
  std::string checkpoint_id;
};

// Immutable model state shared by all requests.
class PolicyService {
 public:
  PolicyService(policy::PolicyModel model, policy::ActionCodebook codebook, describe::Tokenizer tokenizer,
                sim::Simulator sim, ServiceOptions options = {},
                std::shared_ptr<describe::LLMClient> judge_client = nullptr);

  // Loads <checkpoint> and <tokenizer>; the checkpoint id is the file
  // fingerprint.
  static std::unique_ptr<PolicyService> open(const std::filesystem::path& checkpoint,
                                             const std::filesystem::path& tokenizer, sim::Simulator sim,
                                             ServiceOptions options = {},
                                             std::shared_ptr<describe::LLMClient> judge_client = nullptr);

  // Deterministic in (model, request); rollout r uses derive_rng(seed, r).
  RolloutResponse rollout(const RolloutRequest& req) const;

  nlohmann::json map_json() const;
  nlohmann::json model_json() const;

  struct Reply {
    int status{200};
    nlohmann::json body;
  };
  // Transport-free routing used by the HTTP server; also directly testable.
  Reply handle(const std::string& method, const std::string& path, const std::string& body);

  const sim::Simulator& simulator() const { return sim_; }

 private:
  Reply handle_rollout(const std::string& body);

  policy::PolicyModel model_;
  policy::ActionCodebook codebook_;
  describe::Tokenizer tokenizer_;
  sim::Simulator sim_;
  ServiceOptions options_;
  std::shared_ptr<describe::LLMClient> judge_;

  std::mutex mutex_;
  std::condition_variable cv_;
  int running_{0};
  int waiting_{0};
};

// HTTP front end over a PolicyService.
class HttpServer {
 public:
  explicit HttpServer(PolicyService& service);
  ~HttpServer();
  // Binds (port 0 picks a free one) and serves on a background thread.
  int start(const std::string& host, int port);
  // Blocks until stop() is called from another thread or a signal handler.
  void run(const std::string& host, int port);
  // Blocks until the background listener exits (after stop()).
  void wait();
  void stop();

 private:
  void install_routes();

  PolicyService& service_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

}  // namespace pqd::service
