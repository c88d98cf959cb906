#pragma once

#include <array>
#include <vector>

#include "pqd/common/random.hpp"
#include "pqd/policy/codebook.hpp"
#include "pqd/policy/model.hpp"
#include "pqd/sim/simulator.hpp"

namespace pqd::policy {

// Per dimension: cluster ~ softmax(logits / temperature), then center plus
// that cluster's offset, clamped to [-1, 1]. temperature <= 0 takes the
// argmax (lowest index on ties) and consumes no randomness.
Act sample_action(const ActionDistribution& dist, const ActionCodebook& codebook, Rng& rng, double temperature);

// Incremental decoding with per-layer key/value caches. Equivalent to
// re-running the full forward pass on the growing packed sequence. The model
// must outlive the session and stay unmodified.
class InferenceSession {
 public:
  InferenceSession(const PolicyModel& model, const std::vector<int>& tokens, std::array<double, 2> bd);

  // Feeds (b, o_t) and returns the distribution predicted at o_t.
  ActionDistribution observe(const Obs& observation);
  // Feeds a_t; must follow observe().
  void act(const Act& action);

  int step() const { return step_; }
  int length() const { return length_; }

 private:
  // Runs new embedded rows through every layer; returns the final residual rows.
  ad::Matrix append(const ad::Matrix& rows);

  const PolicyModel* model_;
  std::vector<ad::Matrix> keys_, values_;
  ad::Matrix bd_embedding_;  // f_B(b), 1 x d
  int length_{0};
  int step_{0};
  bool awaiting_action_{false};
};

// Closed-loop rollout of `horizon` steps (<= cfg.horizon; DomainError
// otherwise). The descriptor token always carries the target bd.
sim::Trajectory generate(const PolicyModel& model, const ActionCodebook& codebook, const sim::Simulator& sim,
                         const std::vector<int>& tokens, std::array<double, 2> bd, int horizon, Rng& rng,
                         double temperature = 1.0);

inline Obs to_obs(const sim::Observation& o) {
  return {o.ranges[0], o.ranges[1], o.ranges[2], o.bumpers[0] ? 1.0 : 0.0, o.bumpers[1] ? 1.0 : 0.0};
}
inline Act to_act(const sim::Action& a) { return {a.linear, a.angular}; }

}  // namespace pqd::policy
