#pragma once

#include <vector>

#include "json.hpp"
#include "pqd/autodiff/tensor.hpp"

namespace pqd::ad {

struct AdamWConfig {
  double beta1{0.9};
  double beta2{0.95};
  double eps{1e-8};
  double weight_decay{0.1};  // decoupled; bias-flagged tensors are exempt

  nlohmann::json to_json() const;
  static AdamWConfig from_json(const nlohmann::json& j);
};

class AdamW {
 public:
  AdamW(std::vector<Tensor> params, AdamWConfig cfg = {});

  // One update from the accumulated grads. Parameters without a grad buffer
  // are treated as having zero gradient.
  void step(double lr);
  void zero_grad();

  long step_count() const { return t_; }
  const AdamWConfig& config() const { return cfg_; }
  const std::vector<Tensor>& params() const { return params_; }
  std::vector<Matrix>& first_moments() { return m_; }
  std::vector<Matrix>& second_moments() { return v_; }
  void set_step_count(long t) { t_ = t; }

 private:
  std::vector<Tensor> params_;
  AdamWConfig cfg_;
  std::vector<Matrix> m_;
  std::vector<Matrix> v_;
  long t_{0};
};

// Linear warmup including step 0 (max_lr * (step + 1) / warmup), then cosine
// decay from max_lr at step = warmup to min_ratio * max_lr at step = total.
double lr_schedule(long step, long warmup, double max_lr, long total, double min_ratio = 0.1);

// Global L2 norm of all grads.
double grad_norm(const std::vector<Tensor>& params);
// Rescales grads so their global norm is at most max_norm; returns the norm before.
double clip_grad_norm(const std::vector<Tensor>& params, double max_norm);

}  // namespace pqd::ad
