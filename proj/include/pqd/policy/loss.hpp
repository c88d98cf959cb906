#pragma once

#include <vector>

#include "pqd/autodiff/tensor.hpp"
#include "pqd/policy/codebook.hpp"
#include "pqd/policy/model.hpp"

namespace pqd::policy {

// One action dimension of a batch of N prediction positions.
struct DimTargets {
  std::vector<int> cluster;  // true (nearest-center) cluster per row
  ad::Matrix residual;       // [N, 1]: true action minus that cluster's center
};

struct LossParts {
  ad::Tensor total;  // (focal + lambda * mse) / N
  ad::Tensor focal;  // sum over rows and dims of -(1 - p_true)^kappa log p_true, / N
  ad::Tensor mse;    // sum over rows and dims of (offset_true - residual)^2, / N
};

// logits[d]: [N, K_d]; offsets[d]: [N, K_d] with the offset for each cluster.
LossParts focal_offset_loss(const std::vector<ad::Tensor>& logits, const std::vector<ad::Tensor>& offsets,
                            const std::vector<DimTargets>& targets, double kappa, double lambda);

std::vector<DimTargets> make_targets(const std::vector<Act>& actions, const ActionCodebook& codebook);

// Loss over a forward pass whose rows line up with `actions`.
LossParts action_loss(const ForwardOutput& out, const std::vector<Act>& actions, const ActionCodebook& codebook,
                      double kappa, double lambda);

// Same focal term, but the regression uses the argmax cluster's center and
// offset instead of the true cluster's. Mean over rows.
double validation_loss_value(const std::vector<ActionDistribution>& dists, const std::vector<Act>& actions,
                             const ActionCodebook& codebook, double kappa, double lambda);

// The training loss evaluated on plain distributions (no graph).
double loss_value(const std::vector<ActionDistribution>& dists, const std::vector<Act>& actions,
                  const ActionCodebook& codebook, double kappa, double lambda);

}  // namespace pqd::policy
