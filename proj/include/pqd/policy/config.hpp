#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace pqd::policy {

struct ModelConfig {
  int embed_dim{64};
  int n_layers{2};
  int n_heads{4};
  int text_budget{64};
  int horizon{100};
  std::array<int, 2> clusters{4, 4};
  int mlp_multiplier{4};        // attention MLP width = mlp_multiplier * embed_dim
  int embed_mlp_hidden{128};    // f_O, f_A, f_B: in -> hidden -> hidden -> embed_dim
  std::vector<int> cluster_head_hidden{64, 64};
  std::vector<int> offset_head_hidden{256, 256};
  double dropout{0.1};          // on attention outputs only
  int vocab_size{512};
  // Rows of the text-position table g_p and the timestep table g_t.
  int position_table{0};
  int timestep_table{0};
  double layer_norm_eps{1e-5};
  double obs_range_max{50.0};   // laser normalization
  std::array<double, 2> bd_extent{200.0, 200.0};
  double init_std{0.02};

  int context_length() const { return text_budget + 3 * (horizon + 1); }
  // Packed training sequence: text, then (b, o_t, a_t) for t < horizon.
  int sequence_length() const { return text_budget + 3 * horizon; }
  int offset_dim() const { return clusters[0] + clusters[1]; }

  // Throws ConfigError.
  void validate() const;

  nlohmann::json to_json() const;
  static ModelConfig from_json(const nlohmann::json& j);

  // Embed 64, 2 layers, 4 heads, H=100, text budget 64, 4 clusters per dimension.
  static ModelConfig desk(int vocab_size);
  // The published architecture: embed 360, context 1435 with 226 text slots,
  // vocabulary 1500, cluster heads 64-64, offset head 1024-1024.
  static ModelConfig paper();
  static ModelConfig preset(const std::string& name, int vocab_size);
};

// Closed-form parameter count of the architecture.
std::size_t parameter_count(const ModelConfig& cfg);

struct TrainConfig {
  int batch_size{30};
  long steps{4000};
  long warmup{200};
  double max_lr{1e-3};
  double min_lr_ratio{0.1};
  double beta1{0.9};
  double beta2{0.95};
  double weight_decay{0.1};
  double grad_clip{1.0};  // <= 0 disables
  double focal_kappa{2.0};
  double offset_lambda{1.0};
  long eval_every{250};
  int eval_rows{200};     // validation rows per evaluation
  long log_every{50};
  std::uint64_t seed{0};

  void validate() const;
  nlohmann::json to_json() const;
  static TrainConfig from_json(const nlohmann::json& j);
};

}  // namespace pqd::policy
