#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "pqd/autodiff/checkpoint.hpp"
#include "pqd/autodiff/tensor.hpp"
#include "pqd/common/random.hpp"
#include "pqd/policy/codebook.hpp"
#include "pqd/policy/config.hpp"

namespace pqd::policy {

using Obs = std::array<double, 5>;  // raw: three laser ranges, two bumpers (0/1)
using Act = std::array<double, 2>;

// Model input for one trajectory: exactly text_budget tokens, the target bd,
// and at least `steps` observations and actions.
struct SequenceInput {
  std::vector<int> tokens;
  std::array<double, 2> bd{};
  std::vector<Obs> observations;
  std::vector<Act> actions;
};

enum class Modality { Text, Descriptor, Observation, Action };

// Layout of {T_1..T_k, b, o_0, a_0, ..., b, o_{n-1}, a_{n-1}}.
struct PackedSequence {
  std::vector<Modality> modality;
  std::vector<int> text_position;  // -1 off text slots
  std::vector<int> timestep;       // -1 on text slots
  std::vector<bool> loss_mask;     // true at observation positions

  int length() const { return static_cast<int>(modality.size()); }
  static int descriptor_pos(int text_budget, int t) { return text_budget + 3 * t; }
  static int observation_pos(int text_budget, int t) { return text_budget + 3 * t + 1; }
  static int action_pos(int text_budget, int t) { return text_budget + 3 * t + 2; }
};

// Throws DomainError when `steps` exceeds the horizon.
PackedSequence pack_layout(const ModelConfig& cfg, int steps);

// Per-dimension cluster logits and the offset proposed for each cluster.
struct ActionDistribution {
  std::array<std::vector<double>, 2> logits;
  std::array<std::vector<double>, 2> offsets;

  bool finite() const;
};

// Output of a batched forward pass; rows are (sample, timestep) in
// sample-major order.
struct ForwardOutput {
  std::array<ad::Tensor, 2> logits;
  ad::Tensor offsets;  // [rows, K1 + K2]; columns [0, K1) for dim 0, then dim 1

  ActionDistribution at(Eigen::Index row) const;
};

class PolicyModel {
 public:
  PolicyModel(ModelConfig cfg, std::uint64_t seed);

  const ModelConfig& config() const { return cfg_; }
  const std::vector<ad::Tensor>& parameters() const { return params_; }
  ad::Tensor& parameter(const std::string& name);
  std::size_t num_parameters() const;

  // Embedded packed sequences, [batch * (text_budget + 3 * steps), d].
  ad::Tensor embed(const std::vector<const SequenceInput*>& batch, int steps) const;

  // Action distributions at every observation position. `dropout_rng` is
  // required when training with dropout > 0.
  ForwardOutput forward(const std::vector<const SequenceInput*>& batch, int steps, bool training = false,
                        Rng* dropout_rng = nullptr) const;

  std::vector<ad::NamedMatrix> state() const;
  void load_state(const std::vector<ad::NamedMatrix>& tensors);

  // Parameters plus config and codebook in one checkpoint.
  void save(const std::filesystem::path& path, const ActionCodebook& codebook,
            const nlohmann::json& extra = {}) const;
  struct Loaded;
  static Loaded load(const std::filesystem::path& path);

  // Helpers shared with the cached inference path.
  ad::Tensor embed_mlp(int which, const ad::Tensor& x) const;  // 0: O, 1: A, 2: B
  std::array<double, 5> observation_features(const Obs& o) const;
  std::array<double, 2> descriptor_features(const std::array<double, 2>& bd) const;
  std::array<double, 2> action_features(const Act& a) const { return a; }
  ForwardOutput heads(const ad::Tensor& hidden) const;  // hidden after the final LayerNorm

  struct Block {
    ad::Tensor ln1_g, ln1_b, w_qkv, w_o, ln2_g, ln2_b, w_fc, w_proj;
  };
  struct Mlp {
    std::vector<ad::Tensor> w, b;
    ad::Tensor operator()(const ad::Tensor& x) const;
  };
  const ad::Tensor& token_table() const { return f_t_; }
  const ad::Tensor& position_table() const { return g_p_; }
  const ad::Tensor& timestep_table() const { return g_t_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  const ad::Tensor& final_ln_gain() const { return lnf_g_; }
  const ad::Tensor& final_ln_bias() const { return lnf_b_; }

 private:
  Mlp make_mlp(const std::string& name, int in, const std::vector<int>& hidden, int out, Rng& rng);

  ModelConfig cfg_;
  ad::Tensor f_t_, g_p_, g_t_;
  std::array<Mlp, 3> embed_mlps_;
  std::vector<Block> blocks_;
  ad::Tensor lnf_g_, lnf_b_;
  std::array<Mlp, 2> cluster_heads_;
  Mlp offset_head_;
  std::vector<ad::Tensor> params_;
};

struct PolicyModel::Loaded {
  PolicyModel model;
  ActionCodebook codebook;
  nlohmann::json metadata;
};

}  // namespace pqd::policy
