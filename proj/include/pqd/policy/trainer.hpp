#pragma once

#include <filesystem>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "pqd/policy/codebook.hpp"
#include "pqd/policy/config.hpp"
#include "pqd/policy/model.hpp"

namespace pqd::policy {

struct TrainLogRow {
  long step{0};
  double lr{0.0};
  double train_loss{0.0};
  double val_loss{std::numeric_limits<double>::quiet_NaN()};  // NaN when not evaluated at this step
};

struct TrainResult {
  std::vector<TrainLogRow> log;                       // every logged or evaluated step
  std::vector<std::pair<long, double>> val_series;    // (step, validation loss)
  std::vector<double> train_curve;                    // loss of every step
  long best_step{-1};
  double best_val_loss{std::numeric_limits<double>::infinity()};
};

// Thrown on a NaN/inf training loss; the offending batch is dumped to
// dump_path when an output directory was given.
class NonFiniteLossError : public std::runtime_error {
 public:
  NonFiniteLossError(const std::string& what, long step, std::string dump_path)
      : std::runtime_error(what), step_(step), dump_path_(std::move(dump_path)) {}
  long step() const noexcept { return step_; }
  const std::string& dump_path() const noexcept { return dump_path_; }

 private:
  long step_;
  std::string dump_path_;
};

struct TrainOptions {
  // When set: log.csv, periodic checkpoints ckpt_<step>.json and best.json.
  std::filesystem::path out_dir;
  bool restore_best{true};  // load the best validation state at the end
  std::function<void(const TrainLogRow&)> on_log;
  // Checked after each logged step; true ends training early.
  std::function<bool(const TrainLogRow&)> stop_when;
};

// Mean validation loss (argmax-cluster regression) over `rows`.
double validation_loss(const PolicyModel& model, const std::vector<SequenceInput>& rows,
                       const ActionCodebook& codebook, double kappa, double lambda, int chunk = 8);
// Training-form loss (true-cluster regression) over `rows`, dropout off.
double evaluation_loss(const PolicyModel& model, const std::vector<SequenceInput>& rows,
                       const ActionCodebook& codebook, double kappa, double lambda, int chunk = 8);

// Index of the smallest loss; earliest on ties, -1 when empty.
long select_best(const std::vector<std::pair<long, double>>& series);

// AdamW with warmup + cosine schedule over minibatches sampled without
// replacement per epoch. Deterministic for a fixed seed and data.
TrainResult train(PolicyModel& model, const ActionCodebook& codebook, const std::vector<SequenceInput>& train_rows,
                  const std::vector<SequenceInput>& val_rows, const TrainConfig& cfg,
                  const TrainOptions& options = {});

}  // namespace pqd::policy
