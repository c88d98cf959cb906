#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace pqd::ad {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Graph node. Leaves (parameters, constants) have no backward function.
struct Node {
  Matrix value;
  Matrix grad;  // allocated lazily; same shape as value
  bool requires_grad{false};
  bool is_bias{false};  // exempt from weight decay
  std::string name;
  std::vector<std::shared_ptr<Node>> parents;
  std::function<void(Node&)> backward_fn;  // reads self.grad, accumulates into parents

  void ensure_grad();
};

// Handle to a 2-D tensor (rows x cols). Vectors are 1 x n or n x 1.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::shared_ptr<Node> n) : node_(std::move(n)) {}

  bool defined() const { return node_ != nullptr; }
  Eigen::Index rows() const { return node_->value.rows(); }
  Eigen::Index cols() const { return node_->value.cols(); }
  std::vector<Eigen::Index> shape() const { return {rows(), cols()}; }
  Eigen::Index size() const { return node_->value.size(); }

  const Matrix& value() const { return node_->value; }
  Matrix& mutable_value() { return node_->value; }
  const Matrix& grad() const { return node_->grad; }
  Matrix& mutable_grad() { return node_->grad; }
  bool has_grad() const { return node_->grad.size() == node_->value.size() && node_->value.size() > 0; }
  bool requires_grad() const { return node_->requires_grad; }
  bool is_bias() const { return node_->is_bias; }
  const std::string& name() const { return node_->name; }

  double item() const;
  void zero_grad();

  const std::shared_ptr<Node>& node() const { return node_; }

 private:
  std::shared_ptr<Node> node_;
};

// Trainable leaf.
Tensor parameter(Matrix value, std::string name = {}, bool is_bias = false);
// Non-trainable leaf.
Tensor constant(Matrix value);
Tensor constant_scalar(double v);

// Populates grads of every requires_grad leaf reachable from `loss` (adding
// to what is already there) and releases the graph. Throws DomainError for a
// non-scalar loss.
void backward(const Tensor& loss);

// While alive on this thread, ops record no graph.
class NoGradGuard {
 public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool previous_;
};

bool grad_enabled();

// Output node for an op: records parents and the backward function when
// graph recording is on and some parent requires grad.
Tensor make_result(Matrix value, std::vector<Tensor> parents, std::function<void(Node&)> backward_fn);

}  // namespace pqd::ad
