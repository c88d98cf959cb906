#pragma once

#include <functional>
#include <vector>

#include "pqd/autodiff/tensor.hpp"

namespace pqd::ad {

// Central finite differences for every element of every input, compared with
// the analytic gradient of loss_fn (which must rebuild its graph on each
// call). Returns max over inputs of ||analytic - numeric|| / max(||analytic||,
// ||numeric||, 1e-12), Euclidean norms taken per input tensor.
double gradcheck(const std::function<Tensor()>& loss_fn, std::vector<Tensor> inputs, double eps = 1e-5);

struct SpotCheck {
  double analytic;
  double numeric;
  double rel_error;  // |a - n| / max(|a|, |n|, 1e-8)
};

// Finite-difference check of element (row, col) of one input.
SpotCheck spot_check(const std::function<Tensor()>& loss_fn, Tensor input, Eigen::Index row, Eigen::Index col,
                     double eps = 1e-5);

}  // namespace pqd::ad
