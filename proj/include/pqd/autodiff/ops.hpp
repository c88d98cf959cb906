#pragma once

#include <vector>

#include "pqd/autodiff/tensor.hpp"
#include "pqd/common/random.hpp"

namespace pqd::ad {

// Shapes are (rows, cols). Shape mismatches throw DomainError.

Tensor matmul(const Tensor& a, const Tensor& b);
Tensor transpose(const Tensor& a);
// x [n, in] * w [in, out] (+ bias [1, out]).
Tensor linear(const Tensor& x, const Tensor& w, const Tensor& bias = {});

Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
// a [n, c] + row [1, c] on every row.
Tensor add_row(const Tensor& a, const Tensor& row);
// a [n, c] scaled per row by w [n, 1].
Tensor mul_col(const Tensor& a, const Tensor& w);
Tensor scale(const Tensor& a, double s);
Tensor add_scalar(const Tensor& a, double s);

Tensor gelu(const Tensor& a);  // tanh approximation
Tensor tanh(const Tensor& a);
Tensor exp(const Tensor& a);
Tensor log(const Tensor& a);
Tensor square(const Tensor& a);
// a^p elementwise for a >= 0; the derivative at p = 0 is 0.
Tensor pow(const Tensor& a, double p);

Tensor softmax_rows(const Tensor& a);
Tensor log_softmax_rows(const Tensor& a);
Tensor layer_norm(const Tensor& x, const Tensor& gamma, const Tensor& beta, double eps = 1e-5);

Tensor sum(const Tensor& a);
Tensor mean(const Tensor& a);
Tensor row_sum(const Tensor& a);  // [n, 1]

// Rows `ids` of table [V, d].
Tensor embedding(const Tensor& table, const std::vector<int>& ids);
Tensor gather_rows(const Tensor& a, const std::vector<int>& rows);
Tensor concat_rows(const std::vector<Tensor>& parts);
Tensor concat_cols(const std::vector<Tensor>& parts);
Tensor slice_cols(const Tensor& a, Eigen::Index start, Eigen::Index count);
// out[i] = a[i, idx[i]], shape [n, 1].
Tensor pick(const Tensor& a, const std::vector<int>& idx);
// Entries with col > row set to -inf (square input); gradient there is 0.
Tensor causal_mask(const Tensor& a);

// Inverted dropout; identity when p == 0 or !training.
Tensor dropout(const Tensor& a, double p, Rng& rng, bool training);

// Single-head softmax(q k^T / sqrt(d) + U) v with U = -inf above the
// diagonal, composed from the primitives above.
Tensor causal_attention(const Tensor& q, const Tensor& k, const Tensor& v);

// Fused multi-head causal attention over a batch of equal-length sequences.
// qkv: [batch * seq, 3 * d] laid out as [q | k | v], heads split each of q,
// k, v into contiguous d / heads column blocks. Returns [batch * seq, d].
Tensor multi_head_causal_attention(const Tensor& qkv, int batch, int seq, int heads);

}  // namespace pqd::ad
