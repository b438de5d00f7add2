#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "simguard/graph.hpp"
#include "simguard/matrix.hpp"

namespace simguard {

/// Symmetric normalized adjacency A_hat = D^{-1/2}(A+I)D^{-1/2} in CSR
/// form, built over an induced subgraph with self-loops added. Degrees
/// include the self-loop.
class NormalizedAdjacency {
  public:
    static NormalizedAdjacency build(const AttributedGraph& g, const IdSet& ids);

    std::size_t n() const { return n_; }
    const std::vector<NodeId>& ids() const { return ids_; }

    /// A_hat * X (dense result).
    Matrix multiply(const Matrix& x) const;

    /// Dense copy, for small oracles.
    Matrix to_dense() const;

    std::size_t nnz() const { return values_.size(); }
    double value_at(std::size_t i, std::size_t j) const;

  private:
    std::size_t n_ = 0;
    IdSet ids_;  // original node ids in row order
    std::vector<std::size_t> row_ptr_;
    std::vector<std::size_t> col_idx_;
    std::vector<double> values_;
};

NormalizedAdjacency normalize_adjacency(const AttributedGraph& g, const IdSet& ids);

// ---- forward/backward op pairs ----

/// y = x*w + 1*b^T  (b has shape 1 x cols(w)); pass b = nullptr to skip bias.
Matrix affine_forward(const Matrix& x, const Matrix& w, const Matrix* b);
struct AffineGrads {
    Matrix dx;
    Matrix dw;
    Matrix db;  // 1 x cols(w); empty if no bias
};
AffineGrads affine_backward(const Matrix& x, const Matrix& w, const Matrix& dy, bool has_bias);

Matrix relu_forward(const Matrix& x);
Matrix relu_backward(const Matrix& x, const Matrix& dy);

/// Inverted-scaling dropout mask: entries are 0 or 1/(1-rate).
Matrix dropout_mask(std::size_t rows, std::size_t cols, double rate, Rng& rng);

/// Mean cross-entropy of softmax(logits) over the given rows; dlogits is
/// dense over all rows (zero on unlisted rows).
struct SoftmaxCeResult {
    double loss;
    Matrix dlogits;
    std::vector<int> predictions;  // argmax per row, all rows
};
SoftmaxCeResult softmax_cross_entropy(const Matrix& logits,
                                      const std::vector<std::pair<NodeId, int>>& labeled);

/// Per-row L1 reconstruction losses |x_i - t_i|_1 and the gradient of
/// their mean w.r.t. x.
struct L1LossResult {
    std::vector<double> per_row;
    double mean;
    Matrix dx;
};
L1LossResult l1_row_loss(const Matrix& x, const Matrix& target);

/// Row-wise L2 normalization with norm floor 1e-12.
struct RowNormalizeResult {
    Matrix y;
    std::vector<double> norms;  // pre-floor norms
};
RowNormalizeResult row_normalize_forward(const Matrix& x);
Matrix row_normalize_backward(const RowNormalizeResult& fwd, const Matrix& dy);

// ---- Adam ----

struct AdamState {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    std::uint64_t step = 0;
    std::vector<Matrix> m;
    std::vector<Matrix> v;

    static AdamState init(const std::vector<Matrix>& params, double lr);
};

/// One bias-corrected Adam update, in place.
void adam_step(std::vector<Matrix>& params, const std::vector<Matrix>& grads, AdamState& state);

// ---- gradient checking ----

/// Callable returning (loss, gradients) at the given parameters.
using LossAndGradFn =
    std::function<std::pair<double, std::vector<Matrix>>(const std::vector<Matrix>&)>;

/// Compares the analytic gradient against central finite differences,
/// entry by entry; returns max_e |g_a - g_n| / max(|g_a|, |g_n|, 1e-8).
double grad_check(const LossAndGradFn& fn, std::vector<Matrix> params, double epsilon);

// ---- weight serialization ("SGWT", u32 count, per tensor u32 rows, u32 cols, f64 LE) ----

void save_weights(const std::vector<Matrix>& tensors, const std::string& path);
std::vector<Matrix> load_weights(const std::string& path);

}  // namespace simguard
