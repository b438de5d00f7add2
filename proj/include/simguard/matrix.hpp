#pragma once

#include <cstddef>
#include <vector>

#include "simguard/common.hpp"
#include "simguard/rng.hpp"

namespace simguard {

/// Dense row-major matrix of 64-bit reals. Value type; all kernel
/// operations are pure functions of their inputs.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool same_shape(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    bool all_finite() const;

    /// Glorot-uniform initialization: U(-a, a) with a = sqrt(6/(rows+cols)).
    static Matrix glorot(std::size_t rows, std::size_t cols, Rng& rng);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// ---- dense kernels ----

Matrix matmul(const Matrix& a, const Matrix& b);     // a * b
Matrix matmul_tn(const Matrix& a, const Matrix& b);  // a^T * b
Matrix matmul_nt(const Matrix& a, const Matrix& b);  // a * b^T

Matrix transpose(const Matrix& a);

void add_inplace(Matrix& a, const Matrix& b);               // a += b
void axpy_inplace(Matrix& a, double alpha, const Matrix& b);  // a += alpha*b
void scale_inplace(Matrix& a, double alpha);

Matrix hadamard(const Matrix& a, const Matrix& b);

/// Appends b's rows below a's (column counts must match).
Matrix vstack(const Matrix& a, const Matrix& b);

/// New matrix from the given rows of src.
Matrix take_rows(const Matrix& src, const IdSet& rows);

double l2_norm_row(const Matrix& m, std::size_t i);
double l1_norm_row(const Matrix& m, std::size_t i);

double dot_rows(const Matrix& a, std::size_t i, const Matrix& b, std::size_t j);

/// Cosine similarity between rows; returns 0 when either norm is 0.
double cosine_rows(const Matrix& a, std::size_t i, const Matrix& b, std::size_t j);

}  // namespace simguard
