#include "simguard/matrix.hpp"

#include <cmath>
#include <cstring>

namespace simguard {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_)
        throw ArgumentError("Matrix: data length does not match rows*cols");
}

bool Matrix::all_finite() const {
    for (double v : data_)
        if (!std::isfinite(v)) return false;
    return true;
}

Matrix Matrix::glorot(std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix m(rows, cols);
    double a = std::sqrt(6.0 / static_cast<double>(rows + cols));
    for (double& v : m.data()) v = rng.uniform(-a, a);
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ArgumentError("matmul: inner dimensions differ");
    Matrix c(a.rows(), b.cols());
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    for (std::size_t i = 0; i < n; ++i) {
        double* ci = c.row(i);
        const double* ai = a.row(i);
        for (std::size_t p = 0; p < k; ++p) {
            const double aip = ai[p];
            if (aip == 0.0) continue;
            const double* bp = b.row(p);
            for (std::size_t j = 0; j < m; ++j) ci[j] += aip * bp[j];
        }
    }
    return c;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ArgumentError("matmul_tn: row counts differ");
    Matrix c(a.cols(), b.cols());
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    for (std::size_t p = 0; p < n; ++p) {
        const double* ap = a.row(p);
        const double* bp = b.row(p);
        for (std::size_t i = 0; i < k; ++i) {
            const double api = ap[i];
            if (api == 0.0) continue;
            double* ci = c.row(i);
            for (std::size_t j = 0; j < m; ++j) ci[j] += api * bp[j];
        }
    }
    return c;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw ArgumentError("matmul_nt: column counts differ");
    Matrix c(a.rows(), b.rows());
    const std::size_t n = a.rows(), k = a.cols(), m = b.rows();
    for (std::size_t i = 0; i < n; ++i) {
        const double* ai = a.row(i);
        double* ci = c.row(i);
        for (std::size_t j = 0; j < m; ++j) {
            const double* bj = b.row(j);
            double s = 0.0;
            for (std::size_t p = 0; p < k; ++p) s += ai[p] * bj[p];
            ci[j] = s;
        }
    }
    return c;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

void add_inplace(Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw ArgumentError("add_inplace: shape mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a.data()[i] += b.data()[i];
}

void axpy_inplace(Matrix& a, double alpha, const Matrix& b) {
    if (!a.same_shape(b)) throw ArgumentError("axpy_inplace: shape mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a.data()[i] += alpha * b.data()[i];
}

void scale_inplace(Matrix& a, double alpha) {
    for (double& v : a.data()) v *= alpha;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
    if (!a.same_shape(b)) throw ArgumentError("hadamard: shape mismatch");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) c.data()[i] = a.data()[i] * b.data()[i];
    return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw ArgumentError("vstack: column counts differ");
    Matrix c(a.rows() + b.rows(), a.cols());
    std::memcpy(c.data().data(), a.data().data(), a.size() * sizeof(double));
    std::memcpy(c.data().data() + a.size(), b.data().data(), b.size() * sizeof(double));
    return c;
}

Matrix take_rows(const Matrix& src, const IdSet& rows) {
    Matrix out(rows.size(), src.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const NodeId r = rows[i];
        if (r < 0 || static_cast<std::size_t>(r) >= src.rows())
            throw ArgumentError("take_rows: row index out of range");
        std::memcpy(out.row(i), src.row(static_cast<std::size_t>(r)),
                    src.cols() * sizeof(double));
    }
    return out;
}

double l2_norm_row(const Matrix& m, std::size_t i) {
    double s = 0.0;
    const double* r = m.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) s += r[j] * r[j];
    return std::sqrt(s);
}

double l1_norm_row(const Matrix& m, std::size_t i) {
    double s = 0.0;
    const double* r = m.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) s += std::fabs(r[j]);
    return s;
}

double dot_rows(const Matrix& a, std::size_t i, const Matrix& b, std::size_t j) {
    if (a.cols() != b.cols()) throw ArgumentError("dot_rows: column counts differ");
    double s = 0.0;
    const double* ra = a.row(i);
    const double* rb = b.row(j);
    for (std::size_t k = 0; k < a.cols(); ++k) s += ra[k] * rb[k];
    return s;
}

double cosine_rows(const Matrix& a, std::size_t i, const Matrix& b, std::size_t j) {
    double na = l2_norm_row(a, i);
    double nb = l2_norm_row(b, j);
    if (na == 0.0 || nb == 0.0) return 0.0;
    return dot_rows(a, i, b, j) / (na * nb);
}

}  // namespace simguard
