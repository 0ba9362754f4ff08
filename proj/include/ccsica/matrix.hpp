#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <sstream>
#include <vector>

#include "ccsica/errors.hpp"

namespace ccsica {

/// Dense row-major matrix of doubles. Used both for small square
/// matrices (mixing/demixing, covariance) and for channel-major signal
/// blocks (rows = channels, columns = time samples).
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    Matrix(std::initializer_list<std::initializer_list<double>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("Matrix: ragged initializer");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_ && rows_ > 0; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool all_finite() const {
        return std::all_of(data_.begin(), data_.end(),
                           [](double v) { return std::isfinite(v); });
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : data_) m = std::max(m, std::abs(v));
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("Matrix multiply: inner dimensions disagree");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const double aik = a(i, k);
                if (aik == 0.0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix subtract: shapes disagree");
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix add: shapes disagree");
        Matrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
        return c;
    }

    friend Matrix operator*(double s, const Matrix& a) {
        Matrix c = a;
        for (double& v : c.data_) v *= s;
        return c;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Symmetric eigendecomposition result: A = E diag(values) E^T with
/// eigenvalues in descending order and eigenvectors as orthonormal columns.
struct SymEig {
    std::vector<double> values;
    Matrix vectors;
};

namespace detail {

inline void require_square(const Matrix& a, const char* who) {
    if (!a.square())
        throw std::invalid_argument(std::string(who) + ": square matrix required");
}

}  // namespace detail

/// Cyclic Jacobi eigensolver for small symmetric matrices (M <= 8 in
/// practice). Input asymmetry beyond 1e-9 relative is rejected.
inline SymEig sym_eig(const Matrix& a_in) {
    detail::require_square(a_in, "sym_eig");
    if (!a_in.all_finite()) throw std::invalid_argument("sym_eig: non-finite entries");
    const std::size_t n = a_in.rows();
    const double scale = a_in.max_abs();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(a_in(i, j) - a_in(j, i)) > 1e-9 * std::max(scale, 1e-30))
                throw std::invalid_argument("sym_eig: matrix is not symmetric");

    Matrix a = a_in;
    Matrix e = Matrix::identity(n);

    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
        return std::sqrt(2.0 * s);
    };

    const double tol = 1e-15 * std::max(scale, 1e-300);
    const int max_sweeps = 100;
    int sweep = 0;
    while (off_norm() > tol * n) {
        if (++sweep > max_sweeps)
            throw numeric_error("sym_eig: Jacobi iteration failed to converge");
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= tol) continue;
                const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = a(r, p), arq = a(r, q);
                        a(r, p) = a(p, r) = c * arp - s * arq;
                        a(r, q) = a(q, r) = s * arp + c * arq;
                    }
                    const double erp = e(r, p), erq = e(r, q);
                    e(r, p) = c * erp - s * erq;
                    e(r, q) = s * erp + c * erq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    SymEig out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]);
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = e(r, order[k]);
    }
    return out;
}

/// Determinant by LU with partial pivoting. Zero is a valid return.
inline double determinant(const Matrix& w) {
    detail::require_square(w, "determinant");
    const std::size_t n = w.rows();
    Matrix a = w;
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
        if (a(piv, k) == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(k, j));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a(i, k) / a(k, k);
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

/// Signed-minor matrix: entry (m,l) = (-1)^{m+l} det(minor(m,l)).
/// Satisfies d det(W)/d w_ml = cofactor(m,l).
inline Matrix cofactor_matrix(const Matrix& w) {
    detail::require_square(w, "cofactor_matrix");
    const std::size_t n = w.rows();
    if (n == 1) return Matrix{{1.0}};
    Matrix cof(n, n);
    Matrix minor(n - 1, n - 1);
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t l = 0; l < n; ++l) {
            std::size_t r = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == m) continue;
                std::size_t c = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == l) continue;
                    minor(r, c++) = w(i, j);
                }
                ++r;
            }
            const double sign = ((m + l) % 2 == 0) ? 1.0 : -1.0;
            cof(m, l) = sign * determinant(minor);
        }
    }
    return cof;
}

/// Inverse via the adjugate; intended for the small matrices this
/// library works with.
inline Matrix inverse(const Matrix& a) {
    detail::require_square(a, "inverse");
    const double det = determinant(a);
    if (det == 0.0 || !std::isfinite(det))
        throw numeric_error("inverse: singular matrix");
    Matrix adj = cofactor_matrix(a).transposed();
    for (double& v : adj.data()) v /= det;
    return adj;
}

/// Rescale every row to unit Euclidean norm. A zero row means the
/// demixer has collapsed and is reported as an error.
inline Matrix normalize_rows(const Matrix& w) {
    Matrix out = w;
    for (std::size_t i = 0; i < w.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < w.cols(); ++j) s += w(i, j) * w(i, j);
        const double norm = std::sqrt(s);
        if (norm == 0.0) {
            std::ostringstream msg;
            msg << "normalize_rows: row " << i << " is zero (degenerate demixer)";
            throw numeric_error(msg.str());
        }
        for (std::size_t j = 0; j < w.cols(); ++j) out(i, j) = w(i, j) / norm;
    }
    return out;
}

}  // namespace ccsica
