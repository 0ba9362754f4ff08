#pragma once

// Independent reference implementations used only by the test suites.
// Everything here is deliberately brute-force so it cannot share a bug
// with the library code it checks.

#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "ccsica/matrix.hpp"

namespace oracle {

// Determinant by full cofactor (Laplace) expansion, O(n!).
inline double det_cofactor_expansion(const ccsica::Matrix& a) {
    const std::size_t n = a.rows();
    if (n == 1) return a(0, 0);
    double det = 0.0;
    ccsica::Matrix minor(n - 1, n - 1);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t c = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                minor(r - 1, c++) = a(r, k);
            }
        }
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        det += sign * a(0, j) * det_cofactor_expansion(minor);
    }
    return det;
}

// Central finite difference of a scalar function.
inline double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Trapezoid quadrature on a uniform grid.
inline double trapezoid(const std::function<double(double)>& f, double lo, double hi,
                        std::size_t n) {
    const double step = (hi - lo) / static_cast<double>(n);
    double acc = 0.5 * (f(lo) + f(hi));
    for (std::size_t i = 1; i < n; ++i) acc += f(lo + step * static_cast<double>(i));
    return acc * step;
}

// Direct-sum Cauchy-Schwarz quotient over already-transformed vectors:
// log( sum g^2(p) * sum g^2(q) / (sum g(p) g(q))^2 ).
inline double cs_quotient(const std::vector<double>& p, const std::vector<double>& q,
                          const std::function<double(double)>& g) {
    double v1 = 0.0, v2 = 0.0, v3 = 0.0;
    for (std::size_t t = 0; t < p.size(); ++t) {
        const double fp = g(p[t]);
        const double fq = g(q[t]);
        v1 += fp * fp;
        v2 += fq * fq;
        v3 += fp * fq;
    }
    if (v3 == 0.0) return (v1 == 0.0 || v2 == 0.0) ? 0.0 : INFINITY;
    return std::log(v1) + std::log(v2) - 2.0 * std::log(v3);
}

inline ccsica::Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                                    double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> dist(lo, hi);
    ccsica::Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

inline ccsica::Matrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
    ccsica::Matrix m = random_matrix(n, n, rng);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m(j, i) = m(i, j);
    return m;
}

inline ccsica::Matrix random_spd(std::size_t n, std::mt19937_64& rng) {
    ccsica::Matrix b = random_matrix(n, n, rng);
    ccsica::Matrix m = b.transposed() * b;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += 0.1;  // keep well conditioned
    return m;
}

inline double max_abs_diff(const ccsica::Matrix& a, const ccsica::Matrix& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

}  // namespace oracle
