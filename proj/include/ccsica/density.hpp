#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "ccsica/matrix.hpp"

namespace ccsica {

/// Rule-of-thumb kernel bandwidth h = 1.06 * T^{-1/5}.
inline double silverman_bandwidth(std::size_t t_samples) {
    if (t_samples < 1) throw std::invalid_argument("silverman_bandwidth: T >= 1 required");
    return 1.06 * std::pow(static_cast<double>(t_samples), -0.2);
}

/// Standard normal pdf.
inline double kernel_uni(double u) {
    constexpr double c = 0.3989422804014327;  // (2*pi)^{-1/2}
    return c * std::exp(-0.5 * u * u);
}

/// M-dimensional standard normal pdf; factorizes over coordinates.
inline double kernel_multi(std::span<const double> u) {
    double sq = 0.0;
    for (double v : u) sq += v * v;
    const double log2pi = std::log(2.0 * std::numbers::pi);
    return std::exp(-0.5 * sq - 0.5 * static_cast<double>(u.size()) * log2pi);
}

// Kernel contributions with |u| beyond this are ~1e-14 of the peak and
// may be skipped when truncation is enabled.
inline constexpr double kKernelTruncationRadius = 8.0;

/// Univariate Gaussian Parzen estimator over a fixed sample set.
/// Evaluations include the self-term when queried at a sample point.
class ParzenUnivariate {
public:
    ParzenUnivariate(std::vector<double> samples, double bandwidth, bool truncated = false)
        : samples_(std::move(samples)), h_(bandwidth), truncated_(truncated) {
        if (samples_.size() < 2)
            throw std::invalid_argument("ParzenUnivariate: at least 2 samples required");
        if (!(h_ > 0.0)) throw std::invalid_argument("ParzenUnivariate: bandwidth must be > 0");
    }

    double bandwidth() const { return h_; }
    const std::vector<double>& samples() const { return samples_; }

    /// (1/(T h)) sum_t kernel((y - s_t)/h)
    double pdf(double y) const {
        double acc = 0.0;
        for (double s : samples_) {
            const double u = (y - s) / h_;
            if (truncated_ && std::abs(u) > kKernelTruncationRadius) continue;
            acc += kernel_uni(u);
        }
        return acc / (static_cast<double>(samples_.size()) * h_);
    }

    /// d/dy pdf(y) = (1/(T h^2)) sum_t kernel'((y - s_t)/h), kernel'(u) = -u kernel(u)
    double pdf_deriv(double y) const {
        double acc = 0.0;
        for (double s : samples_) {
            const double u = (y - s) / h_;
            if (truncated_ && std::abs(u) > kKernelTruncationRadius) continue;
            acc += -u * kernel_uni(u);
        }
        return acc / (static_cast<double>(samples_.size()) * h_ * h_);
    }

private:
    std::vector<double> samples_;
    double h_;
    bool truncated_;
};

/// Multivariate Gaussian Parzen estimator; samples are the columns of an
/// M x T matrix; a single bandwidth is shared across dimensions.
class ParzenMultivariate {
public:
    ParzenMultivariate(Matrix samples, double bandwidth, bool truncated = false)
        : samples_(std::move(samples)), h_(bandwidth), truncated_(truncated) {
        if (samples_.cols() < 2)
            throw std::invalid_argument("ParzenMultivariate: at least 2 samples required");
        if (!(h_ > 0.0)) throw std::invalid_argument("ParzenMultivariate: bandwidth must be > 0");
    }

    std::size_t dim() const { return samples_.rows(); }
    double bandwidth() const { return h_; }

    /// (1/(T h^M)) sum_t kernel((y - x_t)/h)
    double pdf(std::span<const double> y) const {
        const std::size_t m = samples_.rows();
        const std::size_t t_count = samples_.cols();
        if (y.size() != m)
            throw std::invalid_argument("ParzenMultivariate::pdf: dimension mismatch");
        const double log2pi = std::log(2.0 * std::numbers::pi);
        const double limit_sq =
            kKernelTruncationRadius * kKernelTruncationRadius * static_cast<double>(m);
        double acc = 0.0;
        for (std::size_t t = 0; t < t_count; ++t) {
            double sq = 0.0;
            for (std::size_t d = 0; d < m; ++d) {
                const double u = (y[d] - samples_(d, t)) / h_;
                sq += u * u;
            }
            if (truncated_ && sq > limit_sq) continue;
            acc += std::exp(-0.5 * sq - 0.5 * static_cast<double>(m) * log2pi);
        }
        return acc / (static_cast<double>(t_count) * std::pow(h_, static_cast<double>(m)));
    }

private:
    Matrix samples_;
    double h_;
    bool truncated_;
};

}  // namespace ccsica
