// Copyright Contributors to the forid Project
// SPDX-License-Identifier: Apache-2.0

#ifndef FORID_EIG_HPP
#define FORID_EIG_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "forid/errors.hpp"
#include "forid/mmio.hpp"

namespace forid {

struct power_method_config {
    std::uint64_t iterations = 1; // executed exactly this many times
};

struct power_method_result {
    double lambda = 0.0;
    std::chrono::nanoseconds run_duration{0};
};

/// y = A x for the symmetric matrix whose stored triangle is (rows, cols,
/// values): off-diagonal entries contribute to both y[i] and y[j].
/// Accumulation stays at the working precision F. y is zeroed first.
template <typename F, typename I>
void spmv_sym(std::span<const I> rows, std::span<const I> cols, std::span<const F> values,
              std::span<const F> x, std::span<F> y) {
    for (auto& v : y)
        v = F{0};
    for (std::size_t k = 0; k < values.size(); ++k) {
        const auto i = static_cast<std::size_t>(rows[k]);
        const auto j = static_cast<std::size_t>(cols[k]);
        y[i] += values[k] * x[j];
        if (i != j)
            y[j] += values[k] * x[i];
    }
}

template <typename F, typename I>
void spmv_sym(const coo_matrix& m, std::span<const F> x, std::span<F> y) {
    spmv_sym<F, I>(m.row_indices<I>(), m.col_indices<I>(), m.values<F>(), x, y);
}

/// Fixed-count power iteration for the dominant eigenvalue: starting from the
/// all-ones vector, each iteration forms y = A x, takes lambda as the signed
/// component of largest magnitude (first maximizer in ascending scan, strict
/// comparison), rescales y by it and continues. No convergence test; exactly
/// config.iterations passes run. Raises numerical_breakdown_error on a zero
/// lambda or a non-finite component.
template <typename F, typename I>
power_method_result power_method(const coo_matrix& m, power_method_config config) {
    if (config.iterations == 0)
        throw std::invalid_argument("power method requires at least one iteration");

    const auto rows = m.row_indices<I>();
    const auto cols = m.col_indices<I>();
    const auto values = m.values<F>();
    const auto n = static_cast<std::size_t>(m.order());

    const auto start = std::chrono::steady_clock::now();
    std::vector<F> x(n, F{1}), y(n);
    F lambda{};
    std::uint64_t q = config.iterations;
    do {
        spmv_sym<F, I>(rows, cols, values, std::span<const F>(x), std::span<F>(y));
        for (const F& component : y)
            if (!std::isfinite(static_cast<double>(component)))
                throw numerical_breakdown_error("non-finite component in power iteration");
        lambda = F{0};
        for (std::size_t k = 0; k < n; ++k)
            if (std::abs(y[k]) > std::abs(lambda))
                lambda = y[k];
        if (lambda == F{0})
            throw numerical_breakdown_error("zero dominant component in power iteration");
        for (std::size_t k = 0; k < n; ++k)
            y[k] /= lambda;
        x = y;
    } while (--q > 0);

    power_method_result result;
    result.lambda = static_cast<double>(lambda);
    result.run_duration = std::chrono::steady_clock::now() - start;
    return result;
}

/// Kernel family running the power method on a dispatched (F, I) pair. The
/// matrix, iteration count and result sink travel through the captured state;
/// `entry`, when given, receives the timestamp taken first thing inside the
/// member (the invocation-overhead probe).
class power_method_kernel {
public:
    power_method_kernel(const coo_matrix& m, power_method_config config, power_method_result& out,
                        std::chrono::steady_clock::time_point* entry = nullptr)
        : m_(m), config_(config), out_(out), entry_(entry) {}

    template <typename F, typename I>
    void operator()() {
        if (entry_)
            *entry_ = std::chrono::steady_clock::now();
        out_ = power_method<F, I>(m_, config_);
    }

private:
    const coo_matrix& m_;
    power_method_config config_;
    power_method_result& out_;
    std::chrono::steady_clock::time_point* entry_;
};

} // namespace forid

#endif // FORID_EIG_HPP
