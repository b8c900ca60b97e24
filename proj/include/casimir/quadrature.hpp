#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir {

struct QuadratureSettings {
    double rel_tol = 1e-7;
    double abs_tol = 1e-14;
    std::size_t max_subdivisions = 2000;

    /// Throws DomainError on rel_tol <= 0, abs_tol < 0 or max_subdivisions == 0.
    void validate() const;
};

template <typename T>
struct QuadratureResult {
    T value{};
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

namespace detail {

// Gauss-Kronrod 10/21 nodes on [-1, 1] (QUADPACK qk21).
inline constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525627950, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7, 9).
inline constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <typename T>
struct Panel {
    double lo;
    double hi;
    T value;
    double error;
    double absolute; // integral of |f|, for the roundoff floor
};

template <typename T, typename F>
Panel<T> kronrod21(const F& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    const T f_center = f(center);
    T kronrod = f_center * kKronrodWeights[10];
    T gauss{};
    double absolute = kKronrodWeights[10] * magnitude(f_center);

    std::array<T, 10> f_left{};
    std::array<T, 10> f_right{};
    for (std::size_t j = 0; j < 10; ++j) {
        const double dx = half * kKronrodNodes[j];
        f_left[j] = f(center - dx);
        f_right[j] = f(center + dx);
        const T pair = f_left[j] + f_right[j];
        kronrod += kKronrodWeights[j] * pair;
        absolute += kKronrodWeights[j] * (magnitude(f_left[j]) + magnitude(f_right[j]));
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
    }

    // Integral of |f - mean|, QUADPACK's scale for the error estimate.
    const T mean = 0.5 * kronrod;
    double spread = kKronrodWeights[10] * magnitude(f_center - mean);
    for (std::size_t j = 0; j < 10; ++j) {
        spread += kKronrodWeights[j] * (magnitude(f_left[j] - mean) + magnitude(f_right[j] - mean));
    }

    const double scale = std::abs(half);
    const T value = kronrod * half;
    spread *= scale;
    absolute *= scale;
    double error = magnitude((kronrod - gauss) * half);
    if (spread != 0.0 && error != 0.0) {
        error = spread * std::min(1.0, std::pow(200.0 * error / spread, 1.5));
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (absolute > std::numeric_limits<double>::min() / (50.0 * eps)) {
        error = std::max(50.0 * eps * absolute, error);
    }
    return {lo, hi, value, error, absolute};
}

template <typename T>
struct WorstFirst {
    bool operator()(const Panel<T>& a, const Panel<T>& b) const {
        if (a.error != b.error) return a.error < b.error;
        return a.lo > b.lo;
    }
};

} // namespace detail

/// Adaptive Gauss-Kronrod 21-point integration of f over [lo, hi], optionally
/// pre-split at interior breakpoints. The panel with the largest error estimate
/// is bisected until the total error is within max(abs_tol, rel_tol |value|) or
/// max_subdivisions panels exist. Never throws on non-convergence; check the flag.
template <typename F>
auto integrate_finite(const F& f, double lo, double hi, const QuadratureSettings& settings,
                      std::span<const double> breakpoints = {})
    -> QuadratureResult<decltype(f(lo))> {
    using T = decltype(f(lo));
    settings.validate();
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw DomainError("integrate_finite: requires finite lo < hi");
    }

    std::vector<double> edges{lo};
    for (double b : breakpoints) {
        if (b > edges.back() && b < hi) edges.push_back(b);
    }
    edges.push_back(hi);

    std::priority_queue<detail::Panel<T>, std::vector<detail::Panel<T>>, detail::WorstFirst<T>> queue;
    QuadratureResult<T> result;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        queue.push(detail::kronrod21<T>(f, edges[i], edges[i + 1]));
        result.evaluations += 21;
    }

    const auto totals = [&queue] {
        // Sum in position order so the result does not depend on queue layout.
        std::vector<detail::Panel<T>> panels;
        auto copy = queue;
        while (!copy.empty()) {
            panels.push_back(copy.top());
            copy.pop();
        }
        std::sort(panels.begin(), panels.end(),
                  [](const auto& a, const auto& b) { return a.lo < b.lo; });
        T value{};
        double error = 0.0;
        for (const auto& p : panels) {
            value += p.value;
            error += p.error;
        }
        return std::pair{value, error};
    };

    // Running totals drive the loop; the final answer is re-summed in order.
    T value{};
    double error = 0.0;
    {
        auto [v, e] = totals();
        value = v;
        error = e;
    }
    const auto tolerance = [&settings](const T& v) {
        using detail::magnitude;
        return std::max(settings.abs_tol, settings.rel_tol * magnitude(v));
    };

    while (error > tolerance(value) && queue.size() < settings.max_subdivisions) {
        const detail::Panel<T> worst = queue.top();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) break; // cannot split further
        // The worst panel sits at its roundoff floor: bisection cannot help.
        if (worst.error <= 50.0 * std::numeric_limits<double>::epsilon() * worst.absolute) break;
        queue.pop();
        const auto left = detail::kronrod21<T>(f, worst.lo, mid);
        const auto right = detail::kronrod21<T>(f, mid, worst.hi);
        result.evaluations += 42;
        value += (left.value + right.value) - worst.value;
        error += (left.error + right.error) - worst.error;
        queue.push(left);
        queue.push(right);
    }

    auto [v, e] = totals();
    result.value = v;
    result.error_estimate = e;
    result.converged = e <= tolerance(v);
    return result;
}

/// Initial truncation point used by integrate_semi_infinite.
inline double semi_infinite_cutoff(double decay_rate) { return std::max(10.0, 25.0 / decay_rate); }

/// Integral over (0, inf) of a function that decays at least like exp(-decay_rate q).
/// Integrates up to Q = max(10, 25 / decay_rate), split at decades from 1, and bounds
/// the rest by 2 |f(Q)| / decay_rate. While that bound exceeds half the tolerance (an
/// integral that nearly cancels), Q is pushed out in steps of 5 / decay_rate, at most
/// to Q + 75 / decay_rate. The final tail bound is part of the error estimate.
template <typename F>
auto integrate_semi_infinite(const F& f, double decay_rate, const QuadratureSettings& settings)
    -> QuadratureResult<decltype(f(1.0))> {
    using T = decltype(f(1.0));
    if (!(decay_rate > 0.0) || !std::isfinite(decay_rate)) {
        throw DomainError("integrate_semi_infinite: decay rate must be positive");
    }
    double upper = semi_infinite_cutoff(decay_rate);
    const double limit = upper + 75.0 / decay_rate;
    std::vector<double> breakpoints;
    for (double b = 1.0; b < upper; b *= 10.0) breakpoints.push_back(b);

    // Half the budget for the integral, leaving room for the tail bound.
    QuadratureSettings finite = settings;
    finite.rel_tol *= 0.5;
    finite.abs_tol *= 0.5;
    QuadratureResult<T> result = integrate_finite(f, 0.0, upper, finite, breakpoints);

    using detail::magnitude;
    const auto tolerance = [&settings](const T& v) {
        return std::max(settings.abs_tol, settings.rel_tol * magnitude(v));
    };
    double tail = 2.0 * magnitude(f(upper)) / decay_rate;
    result.evaluations += 1;
    while (tail > 0.5 * tolerance(result.value) && upper < limit) {
        const double next = upper + 5.0 / decay_rate;
        QuadratureSettings piece_settings = finite;
        piece_settings.abs_tol = std::max(finite.abs_tol, 0.25 * settings.rel_tol * magnitude(result.value));
        const auto piece = integrate_finite(f, upper, next, piece_settings);
        result.value += piece.value;
        result.error_estimate += piece.error_estimate;
        result.evaluations += piece.evaluations + 1;
        upper = next;
        tail = 2.0 * magnitude(f(upper)) / decay_rate;
    }
    result.error_estimate += tail;
    result.converged = result.error_estimate <= tolerance(result.value);
    return result;
}

} // namespace casimir
