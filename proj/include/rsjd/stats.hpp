#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>

namespace rsjd {

struct McEstimate {
    double value = 0.0;
    double stderror = 0.0;
};

// Sample mean and standard error of the mean, reduced in index order so the
// result does not depend on how paths were distributed over threads.
inline McEstimate summarize(std::span<const double> xs) {
    const std::size_t n = xs.size();
    if (n == 0) throw std::invalid_argument("summarize: empty sample");
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(n);
    if (n == 1) return {mean, 0.0};
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (static_cast<double>(n) * static_cast<double>(n - 1)))};
}

// Self-normalized importance-sampling estimate of the weighted mean
// sum(w*x)/sum(w) with a delta-method standard error. With x constant the
// estimate is exact and the standard error is 0.
inline McEstimate weighted_summarize(std::span<const double> xs, std::span<const double> ws) {
    const std::size_t n = xs.size();
    if (n == 0 || ws.size() != n) throw std::invalid_argument("weighted_summarize: bad sample");
    double sw = 0.0, swx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sw += ws[i];
        swx += ws[i] * xs[i];
    }
    if (sw <= 0.0) throw std::invalid_argument("weighted_summarize: nonpositive weight sum");
    const double m = swx / sw;
    if (n == 1) return {m, 0.0};
    const double wbar = sw / static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = ws[i] * (xs[i] - m) / wbar;
        ss += e * e;
    }
    return {m, std::sqrt(ss / (static_cast<double>(n) * static_cast<double>(n - 1)))};
}

}  // namespace rsjd
