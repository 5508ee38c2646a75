#pragma once

#include <cmath>
#include <numbers>
#include <span>

#include "mdss/core.hpp"

namespace mdss::gridops {

// ---------------------------------------------------------------------------
// Cosine annealing between two endpoints over a fixed number of steps.
// value(0) = start, value(total) = end, monotone in between.
// ---------------------------------------------------------------------------

struct CosineSchedule {
    double start_value = 0.0;
    double end_value = 0.0;
    int total_steps = 1;

    double value(int t) const {
        if (t < 0 || t > total_steps)
            throw std::invalid_argument("CosineSchedule: step out of range");
        const double phase = std::numbers::pi * static_cast<double>(t) / total_steps;
        return end_value + (start_value - end_value) * 0.5 * (1.0 + std::cos(phase));
    }
};

// Empirical quantile, lower-interpolation convention: the value at index
// floor(q * (n - 1)) of the sorted sequence. Deterministic under ties.
inline double quantile(std::span<const double> values, double q) {
    if (values.empty()) throw std::invalid_argument("quantile: empty input");
    if (q < 0.0 || q > 1.0) throw std::invalid_argument("quantile: q outside [0,1]");
    const std::size_t n = values.size();
    const std::size_t k = static_cast<std::size_t>(std::floor(q * static_cast<double>(n - 1)));
    std::vector<double> tmp(values.begin(), values.end());
    std::nth_element(tmp.begin(), tmp.begin() + k, tmp.end());
    return tmp[k];
}

namespace detail {

// Reflect-101 index fold: ... 2 1 | 0 1 2 ... n-1 | n-2 n-3 ...
inline int reflect_index(int i, int n) {
    if (n == 1) return 0;
    while (i < 0 || i >= n) {
        if (i < 0) i = -i;
        if (i >= n) i = 2 * n - 2 - i;
    }
    return i;
}

inline std::vector<double> gaussian_kernel(double sigma) {
    const int radius = static_cast<int>(std::ceil(4.0 * sigma));
    std::vector<double> k(2 * radius + 1);
    double sum = 0.0;
    for (int i = -radius; i <= radius; ++i) {
        const double v = std::exp(-0.5 * (i * i) / (sigma * sigma));
        k[i + radius] = v;
        sum += v;
    }
    for (double& v : k) v /= sum;
    return k;
}

}  // namespace detail

// Separable Gaussian blur, kernel radius ceil(4*sigma), kernel normalized to
// sum 1, reflect padding at the borders.
inline ScoreMap gaussian_blur(const ScoreMap& map, double sigma) {
    if (sigma <= 0.0) throw std::invalid_argument("gaussian_blur: sigma must be positive");
    const std::vector<double> k = detail::gaussian_kernel(sigma);
    const int radius = static_cast<int>(k.size() / 2);

    ScoreMap mid(map.h, map.w);
    for (int y = 0; y < map.h; ++y) {
        for (int x = 0; x < map.w; ++x) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i)
                acc += k[i + radius] * map.at(y, detail::reflect_index(x + i, map.w));
            mid.at(y, x) = acc;
        }
    }
    ScoreMap out(map.h, map.w);
    for (int y = 0; y < map.h; ++y) {
        for (int x = 0; x < map.w; ++x) {
            double acc = 0.0;
            for (int i = -radius; i <= radius; ++i)
                acc += k[i + radius] * mid.at(detail::reflect_index(y + i, map.h), x);
            out.at(y, x) = acc;
        }
    }
    return out;
}

// Bilinear resize, align-corners-false convention. Output extrema are convex
// combinations of input values, hence bounded by the input extrema.
inline ScoreMap bilinear_resize(const ScoreMap& map, int out_h, int out_w) {
    if (out_h <= 0 || out_w <= 0) throw std::invalid_argument("bilinear_resize: bad output size");
    if (out_h == map.h && out_w == map.w) return map;
    ScoreMap out(out_h, out_w);
    const double sy = static_cast<double>(map.h) / out_h;
    const double sx = static_cast<double>(map.w) / out_w;
    for (int y = 0; y < out_h; ++y) {
        double fy = (y + 0.5) * sy - 0.5;
        fy = std::clamp(fy, 0.0, static_cast<double>(map.h - 1));
        const int y0 = static_cast<int>(std::floor(fy));
        const int y1 = std::min(y0 + 1, map.h - 1);
        const double wy = fy - y0;
        for (int x = 0; x < out_w; ++x) {
            double fx = (x + 0.5) * sx - 0.5;
            fx = std::clamp(fx, 0.0, static_cast<double>(map.w - 1));
            const int x0 = static_cast<int>(std::floor(fx));
            const int x1 = std::min(x0 + 1, map.w - 1);
            const double wx = fx - x0;
            out.at(y, x) = (1.0 - wy) * ((1.0 - wx) * map.at(y0, x0) + wx * map.at(y0, x1)) +
                           wy * ((1.0 - wx) * map.at(y1, x0) + wx * map.at(y1, x1));
        }
    }
    return out;
}

// Nearest-neighbor resize with the same align-corners-false source mapping;
// halves round toward the higher index. Never blends values.
template <typename T>
inline Grid2D<T> nearest_resize(const Grid2D<T>& g, int out_h, int out_w) {
    if (out_h <= 0 || out_w <= 0) throw std::invalid_argument("nearest_resize: bad output size");
    Grid2D<T> out(out_h, out_w);
    for (int y = 0; y < out_h; ++y) {
        int sy = static_cast<int>(std::floor((y + 0.5) * static_cast<double>(g.h) / out_h));
        sy = std::clamp(sy, 0, g.h - 1);
        for (int x = 0; x < out_w; ++x) {
            int sx = static_cast<int>(std::floor((x + 0.5) * static_cast<double>(g.w) / out_w));
            sx = std::clamp(sx, 0, g.w - 1);
            out.at(y, x) = g.at(sy, sx);
        }
    }
    return out;
}

// Same source-index rule as nearest_resize, exposed for types that must be
// resized jointly (organized clouds pick xyz and validity from one source
// pixel).
inline int nearest_src_index(int out_i, int in_n, int out_n) {
    int s = static_cast<int>(std::floor((out_i + 0.5) * static_cast<double>(in_n) / out_n));
    return std::clamp(s, 0, in_n - 1);
}

}  // namespace mdss::gridops
