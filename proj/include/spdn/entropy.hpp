#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spdn/image.hpp"

namespace spdn {

enum class ToleranceMode { SigmaRelative, Absolute };

// What to return when no (m+1)-size pattern pair matches: the largest
// finitely observable value -ln(1/U^m), or zero.
enum class UndefinedPolicy { Cap, Zero };

struct EntropySpec {
    WindowSpec window{5};  // map window
    int m = 1;             // embedding dimension
    int tau = 1;           // sampling time (sub-pattern lattice stride)
    double r = 0.2;        // tolerance coefficient
    ToleranceMode r_mode = ToleranceMode::SigmaRelative;
    UndefinedPolicy undefined_policy = UndefinedPolicy::Cap;

    void validate() const {
        if (m < 1) throw std::invalid_argument("EntropySpec: m >= 1");
        if (tau < 1) throw std::invalid_argument("EntropySpec: tau >= 1");
        if (!(r > 0.0)) throw std::invalid_argument("EntropySpec: r > 0");
    }
};

inline double population_stddev(const std::vector<double>& v) {
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean);
    return std::sqrt(var / static_cast<double>(v.size()));
}

namespace detail {

// Ordered distinct pairs of k x k sub-patterns (lattice stride tau) whose
// Chebyshev distance is <= r_abs. Self-matches excluded.
inline long long count_pattern_pairs(const std::vector<double>& patch, int side,
                                     int k, int tau, double r_abs) {
    const int extent = (k - 1) * tau + 1;
    const int span = side - extent + 1;  // top-left positions per axis
    if (span <= 0) return 0;
    const int npat = span * span;
    long long matches = 0;
    for (int i = 0; i < npat; ++i) {
        const int iy = i / span, ix = i % span;
        for (int j = 0; j < npat; ++j) {
            if (j == i) continue;
            const int jy = j / span, jx = j % span;
            bool ok = true;
            for (int a = 0; a < k && ok; ++a)
                for (int b = 0; b < k; ++b) {
                    const double d =
                        patch[(iy + a * tau) * side + (ix + b * tau)] -
                        patch[(jy + a * tau) * side + (jx + b * tau)];
                    if (std::abs(d) > r_abs) { ok = false; break; }
                }
            if (ok) ++matches;
        }
    }
    return matches;
}

inline double sampen2d_abs(const std::vector<double>& patch, int side, int m,
                           int tau, double r_abs, UndefinedPolicy policy) {
    if (static_cast<std::size_t>(side) * side != patch.size())
        throw std::invalid_argument("sampen2d: patch size != side*side");
    if ((m + 1 - 1) * tau + 1 > side)
        throw std::invalid_argument("sampen2d: patch too small for m+1 patterns");
    const long long um = count_pattern_pairs(patch, side, m, tau, r_abs);
    const long long um1 = count_pattern_pairs(patch, side, m + 1, tau, r_abs);
    if (um == 0) return 0.0;
    if (um1 == 0)
        return policy == UndefinedPolicy::Cap
                   ? -std::log(1.0 / static_cast<double>(um))
                   : 0.0;
    return -std::log(static_cast<double>(um1) / static_cast<double>(um));
}

}  // namespace detail

// 2D Sample Entropy of one square patch. With the spec overload the
// tolerance is resolved against the patch itself; entropy_map resolves it
// against the whole image instead.
inline double sampen2d(const std::vector<double>& patch, int side,
                       const EntropySpec& spec) {
    spec.validate();
    const double r_abs = spec.r_mode == ToleranceMode::Absolute
                             ? spec.r
                             : spec.r * population_stddev(patch);
    return detail::sampen2d_abs(patch, side, spec.m, spec.tau, r_abs,
                                spec.undefined_policy);
}

// Per-pixel SampEn over replicate-padded windows, before normalization.
inline std::vector<double> raw_entropy_map(const Image& img, const EntropySpec& spec) {
    spec.validate();
    const double r_abs = spec.r_mode == ToleranceMode::Absolute
                             ? spec.r
                             : spec.r * population_stddev(img.pixels());
    std::vector<double> raw(img.size());
    std::vector<double> patch(static_cast<std::size_t>(spec.window.side) *
                              spec.window.side);
    const int k = spec.window.side / 2;
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            std::size_t p = 0;
            for (int dy = -k; dy <= k; ++dy)
                for (int dx = -k; dx <= k; ++dx)
                    patch[p++] = img.at_clamped(x + dx, y + dy);
            raw[static_cast<std::size_t>(y) * img.width() + x] = detail::sampen2d_abs(
                patch, spec.window.side, spec.m, spec.tau, r_abs, spec.undefined_policy);
        }
    }
    return raw;
}

// Same-size map, min-max normalized to [0,1]. A constant raw map collapses
// to all-zero.
inline Image entropy_map(const Image& img, const EntropySpec& spec) {
    std::vector<double> raw = raw_entropy_map(img, spec);
    double lo = raw[0], hi = raw[0];
    for (double v : raw) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (hi > lo)
        for (double& v : raw) v = (v - lo) / (hi - lo);
    else
        for (double& v : raw) v = 0.0;
    return Image(img.width(), img.height(), std::move(raw));
}

// Grayscale dilation: max over the replicate-padded kernel neighborhood.
inline Image dilate(const Image& map, int kernel_side, int iterations = 1) {
    if (kernel_side < 1 || kernel_side % 2 == 0)
        throw std::invalid_argument("dilate: kernel side must be odd and >= 1");
    if (iterations < 1) throw std::invalid_argument("dilate: iterations >= 1");
    Image cur = map;
    const int k = kernel_side / 2;
    for (int it = 0; it < iterations; ++it) {
        Image next(cur.width(), cur.height());
        for (int y = 0; y < cur.height(); ++y)
            for (int x = 0; x < cur.width(); ++x) {
                double m = cur.at(x, y);
                for (int dy = -k; dy <= k; ++dy)
                    for (int dx = -k; dx <= k; ++dx)
                        m = std::max(m, cur.at_clamped(x + dx, y + dy));
                next.at(x, y) = m;
            }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace spdn
