#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "spdn/image.hpp"

namespace spdn {

// One recursive-thresholding loop: `passes` total filter applications
// ("k recursions" in the usual parlance = k+1 passes).
struct RecursionConfig {
    WindowSpec window{3};
    double threshold = 0.0;  // in [0,1]
    int passes = 1;

    void validate() const {
        if (passes < 1) throw std::invalid_argument("RecursionConfig: passes >= 1");
        if (!(threshold >= 0.0 && threshold <= 1.0))
            throw std::invalid_argument("RecursionConfig: threshold in [0,1]");
    }
};

// Rank-(n-1)/2 order statistic of an odd-length list.
inline double median_of_window(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median_of_window: empty input");
    const std::size_t mid = (values.size() - 1) / 2;
    std::nth_element(values.begin(), values.begin() + mid, values.end());
    return values[mid];
}

inline Image median_filter_pass(const Image& img, const WindowSpec& window) {
    Image out(img.width(), img.height());
    std::vector<double> buf;
    const int k = window.side / 2;
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            buf.clear();
            for (int dy = -k; dy <= k; ++dy)
                for (int dx = -k; dx <= k; ++dx)
                    buf.push_back(img.at_clamped(x + dx, y + dy));
            const std::size_t mid = (buf.size() - 1) / 2;
            std::nth_element(buf.begin(), buf.begin() + mid, buf.end());
            out.at(x, y) = buf[mid];
        }
    }
    return out;
}

// Per-pixel selection: keep the source pixel where the filter barely moved
// it (|A-B| <= threshold), otherwise accept the filtered value.
inline Image threshold_merge(const Image& source, const Image& filtered,
                             double threshold) {
    if (!source.same_dims(filtered))
        throw std::invalid_argument("threshold_merge: dimension mismatch");
    Image out = filtered;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double a = source.pixels()[i];
        const double b = filtered.pixels()[i];
        out.pixels()[i] = (std::abs(a - b) <= threshold) ? a : b;
    }
    return out;
}

using DenoiseFilter = std::function<Image(const Image&)>;

// The thresholded feedback loop: each pass filters the current iterate,
// then compares against the ORIGINAL source (never the previous iterate).
inline Image recursive_threshold_denoise(const Image& source,
                                         const DenoiseFilter& dnf,
                                         const RecursionConfig& cfg) {
    cfg.validate();
    Image current = source;
    for (int p = 0; p < cfg.passes; ++p) {
        Image filtered = dnf(current);
        current = threshold_merge(source, filtered, cfg.threshold);
    }
    return current;
}

// Convenience: recursive thresholded median filtering.
inline Image recursive_median_denoise(const Image& source, const RecursionConfig& cfg) {
    return recursive_threshold_denoise(
        source, [&cfg](const Image& im) { return median_filter_pass(im, cfg.window); },
        cfg);
}

}  // namespace spdn
