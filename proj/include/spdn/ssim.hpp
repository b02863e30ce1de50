#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spdn/entropy.hpp"
#include "spdn/image.hpp"

namespace spdn {

// Local-statistics SSIM. Intensities in [0,1] are scaled by intensity_scale
// so the conventional 8-bit stability constants apply unchanged.
struct SsimSpec {
    WindowSpec window{7};
    double c1 = 0.01 * 255.0 * 0.01 * 255.0;  // (0.01*255)^2
    double c2 = 0.03 * 255.0 * 0.03 * 255.0;  // (0.03*255)^2
    double intensity_scale = 255.0;
};

// SSIM of two equal-length windows, population (1/N) moments.
inline double ssim_local(const std::vector<double>& win_x,
                         const std::vector<double>& win_y, const SsimSpec& spec) {
    if (win_x.size() != win_y.size() || win_x.empty())
        throw std::invalid_argument("ssim_local: window length mismatch");
    const double n = static_cast<double>(win_x.size());
    const double s = spec.intensity_scale;
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < win_x.size(); ++i) {
        const double a = win_x[i] * s, b = win_y[i] * s;
        sx += a;
        sy += b;
        sxx += a * a;
        syy += b * b;
        sxy += a * b;
    }
    const double mx = sx / n, my = sy / n;
    const double vx = sxx / n - mx * mx;
    const double vy = syy / n - my * my;
    const double cxy = sxy / n - mx * my;
    return ((2.0 * mx * my + spec.c1) * (2.0 * cxy + spec.c2)) /
           ((mx * mx + my * my + spec.c1) * (vx + vy + spec.c2));
}

// Mean of ssim_local over one replicate-padded window per pixel.
inline double ssim_global(const Image& x, const Image& y, const SsimSpec& spec = {}) {
    if (!x.same_dims(y))
        throw std::invalid_argument("ssim_global: dimension mismatch");
    const int k = spec.window.side / 2;
    const double n = static_cast<double>(spec.window.side) * spec.window.side;
    const double s = spec.intensity_scale;
    double total = 0.0, comp = 0.0;  // Kahan accumulation
    for (int cy = 0; cy < x.height(); ++cy) {
        for (int cx = 0; cx < x.width(); ++cx) {
            double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
            for (int dy = -k; dy <= k; ++dy)
                for (int dx = -k; dx <= k; ++dx) {
                    const double a = x.at_clamped(cx + dx, cy + dy) * s;
                    const double b = y.at_clamped(cx + dx, cy + dy) * s;
                    sx += a;
                    sy += b;
                    sxx += a * a;
                    syy += b * b;
                    sxy += a * b;
                }
            const double mx = sx / n, my = sy / n;
            const double vx = sxx / n - mx * mx;
            const double vy = syy / n - my * my;
            const double cxy = sxy / n - mx * my;
            const double local = ((2.0 * mx * my + spec.c1) * (2.0 * cxy + spec.c2)) /
                                 ((mx * mx + my * my + spec.c1) *
                                  (vx + vy + spec.c2));
            const double t = local - comp;
            const double sum = total + t;
            comp = (sum - total) - t;
            total = sum;
        }
    }
    return total / static_cast<double>(x.size());
}

// SSIM between the entropy maps of the two images; `dilated` applies a
// 5x5 single-iteration grayscale dilation to both maps first.
inline double ssim_map_metric(const Image& clean, const Image& restored,
                              const EntropySpec& espec, const SsimSpec& sspec,
                              bool dilated = false) {
    if (!clean.same_dims(restored))
        throw std::invalid_argument("ssim_map_metric: dimension mismatch");
    Image ma = entropy_map(clean, espec);
    Image mb = entropy_map(restored, espec);
    if (dilated) {
        ma = dilate(ma, 5, 1);
        mb = dilate(mb, 5, 1);
    }
    return ssim_global(ma, mb, sspec);
}

// Relative difference in percent: 100*|s1-s2| / ((s1+s2)/2).
inline double delta_ssim(double s1, double s2) {
    const double mean = 0.5 * (s1 + s2);
    if (mean == 0.0) throw std::invalid_argument("delta_ssim: zero mean");
    return 100.0 * std::abs(s1 - s2) / mean;
}

struct SsimReport {
    double ssim_img = 0.0;
    double ssim_map_standard = 0.0;
    double ssim_map_dilated = 0.0;
    double delta_pct = 0.0;  // between ssim_img and ssim_map_standard
};

inline SsimReport full_ssim_report(const Image& clean, const Image& restored,
                                   const EntropySpec& espec = {},
                                   const SsimSpec& sspec = {}) {
    SsimReport rep;
    rep.ssim_img = ssim_global(clean, restored, sspec);
    Image ma = entropy_map(clean, espec);
    Image mb = entropy_map(restored, espec);
    rep.ssim_map_standard = ssim_global(ma, mb, sspec);
    rep.ssim_map_dilated = ssim_global(dilate(ma, 5, 1), dilate(mb, 5, 1), sspec);
    rep.delta_pct = delta_ssim(rep.ssim_img, rep.ssim_map_standard);
    return rep;
}

}  // namespace spdn
