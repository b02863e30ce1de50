#pragma once

#include <cmath>

#include "spdn/image.hpp"

namespace spdn {

// Bundled 100x150 low-resolution test scene: a smooth vignette background
// with a darker circular-arc region ("cap edge") cutting across the lower
// part of the frame. Deterministic, no file dependency.
inline Image make_cap_edge_image(int width = 150, int height = 100) {
    Image img(width, height);
    const double cx = width / 2.0, cy = height * 0.55;
    const double ax = width * 0.53, ay = height * 0.6;
    const double arc_cx = width / 2.0, arc_cy = height * 1.2, arc_r = width / 2.0;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double gx = (x - cx) / ax, gy = (y - cy) / ay;
            double v = 0.45 + 0.25 * std::exp(-(gx * gx + gy * gy));
            const double dx = x - arc_cx, dy = y - arc_cy;
            if (dx * dx + dy * dy < arc_r * arc_r) v = v * 0.45 + 0.08;
            img.at(x, y) = std::clamp(v, 0.0, 1.0);
        }
    }
    return img;
}

// Textured variant of the same scene: a fine quasi-periodic weave riding on
// the vignette, standing in for photographic micro-texture. A plain median
// filter wipes the weave out, so the thresholded variants have something to
// preserve; the smooth scene above keeps its role for stabilization and
// island checks where texture-driven oscillation would get in the way.
inline Image make_textured_scene(int width = 150, int height = 100,
                                 double amplitude = 0.04) {
    Image img = make_cap_edge_image(width, height);
    constexpr double tau = 6.283185307179586;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double tex =
                amplitude *
                std::sin(tau * x / 3.7 + 1.3 * std::sin(tau * y / 11.0)) *
                std::sin(tau * y / 4.3 + 0.9 * std::sin(tau * x / 13.0));
            img.at(x, y) = std::clamp(img.at(x, y) + tex, 0.0, 1.0);
        }
    }
    return img;
}

}  // namespace spdn
