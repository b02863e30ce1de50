#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "spdn/image.hpp"

namespace spdn {

enum class NoiseModel { Interval, Fixed };

// Salt-and-pepper noise: `level` percent of pixels corrupted, split evenly
// between salt and pepper. Interval model draws salt from [0.9,1] and
// pepper from [0,0.1]; fixed model uses exactly 1 and 0.
struct NoiseSpec {
    NoiseModel model = NoiseModel::Interval;
    double level = 0.0;  // percent in [0,100]
    std::uint64_t seed = 0;

    void validate() const {
        if (!(level >= 0.0 && level <= 100.0))
            throw std::invalid_argument("NoiseSpec: level must be in [0,100]");
    }
};

// Exact corruption count for a given level (round half up).
inline std::size_t corrupted_count(double level_percent, std::size_t n) {
    return static_cast<std::size_t>(
        std::floor(level_percent / 100.0 * static_cast<double>(n) + 0.5));
}

inline Image inject_sp_noise(const Image& img, const NoiseSpec& spec) {
    spec.validate();
    const std::size_t n = img.size();
    const std::size_t nc = corrupted_count(spec.level, n);
    Image out = img;
    if (nc == 0) return out;

    std::mt19937_64 rng(spec.seed);

    // Partial Fisher-Yates: the first nc entries are a uniform sample
    // without replacement.
    std::vector<std::uint32_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < nc; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(perm[i], perm[pick(rng)]);
    }

    const std::size_t n_salt = (nc + 1) / 2;  // odd count: extra pixel is salt
    std::uniform_real_distribution<double> salt_band(0.9, 1.0);
    std::uniform_real_distribution<double> pepper_band(0.0, 0.1);
    for (std::size_t i = 0; i < nc; ++i) {
        double& px = out.pixels()[perm[i]];
        const double orig = px;
        const bool salt = i < n_salt;
        if (spec.model == NoiseModel::Fixed) {
            double v = salt ? 1.0 : 0.0;
            // Guarantee a visible change even when the clean pixel already
            // sits at the chosen extreme.
            px = (v == orig) ? 1.0 - v : v;
        } else {
            double v;
            do {
                v = salt ? salt_band(rng) : pepper_band(rng);
            } while (v == orig);
            px = v;
        }
    }
    return out;
}

// Percent of pixels that differ between the two images.
inline double measure_noise_level(const Image& clean, const Image& noisy) {
    if (!clean.same_dims(noisy))
        throw std::invalid_argument("measure_noise_level: dimension mismatch");
    std::size_t diff = 0;
    for (std::size_t i = 0; i < clean.size(); ++i)
        if (clean.pixels()[i] != noisy.pixels()[i]) ++diff;
    return 100.0 * static_cast<double>(diff) / static_cast<double>(clean.size());
}

}  // namespace spdn
