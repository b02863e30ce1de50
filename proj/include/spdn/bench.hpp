#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spdn/median.hpp"
#include "spdn/noise.hpp"
#include "spdn/schemes.hpp"
#include "spdn/ssim.hpp"
#include "spdn/synthetic.hpp"

namespace spdn::bench {

// Reference parameter sets used throughout the result tables.

inline RecursionConfig mf_config(int side, double threshold, int passes) {
    return {WindowSpec{side}, threshold, passes};
}

// Single-filter comparison settings: 5x5 window, threshold 0.2.
inline RecursionConfig comparison_mf_config(double threshold = 0.2, int passes = 1) {
    return {WindowSpec{5}, threshold, passes};
}

inline AeConfig comparison_ae_config(std::uint64_t seed) {
    return {50, 50, WindowSpec{5}, 20, 0.001, 0.5, seed};
}

inline TwoMfConfig two_mf_config() {
    return {WindowSpec{3}, WindowSpec{5}, 0.1, 0.1, 0.2, 25};
}

inline MfsAeConfig mfs_ae_config(std::uint64_t seed) {
    MfsAeConfig cfg;
    cfg.w1 = WindowSpec{3};
    cfg.w2 = WindowSpec{5};
    cfg.thr_min = 0.08;
    cfg.thr_max = 0.15;
    cfg.thr_step = 0.01;
    cfg.thr_w2 = 0.1;
    cfg.passes = 25;
    cfg.ae = {50, 50, WindowSpec{1}, 100, 0.001, 0.4, seed};
    cfg.thr_final = 0.25;
    return cfg;
}

struct Stats {
    std::vector<double> values;

    void add(double v) { values.push_back(v); }
    std::size_t count() const { return values.size(); }
    double mean() const {
        double s = 0;
        for (double v : values) s += v;
        return s / static_cast<double>(values.size());
    }
    double stddev() const {
        if (values.size() < 2) return 0.0;
        const double m = mean();
        double s = 0;
        for (double v : values) s += (v - m) * (v - m);
        return std::sqrt(s / static_cast<double>(values.size() - 1));
    }
};

struct SchemeScore {
    Stats ssim_img;
    Stats ssim_map;
    Stats ssim_map_dilated;
};

using SuiteResult = std::map<std::string, SchemeScore>;

// Runs the table-4 / fig-12 scheme set on one clean image at 61% noise.
// `schemes` selects which columns to produce; maps are computed only when
// `with_maps` (they dominate runtime for large images).
inline SuiteResult scheme_suite(const Image& clean, NoiseModel model,
                                const std::vector<std::string>& schemes,
                                int seeds, bool with_maps,
                                double level = 61.0) {
    const EntropySpec espec;
    const SsimSpec sspec;
    SuiteResult out;
    Image clean_map, clean_map_dil;
    if (with_maps) {
        clean_map = entropy_map(clean, espec);
        clean_map_dil = dilate(clean_map, 5, 1);
    }
    for (int seed = 0; seed < seeds; ++seed) {
        const Image noisy =
            inject_sp_noise(clean, {model, level, static_cast<std::uint64_t>(seed)});
        for (const std::string& name : schemes) {
            Image restored;
            if (name == "mf3x3")
                restored = recursive_median_denoise(noisy, mf_config(3, 0.1, 25));
            else if (name == "mf5x5")
                restored = recursive_median_denoise(noisy, mf_config(5, 0.1, 25));
            else if (name == "2mf")
                restored = denoise_2mf(noisy, two_mf_config());
            else if (name == "mfs_ae")
                restored = denoise_mfs_ae(
                    noisy, mfs_ae_config(static_cast<std::uint64_t>(seed)));
            else
                throw std::invalid_argument("scheme_suite: unknown scheme " + name);
            SchemeScore& sc = out[name];
            sc.ssim_img.add(ssim_global(clean, restored, sspec));
            if (with_maps) {
                Image rm = entropy_map(restored, espec);
                sc.ssim_map.add(ssim_global(clean_map, rm, sspec));
                sc.ssim_map_dilated.add(
                    ssim_global(clean_map_dil, dilate(rm, 5, 1), sspec));
            }
        }
    }
    return out;
}

struct CurveRow {
    std::string scheme;  // "mf" or "ae"
    double mu_sp = 0;
    int seed = 0;
    int passes = 1;
    double threshold = 0;
    double ssim_img = 0;
    double ssim_map = 0;
    double ssim_map_dilated = 0;
};

// Noise-level / threshold / pass-count sweeps on a low-resolution image.
// `with_ae` adds the autoencoder rows (slow).
inline std::vector<CurveRow> curves_suite(const Image& clean, int seeds,
                                          bool with_ae) {
    const EntropySpec espec;
    const SsimSpec sspec;
    const Image clean_map = entropy_map(clean, espec);
    const Image clean_map_dil = dilate(clean_map, 5, 1);
    std::vector<CurveRow> rows;

    auto eval = [&](const std::string& scheme, const Image& noisy, double mu,
                    int seed, int passes, double thr) {
        RecursionConfig rc{WindowSpec{5}, thr, passes};
        Image restored;
        if (scheme == "mf") {
            restored = recursive_median_denoise(noisy, rc);
        } else {
            AeConfig ae = comparison_ae_config(static_cast<std::uint64_t>(seed));
            restored = recursive_threshold_denoise(
                noisy, [&ae](const Image& im) { return ae_denoise_image(im, ae); }, rc);
        }
        CurveRow row{scheme, mu, seed, passes, thr, 0, 0, 0};
        row.ssim_img = ssim_global(clean, restored, sspec);
        Image rm = entropy_map(restored, espec);
        row.ssim_map = ssim_global(clean_map, rm, sspec);
        row.ssim_map_dilated = ssim_global(clean_map_dil, dilate(rm, 5, 1), sspec);
        rows.push_back(row);
    };

    std::vector<std::string> schemes{"mf"};
    if (with_ae) schemes.push_back("ae");

    for (int seed = 0; seed < seeds; ++seed) {
        // SSIM vs noise level, with/without threshold, pass counts 1/2/6
        for (int mu = 5; mu <= 70; mu += 5) {
            const Image noisy = inject_sp_noise(
                clean, {NoiseModel::Interval, static_cast<double>(mu),
                        static_cast<std::uint64_t>(seed)});
            for (const auto& s : schemes)
                for (int passes : {1, 2, 6})
                    for (double thr : {0.0, 0.2}) eval(s, noisy, mu, seed, passes, thr);
        }
        // SSIM vs threshold at 23.3% noise
        {
            const Image noisy = inject_sp_noise(
                clean, {NoiseModel::Interval, 23.3, static_cast<std::uint64_t>(seed)});
            for (const auto& s : schemes)
                for (int t = 0; t <= 10; ++t)
                    eval(s, noisy, 23.3, seed, 1, 0.05 * t);
        }
        // SSIM vs pass count at 66.6% noise
        {
            const Image noisy = inject_sp_noise(
                clean, {NoiseModel::Interval, 66.6, static_cast<std::uint64_t>(seed)});
            for (const auto& s : schemes)
                for (int passes = 1; passes <= 16; ++passes)
                    eval(s, noisy, 66.6, seed, passes, 0.2);
        }
    }
    return rows;
}

}  // namespace spdn::bench
