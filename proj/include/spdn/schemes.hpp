#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spdn/autoencoder.hpp"
#include "spdn/median.hpp"

namespace spdn {

// Two-scale scheme: a sharp small-window MF and a smoother large-window MF,
// merged by one final threshold step.
struct TwoMfConfig {
    WindowSpec w1{3};
    WindowSpec w2{5};
    double thr1_w1 = 0.1;  // Step-1 threshold for the W1 branch
    double thr1_w2 = 0.1;  // Step-1 threshold for the W2 branch
    double thr2 = 0.2;     // Step-2 merge threshold
    int passes = 25;

    void validate() const {
        if (w1.side >= w2.side)
            throw std::invalid_argument("TwoMfConfig: w1 must be smaller than w2");
        if (passes < 1) throw std::invalid_argument("TwoMfConfig: passes >= 1");
    }
};

// Multi-level scheme: a bank of small-window MFs over a threshold ladder,
// fused by an autoencoder, then threshold-merged with the large-window MF.
struct MfsAeConfig {
    WindowSpec w1{3};
    WindowSpec w2{5};
    double thr_min = 0.08;
    double thr_max = 0.15;
    double thr_step = 0.01;
    double thr_w2 = 0.1;
    int passes = 25;
    AeConfig ae{50, 50, WindowSpec{1}, 100, 0.001, 0.4, 0};
    double thr_final = 0.25;

    void validate() const {
        if (w1.side >= w2.side)
            throw std::invalid_argument("MfsAeConfig: w1 must be smaller than w2");
        if (passes < 1) throw std::invalid_argument("MfsAeConfig: passes >= 1");
        if (!(thr_step > 0.0) || thr_max < thr_min)
            throw std::invalid_argument("MfsAeConfig: bad threshold ladder");
        if (ladder().size() < 2)
            throw std::invalid_argument("MfsAeConfig: ladder needs >= 2 thresholds");
        ae.validate();
    }

    // Inclusive ladder built by integer index arithmetic so that decimal
    // steps enumerate exactly (0.08..0.15 step 0.01 -> 8 values).
    std::vector<double> ladder() const {
        const int count =
            static_cast<int>(std::floor((thr_max - thr_min) / thr_step + 1e-9)) + 1;
        std::vector<double> out;
        out.reserve(count);
        for (int i = 0; i < count; ++i) out.push_back(thr_min + i * thr_step);
        return out;
    }
};

inline Image denoise_2mf(const Image& source, const TwoMfConfig& cfg) {
    cfg.validate();
    Image out1 = recursive_median_denoise(source, {cfg.w1, cfg.thr1_w1, cfg.passes});
    Image out2 = recursive_median_denoise(source, {cfg.w2, cfg.thr1_w2, cfg.passes});
    // Where the scales agree keep the sharper W1 pixel, else the
    // island-free W2 pixel.
    return threshold_merge(out1, out2, cfg.thr2);
}

inline Image denoise_mfs_ae(const Image& source, const MfsAeConfig& cfg) {
    cfg.validate();
    std::vector<Image> outs;
    for (double thr : cfg.ladder())
        outs.push_back(recursive_median_denoise(source, {cfg.w1, thr, cfg.passes}));
    Image out_w2 = recursive_median_denoise(source, {cfg.w2, cfg.thr_w2, cfg.passes});
    Image out_ae = ae_fuse(outs, cfg.ae);
    return threshold_merge(out_ae, out_w2, cfg.thr_final);
}

}  // namespace spdn
