#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "spdn/image.hpp"

namespace spdn {

// Block-wise three-layer autoencoder. `window` controls the training-shift
// extent: an (m x m) window yields m^2 shifted copies of each block.
struct AeConfig {
    int block_h = 50;
    int block_w = 50;
    WindowSpec window{5};
    int epochs = 20;
    double learning_rate = 0.001;
    double compression_ratio = 0.5;  // hidden = round(ratio * input), in (0,1]
    std::uint64_t seed = 0;

    void validate() const {
        if (block_h < 1 || block_w < 1)
            throw std::invalid_argument("AeConfig: block dims must be >= 1");
        if (epochs < 1) throw std::invalid_argument("AeConfig: epochs >= 1");
        if (!(learning_rate > 0.0))
            throw std::invalid_argument("AeConfig: learning_rate > 0");
        if (!(compression_ratio > 0.0 && compression_ratio <= 1.0))
            throw std::invalid_argument("AeConfig: compression_ratio in (0,1]");
    }

    int hidden_size(int input_size) const {
        return std::max(1, static_cast<int>(std::lround(compression_ratio * input_size)));
    }
};

// Encoder/decoder weights with logistic sigmoid on hidden and output layers.
struct AeNetwork {
    Eigen::MatrixXd w1;  // hidden x input
    Eigen::MatrixXd w2;  // input x hidden
    Eigen::VectorXd b1;
    Eigen::VectorXd b2;

    int input_size() const { return static_cast<int>(w1.cols()); }
    int hidden_size() const { return static_cast<int>(w1.rows()); }
};

inline Eigen::ArrayXXd sigmoid(const Eigen::ArrayXXd& z) {
    return 1.0 / (1.0 + (-z).exp());
}

namespace detail {

// splitmix64; derives per-block RNG streams from (seed, block index).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace detail

inline AeNetwork init_ae_network(int input_size, int hidden_size, std::uint64_t seed) {
    AeNetwork net;
    net.w1.resize(hidden_size, input_size);
    net.w2.resize(input_size, hidden_size);
    net.b1 = Eigen::VectorXd::Zero(hidden_size);
    net.b2 = Eigen::VectorXd::Zero(input_size);
    std::mt19937_64 rng(seed);
    const double s = std::sqrt(6.0 / (input_size + hidden_size));
    std::uniform_real_distribution<double> u(-s, s);
    for (Eigen::Index i = 0; i < net.w1.size(); ++i) net.w1.data()[i] = u(rng);
    for (Eigen::Index i = 0; i < net.w2.size(); ++i) net.w2.data()[i] = u(rng);
    return net;
}

// All contents of the block shifted by every (dx,dy) in [-k,k]^2,
// k = (side-1)/2; out-of-image reads are clamped to the edge. Patterns are
// flattened row-major, one per column. The zero shift sits at the middle
// column, index (m^2-1)/2.
inline Eigen::MatrixXd build_shift_training_set(const Image& img, const Block& blk,
                                                const WindowSpec& window) {
    const int k = window.side / 2;
    const int m = window.side;
    const int dim = blk.w * blk.h;
    Eigen::MatrixXd out(dim, m * m);
    int col = 0;
    for (int dy = -k; dy <= k; ++dy) {
        for (int dx = -k; dx <= k; ++dx) {
            int row = 0;
            for (int y = 0; y < blk.h; ++y)
                for (int x = 0; x < blk.w; ++x)
                    out(row++, col) = img.at_clamped(blk.x + x + dx, blk.y + y + dy);
            ++col;
        }
    }
    return out;
}

// Sum-of-squares reconstruction loss over all patterns (columns of x).
inline double ae_loss(const AeNetwork& net, const Eigen::MatrixXd& x) {
    Eigen::MatrixXd h = sigmoid(((net.w1 * x).colwise() + net.b1).array());
    Eigen::MatrixXd y = sigmoid(((net.w2 * h).colwise() + net.b2).array());
    return 0.5 * (y - x).squaredNorm();
}

// One full-batch gradient step at the given rate; returns the loss
// evaluated before the step.
inline double ae_train_epoch(AeNetwork& net, const Eigen::MatrixXd& x, double lr) {
    Eigen::MatrixXd h = sigmoid(((net.w1 * x).colwise() + net.b1).array());
    Eigen::MatrixXd y = sigmoid(((net.w2 * h).colwise() + net.b2).array());
    Eigen::MatrixXd e = y - x;
    const double loss = 0.5 * e.squaredNorm();
    Eigen::MatrixXd g2 = e.array() * y.array() * (1.0 - y.array());
    Eigen::MatrixXd gh =
        (net.w2.transpose() * g2).array() * h.array() * (1.0 - h.array());
    net.w2.noalias() -= lr * (g2 * h.transpose());
    net.b2.noalias() -= lr * g2.rowwise().sum();
    net.w1.noalias() -= lr * (gh * x.transpose());
    net.b1.noalias() -= lr * gh.rowwise().sum();
    return loss;
}

// Trains a freshly initialized network for cfg.epochs sweeps. The optional
// trace receives the loss after each epoch's update (epochs+1 entries, the
// first being the pre-training loss).
inline AeNetwork train_ae(const Eigen::MatrixXd& patterns, const AeConfig& cfg,
                          std::uint64_t seed, std::vector<double>* loss_trace = nullptr) {
    cfg.validate();
    if (patterns.cols() == 0)
        throw std::invalid_argument("train_ae: empty pattern set");
    const int dim = static_cast<int>(patterns.rows());
    AeNetwork net = init_ae_network(dim, cfg.hidden_size(dim), seed);
    if (loss_trace) loss_trace->push_back(ae_loss(net, patterns));
    for (int e = 0; e < cfg.epochs; ++e) {
        ae_train_epoch(net, patterns, cfg.learning_rate);
        if (loss_trace) loss_trace->push_back(ae_loss(net, patterns));
    }
    return net;
}

inline Eigen::VectorXd ae_reconstruct(const AeNetwork& net, const Eigen::VectorXd& x) {
    if (x.size() != net.input_size())
        throw std::invalid_argument("ae_reconstruct: pattern length mismatch");
    Eigen::VectorXd h = sigmoid((net.w1 * x + net.b1).array());
    return sigmoid((net.w2 * h + net.b2).array());
}

// Block-wise denoising: each block gets a fresh network (seed derived from
// cfg.seed and the block index), trained on its shifted copies, and is
// replaced by the reconstruction of its unshifted content.
inline Image ae_denoise_image(const Image& img, const AeConfig& cfg) {
    cfg.validate();
    const BlockGrid grid = partition_blocks(img, cfg.block_h, cfg.block_w);
    Image out(img.width(), img.height());
    for (std::size_t bi = 0; bi < grid.blocks.size(); ++bi) {
        const Block& blk = grid.blocks[bi];
        Eigen::MatrixXd x = build_shift_training_set(img, blk, cfg.window);
        AeNetwork net = train_ae(x, cfg, detail::mix_seed(cfg.seed, bi));
        const int center = (cfg.window.side * cfg.window.side - 1) / 2;
        Eigen::VectorXd y = ae_reconstruct(net, x.col(center));
        int row = 0;
        for (int yy = 0; yy < blk.h; ++yy)
            for (int xx = 0; xx < blk.w; ++xx)
                out.at(blk.x + xx, blk.y + yy) = y(row++);
    }
    return out;
}

// Fusion mode: for every block position, train one fresh network on the n
// corresponding block-variants (times the shift set when window > 1x1) and
// emit the element-wise mean of the n unshifted reconstructions.
inline Image ae_fuse(const std::vector<Image>& variants, const AeConfig& cfg) {
    cfg.validate();
    if (variants.size() < 2)
        throw std::invalid_argument("ae_fuse: need at least 2 variants");
    for (const Image& v : variants)
        if (!v.same_dims(variants.front()))
            throw std::invalid_argument("ae_fuse: variant dimension mismatch");

    const int n = static_cast<int>(variants.size());
    const int m2 = cfg.window.side * cfg.window.side;
    const BlockGrid grid = partition_blocks(variants.front(), cfg.block_h, cfg.block_w);
    Image out(variants.front().width(), variants.front().height());
    for (std::size_t bi = 0; bi < grid.blocks.size(); ++bi) {
        const Block& blk = grid.blocks[bi];
        const int dim = blk.w * blk.h;
        Eigen::MatrixXd x(dim, static_cast<Eigen::Index>(n) * m2);
        for (int v = 0; v < n; ++v)
            x.middleCols(static_cast<Eigen::Index>(v) * m2, m2) =
                build_shift_training_set(variants[v], blk, cfg.window);
        AeNetwork net = train_ae(x, cfg, detail::mix_seed(cfg.seed, bi));
        const int center = (m2 - 1) / 2;
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(dim);
        for (int v = 0; v < n; ++v)
            acc += ae_reconstruct(net, x.col(static_cast<Eigen::Index>(v) * m2 + center));
        acc /= n;
        int row = 0;
        for (int yy = 0; yy < blk.h; ++yy)
            for (int xx = 0; xx < blk.w; ++xx)
                out.at(blk.x + xx, blk.y + yy) = acc(row++);
    }
    return out;
}

}  // namespace spdn
