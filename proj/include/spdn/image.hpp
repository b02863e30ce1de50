#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace spdn {

// Grayscale image with intensities in [0,1], row-major.
class Image {
public:
    Image() = default;
    Image(int width, int height, double fill = 0.0)
        : width_(width), height_(height),
          pixels_(static_cast<std::size_t>(check_dims(width, height)), fill) {}
    Image(int width, int height, std::vector<double> pixels)
        : width_(width), height_(height), pixels_(std::move(pixels)) {
        if (pixels_.size() != static_cast<std::size_t>(check_dims(width, height)))
            throw std::invalid_argument("Image: pixel count != width*height");
        for (double v : pixels_)
            if (!(v >= 0.0 && v <= 1.0))
                throw std::invalid_argument("Image: intensity outside [0,1]");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return pixels_.size(); }

    double at(int x, int y) const { return pixels_[idx(x, y)]; }
    double& at(int x, int y) { return pixels_[idx(x, y)]; }

    // Replicate (clamp-to-edge) access for any coordinate.
    double at_clamped(int x, int y) const {
        x = std::clamp(x, 0, width_ - 1);
        y = std::clamp(y, 0, height_ - 1);
        return pixels_[idx(x, y)];
    }

    const std::vector<double>& pixels() const { return pixels_; }
    std::vector<double>& pixels() { return pixels_; }

    bool same_dims(const Image& o) const {
        return width_ == o.width_ && height_ == o.height_;
    }

private:
    static long long check_dims(int w, int h) {
        if (w < 1 || h < 1) throw std::invalid_argument("Image: dims must be >= 1");
        return static_cast<long long>(w) * h;
    }
    std::size_t idx(int x, int y) const {
        return static_cast<std::size_t>(y) * width_ + x;
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<double> pixels_;
};

// Square sliding window, odd side. Border handling is always replicate.
struct WindowSpec {
    int side = 3;

    explicit WindowSpec(int s = 3) : side(s) {
        if (s < 1 || s % 2 == 0)
            throw std::invalid_argument("WindowSpec: side must be odd and >= 1");
    }
};

// Collects the side*side intensities around (x,y), clamping at borders.
inline std::vector<double> window_at(const Image& img, int x, int y,
                                     const WindowSpec& spec) {
    const int k = spec.side / 2;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(spec.side) * spec.side);
    for (int dy = -k; dy <= k; ++dy)
        for (int dx = -k; dx <= k; ++dx)
            out.push_back(img.at_clamped(x + dx, y + dy));
    return out;
}

struct Block {
    int x = 0, y = 0;  // top-left
    int w = 0, h = 0;  // actual extent (edge blocks may be smaller)
};

// Non-overlapping tiling; interior blocks are block_h x block_w, edge
// blocks truncated to the image boundary.
struct BlockGrid {
    int block_h = 0, block_w = 0;
    std::vector<Block> blocks;
};

inline BlockGrid partition_blocks(const Image& img, int block_h, int block_w) {
    if (block_h < 1 || block_w < 1)
        throw std::invalid_argument("partition_blocks: block dims must be >= 1");
    BlockGrid grid;
    grid.block_h = block_h;
    grid.block_w = block_w;
    for (int y = 0; y < img.height(); y += block_h)
        for (int x = 0; x < img.width(); x += block_w)
            grid.blocks.push_back({x, y,
                                   std::min(block_w, img.width() - x),
                                   std::min(block_h, img.height() - y)});
    return grid;
}

}  // namespace spdn
