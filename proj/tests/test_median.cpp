#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "spdn/median.hpp"
#include "spdn/noise.hpp"

using namespace spdn;

namespace {

Image random_image(int w, int h, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Image img(w, h);
    for (auto& p : img.pixels()) p = u(rng);
    return img;
}

// Independent oracle: full sort, middle element.
double median_oracle(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[(v.size() - 1) / 2];
}

Image median_filter_oracle(const Image& img, int side) {
    Image out(img.width(), img.height());
    const int k = side / 2;
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x) {
            std::vector<double> win;
            for (int dy = -k; dy <= k; ++dy)
                for (int dx = -k; dx <= k; ++dx)
                    win.push_back(img.at_clamped(x + dx, y + dy));
            out.at(x, y) = median_oracle(win);
        }
    return out;
}

}  // namespace

TEST_CASE("median_of_window basics") {
    CHECK(median_of_window(std::vector<double>(9, 0.3)) == 0.3);
    CHECK(median_of_window({0.1, 0.9, 0.5, 0.3, 0.7, 0.2, 0.8, 0.4, 0.6}) == 0.5);
    // five 1.0 and four 0.4: rank 4 (0-based) of the sorted list is 1.0
    CHECK(median_of_window({1, 1, 0.4, 1, 0.4, 1, 0.4, 1, 0.4}) == 1.0);
    CHECK_THROWS_AS(median_of_window({}), std::invalid_argument);
}

TEST_CASE("median filter removes a lone impulse") {
    Image img(7, 7, 0.5);
    img.at(3, 3) = 1.0;
    Image out = median_filter_pass(img, WindowSpec{3});
    CHECK(out.at(3, 3) == 0.5);
    Image constant(6, 6, 0.42);
    Image cout_ = median_filter_pass(constant, WindowSpec{3});
    CHECK(cout_.pixels() == constant.pixels());
}

TEST_CASE("median filter matches brute-force oracle on all <=16x16 fixtures") {
    for (int dim : {1, 2, 3, 5, 8, 10, 13, 16}) {
        Image img = random_image(dim, dim, 100 + dim);
        for (int side : {3, 5}) {
            Image fast = median_filter_pass(img, WindowSpec{side});
            Image slow = median_filter_oracle(img, side);
            CHECK(fast.pixels() == slow.pixels());
        }
    }
}

TEST_CASE("threshold_merge selects per pixel") {
    Image a(1, 1, 0.5), b(1, 1, 0.6);
    CHECK(threshold_merge(a, b, 0.2).at(0, 0) == 0.5);  // kept: |A-B| < thr
    CHECK(threshold_merge(a, b, 0.0).at(0, 0) == 0.6);  // zero thr -> filtered
    Image pepper(1, 1, 0.0), filt(1, 1, 0.45);
    CHECK(threshold_merge(pepper, filt, 0.2).at(0, 0) == 0.45);
    // equality keeps the source pixel
    Image c(1, 1, 0.5), d(1, 1, 0.7);
    CHECK(threshold_merge(c, d, 0.2).at(0, 0) == 0.5);
    CHECK_THROWS_AS(threshold_merge(a, Image(2, 2), 0.1), std::invalid_argument);
}

TEST_CASE("threshold-zero single pass equals plain filter, bit-exact") {
    Image img = random_image(12, 9, 7);
    Image noisy = inject_sp_noise(img, {NoiseModel::Interval, 30.0, 5});
    Image plain = median_filter_pass(noisy, WindowSpec{3});
    Image rec = recursive_median_denoise(noisy, {WindowSpec{3}, 0.0, 1});
    CHECK(rec.pixels() == plain.pixels());
}

TEST_CASE("threshold comparison is against the original source") {
    // run two passes manually and compare
    Image img = random_image(10, 10, 8);
    Image noisy = inject_sp_noise(img, {NoiseModel::Interval, 40.0, 6});
    RecursionConfig cfg{WindowSpec{3}, 0.15, 2};
    Image got = recursive_median_denoise(noisy, cfg);
    Image cur = threshold_merge(noisy, median_filter_pass(noisy, cfg.window), 0.15);
    cur = threshold_merge(noisy, median_filter_pass(cur, cfg.window), 0.15);
    CHECK(got.pixels() == cur.pixels());
}

TEST_CASE("root convergence without thresholding") {
    for (unsigned seed : {21u, 22u, 23u}) {
        Image cur = random_image(32, 32, seed);
        bool converged = false;
        for (int p = 0; p < 50 && !converged; ++p) {
            Image next = median_filter_pass(cur, WindowSpec{3});
            double max_change = 0;
            for (std::size_t i = 0; i < cur.size(); ++i)
                max_change = std::max(
                    max_change, std::abs(next.pixels()[i] - cur.pixels()[i]));
            converged = max_change < 1.0 / 510.0;
            cur = next;
        }
        CHECK(converged);
    }
}

TEST_CASE("outputs stay in range") {
    Image img = random_image(15, 15, 31);
    Image noisy = inject_sp_noise(img, {NoiseModel::Fixed, 60.0, 3});
    Image out = recursive_median_denoise(noisy, {WindowSpec{5}, 0.2, 4});
    for (double v : out.pixels()) CHECK((v >= 0.0 && v <= 1.0));
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(RecursionConfig({WindowSpec{3}, 0.1, 0}).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS(RecursionConfig({WindowSpec{3}, 1.5, 1}).validate(),
                    std::invalid_argument);
    CHECK_THROWS_AS(WindowSpec{4}, std::invalid_argument);
}
