// Deterministic test fixtures. Every randomized image is generated from an
// explicit mt19937 seed so runs are reproducible bit for bit; raw generator
// words are reduced by modulo to stay independent of the standard library's
// distribution implementations.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ringshift/gray_image.hpp"

namespace ringshift::testing {

inline GrayImage random_image(int width, int height, int modulus, std::uint32_t seed) {
    std::mt19937 gen(seed);
    std::vector<int> px(static_cast<std::size_t>(width) * height);
    for (int& v : px) {
        v = static_cast<int>(gen() % static_cast<std::uint32_t>(modulus));
    }
    return {width, height, std::move(px), modulus};
}

// Half-black/half-white patterns with identical histograms: a checkerboard and
// vertical stripes. Weakly equivalent but not strongly equivalent.
inline GrayImage checkerboard(int width, int height, int lo = 0, int hi = 255,
                              int modulus = 256) {
    std::vector<int> px(static_cast<std::size_t>(width) * height);
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            px[static_cast<std::size_t>(r) * width + c] = (r + c) % 2 == 0 ? lo : hi;
        }
    }
    return {width, height, std::move(px), modulus};
}

inline GrayImage stripes(int width, int height, int lo = 0, int hi = 255, int modulus = 256) {
    std::vector<int> px(static_cast<std::size_t>(width) * height);
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            px[static_cast<std::size_t>(r) * width + c] = c % 2 == 0 ? lo : hi;
        }
    }
    return {width, height, std::move(px), modulus};
}

// Vertical split: columns [0, width/2) at left_value, the rest at right_value.
inline GrayImage two_region(int width, int height, int left_value, int right_value,
                            int modulus = 256) {
    std::vector<int> px(static_cast<std::size_t>(width) * height);
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            px[static_cast<std::size_t>(r) * width + c] =
                c < width / 2 ? left_value : right_value;
        }
    }
    return {width, height, std::move(px), modulus};
}

// 64x64 two-region image with +-3 noise whose per-level counts are pinned to
// the same near-uniform vector in both halves, so the two regions realize one
// empirical noise distribution exactly. Placement is a seeded shuffle.
inline GrayImage two_region_balanced_noisy(int left_value, int right_value,
                                           std::uint32_t seed) {
    constexpr int kCounts[7] = {295, 295, 292, 292, 292, 292, 290};  // levels -3..+3
    std::vector<int> noise;
    noise.reserve(2048);
    for (int d = -3; d <= 3; ++d) {
        noise.insert(noise.end(), kCounts[d + 3], d);
    }
    std::mt19937 gen(seed);
    std::vector<int> left_noise = noise;
    std::vector<int> right_noise = noise;
    std::shuffle(left_noise.begin(), left_noise.end(), gen);
    std::shuffle(right_noise.begin(), right_noise.end(), gen);
    std::vector<int> px(64 * 64);
    std::size_t li = 0;
    std::size_t ri = 0;
    for (int r = 0; r < 64; ++r) {
        for (int c = 0; c < 64; ++c) {
            px[static_cast<std::size_t>(r) * 64 + c] =
                c < 32 ? left_value + left_noise[li++] : right_value + right_noise[ri++];
        }
    }
    return {64, 64, std::move(px), 256};
}

// Two-region image with per-pixel uniform noise in [-amplitude, +amplitude].
inline GrayImage two_region_noisy(int width, int height, int left_value, int right_value,
                                  int amplitude, std::uint32_t seed, int modulus = 256) {
    std::mt19937 gen(seed);
    std::vector<int> px(static_cast<std::size_t>(width) * height);
    const std::uint32_t span = static_cast<std::uint32_t>(2 * amplitude + 1);
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            const int base = c < width / 2 ? left_value : right_value;
            const int noise = static_cast<int>(gen() % span) - amplitude;
            px[static_cast<std::size_t>(r) * width + c] = base + noise;
        }
    }
    return {width, height, std::move(px), modulus};
}

inline int random_value(std::mt19937& gen, int modulus) {
    return static_cast<int>(gen() % static_cast<std::uint32_t>(modulus));
}

}  // namespace ringshift::testing
