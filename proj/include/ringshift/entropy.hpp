/**
 * @file entropy.hpp
 * @brief Gray-level histograms and Shannon entropy of an image.
 */
#pragma once

#include <cstdint>
#include <vector>

#include "ringshift/gray_image.hpp"

namespace ringshift {

/// Per-gray-level occurrence counts of one image.
struct Histogram {
    int modulus = 0;
    std::vector<std::int64_t> counts;  // size == modulus
    std::int64_t total = 0;            // == pixel count of the source image
};

Histogram histogram(const GrayImage& image);

/// Shannon entropy in bits: -sum p_x log2 p_x over levels with p_x > 0.
/// Zero-probability levels contribute nothing. The sum runs over all n
/// levels of the ring; for n = 2^B that is the usual [0, 2^B - 1] range.
double entropy_bits(const Histogram& h);
double entropy_bits(const GrayImage& image);

}  // namespace ringshift
