/**
 * @file profile.hpp
 * @brief Intensity profile extraction: one image row as a value sequence.
 */
#pragma once

#include <vector>

#include "ringshift/gray_image.hpp"

namespace ringshift {

struct ProfileLine {
    int row = 0;
    std::vector<int> values;  // length == image width
};

/// Copies row `row` (0-based) in column order; throws DomainError when the
/// row is out of range.
ProfileLine extract_profile(const GrayImage& image, int row);

}  // namespace ringshift
