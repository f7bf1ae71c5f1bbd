#include "ringshift/profile.hpp"

#include <string>

namespace ringshift {

ProfileLine extract_profile(const GrayImage& image, int row) {
    if (row < 0 || row >= image.height()) {
        throw DomainError("profile row " + std::to_string(row) + " outside [0, " +
                          std::to_string(image.height() - 1) + "]");
    }
    ProfileLine line;
    line.row = row;
    const std::span<const int> px = image.pixels();
    line.values.assign(px.begin() + static_cast<std::ptrdiff_t>(row) * image.width(),
                       px.begin() + static_cast<std::ptrdiff_t>(row + 1) * image.width());
    return line;
}

}  // namespace ringshift
