#include "ringshift/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ringshift {

Histogram histogram(const GrayImage& image) {
    Histogram h;
    h.modulus = image.modulus();
    h.counts.assign(static_cast<std::size_t>(h.modulus), 0);
    for (int v : image.pixels()) {
        ++h.counts[static_cast<std::size_t>(v)];
    }
    h.total = image.pixel_count();
    return h;
}

double entropy_bits(const Histogram& h) {
    if (h.total <= 0) {
        throw DomainError("histogram total must be positive, got " + std::to_string(h.total));
    }
    std::vector<std::int64_t> occupied;
    for (std::int64_t c : h.counts) {
        if (c < 0) {
            throw DomainError("histogram counts must be non-negative");
        }
        if (c > 0) {
            occupied.push_back(c);
        }
    }
    // Smallest counts first, so equal count multisets sum in one fixed order.
    std::sort(occupied.begin(), occupied.end());
    const double total = static_cast<double>(h.total);
    double acc = 0.0;
    for (std::int64_t c : occupied) {
        const double p = static_cast<double>(c) / total;
        acc += p * std::log2(p);
    }
    return acc == 0.0 ? 0.0 : -acc;
}

double entropy_bits(const GrayImage& image) {
    return entropy_bits(histogram(image));
}

}  // namespace ringshift
