#include "ringshift/metrics.hpp"

#include <cmath>

#include "ringshift/entropy.hpp"

namespace ringshift {

namespace {

void require_comparable(const GrayImage& a, const GrayImage& b) {
    if (!a.same_shape(b)) {
        throw ShapeError("cannot compare images of different shapes");
    }
    if (a.modulus() != b.modulus()) {
        throw ModulusError("cannot compare images of different moduli");
    }
}

}  // namespace

SimilarityValue we_index(const GrayImage& a, const GrayImage& b) {
    require_comparable(a, b);
    return {std::abs(entropy_bits(a) - entropy_bits(b)), SimilarityKind::weak_entropy};
}

SimilarityValue ned(const GrayImage& a, const GrayImage& b) {
    return {entropy_bits(ring_sub(a, b)), SimilarityKind::ned};
}

bool is_weak_equivalent(const GrayImage& a, const GrayImage& b) {
    return we_index(a, b).value <= kWeakEquivalenceTolerance;
}

}  // namespace ringshift
