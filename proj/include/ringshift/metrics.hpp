/**
 * @file metrics.hpp
 * @brief Image similarity indices: the weak-entropy index and the natural
 *        entropy distance (NED), plus the weak-equivalence predicate.
 */
#pragma once

#include "ringshift/gray_image.hpp"

namespace ringshift {

enum class SimilarityKind { weak_entropy, ned };

struct SimilarityValue {
    double value = 0.0;  // bits
    SimilarityKind kind = SimilarityKind::ned;
};

/// Entropies of equal histograms computed with the same summation order are
/// bitwise equal; this tolerance only guards comparisons across orders.
inline constexpr double kWeakEquivalenceTolerance = 1e-12;

/// Weak-entropy index |E(a) - E(b)|. Blind to spatial structure: any two
/// images with equal histograms score zero.
SimilarityValue we_index(const GrayImage& a, const GrayImage& b);

/// Natural entropy distance: entropy of the ring difference a + (-b).
/// Zero exactly on strongly equivalent pairs. No triangle inequality is
/// claimed; treat it as a semi-metric-like index.
SimilarityValue ned(const GrayImage& a, const GrayImage& b);

/// True iff |E(a) - E(b)| <= kWeakEquivalenceTolerance.
bool is_weak_equivalent(const GrayImage& a, const GrayImage& b);

}  // namespace ringshift
