/**
 * @file gray_image.hpp
 * @brief Gray images as elements of the ring of k x m matrices over Z_n,
 *        with pixelwise ring operations, scalar images and the equivalence
 *        relations built on them.
 *
 * Every value is immutable after construction and every operation is a pure
 * function, so concurrent use needs no synchronization.
 */
#pragma once

#include <span>
#include <vector>

#include "ringshift/error.hpp"

namespace ringshift {

class ScalarImage;

/// 2-D grid of integer gray levels, each in [0, modulus-1].
class GrayImage {
public:
    static constexpr int kDefaultModulus = 256;  // 8-bit images

    /// Zero-filled image (the additive neutral O of its ring).
    GrayImage(int width, int height, int modulus = kDefaultModulus);

    /// Takes ownership of row-major pixel data; validates size and value range.
    GrayImage(int width, int height, std::vector<int> pixels, int modulus = kDefaultModulus);

    static GrayImage constant(int width, int height, int value, int modulus = kDefaultModulus);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    int modulus() const noexcept { return modulus_; }
    int pixel_count() const noexcept { return width_ * height_; }

    /// Unchecked pixel access, row-major.
    int operator()(int row, int col) const noexcept {
        return pixels_[static_cast<std::size_t>(row) * width_ + col];
    }

    /// Bounds-checked pixel access; throws DomainError.
    int at(int row, int col) const;

    std::span<const int> pixels() const noexcept { return pixels_; }

    bool same_shape(const GrayImage& other) const noexcept {
        return width_ == other.width_ && height_ == other.height_;
    }

    bool operator==(const GrayImage&) const = default;

private:
    int width_;
    int height_;
    int modulus_;
    std::vector<int> pixels_;
};

/// Image with all pixels equal, stored as one value plus dimensions.
/// These form the subgroup N used by strong equivalence; expansion to a
/// full grid happens lazily via expand().
class ScalarImage {
public:
    ScalarImage(int value, int width, int height, int modulus = GrayImage::kDefaultModulus);

    int value() const noexcept { return value_; }
    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    int modulus() const noexcept { return modulus_; }

    GrayImage expand() const { return GrayImage::constant(width_, height_, value_, modulus_); }

private:
    int value_;
    int width_;
    int height_;
    int modulus_;
};

// Pixelwise ring operations in Z_n. Operands must share width, height and
// modulus; mismatches raise ShapeError / ModulusError.
GrayImage ring_add(const GrayImage& a, const GrayImage& b);
GrayImage ring_add(const GrayImage& a, const ScalarImage& s);
GrayImage ring_add(const ScalarImage& s, const GrayImage& a);
ScalarImage ring_add(const ScalarImage& s, const ScalarImage& t);

/// Additive inverse: pixel v maps to (n - v) mod n.
GrayImage ring_neg(const GrayImage& a);
ScalarImage ring_neg(const ScalarImage& s);

/// Subtraction as add-inverse: a + (-b).
GrayImage ring_sub(const GrayImage& a, const GrayImage& b);
GrayImage ring_sub(const GrayImage& a, const ScalarImage& s);

GrayImage ring_mul(const GrayImage& a, const GrayImage& b);
GrayImage ring_mul(const GrayImage& a, const ScalarImage& s);

// Classic clamped arithmetic. Not part of the ring API: kept only to expose
// the information loss that truncation at 0 and n-1 causes.
GrayImage saturating_add(const GrayImage& a, const ScalarImage& s);
GrayImage saturating_sub(const GrayImage& a, const ScalarImage& s);

/// True iff all pixels are equal (membership test for the subgroup N).
bool is_scalar(const GrayImage& a);

/// True iff a - b is a scalar image, i.e. a and b differ by an element of N.
bool is_strong_equivalent(const GrayImage& a, const GrayImage& b);

/// Representative of the equivalence class of `a` with first pixel zero:
/// subtracts the scalar image of a(0,0). Two images have equal canonical
/// representatives exactly when they are strongly equivalent.
GrayImage canonical_representative(const GrayImage& a);

}  // namespace ringshift
