/**
 * @file gray_image.cpp
 * @brief Residue-ring image algebra implementation.
 */
#include "ringshift/gray_image.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace ringshift {

namespace {

constexpr int kMinModulus = 2;
constexpr int kMaxModulus = 65536;  // 16-bit graymaps

void check_dimensions(int width, int height) {
    if (width < 1 || height < 1) {
        throw DomainError("image dimensions must be positive, got " + std::to_string(width) +
                          "x" + std::to_string(height));
    }
}

void check_modulus(int modulus) {
    if (modulus < kMinModulus || modulus > kMaxModulus) {
        throw DomainError("modulus must lie in [2, 65536], got " + std::to_string(modulus));
    }
}

void check_value(int value, int modulus) {
    if (value < 0 || value >= modulus) {
        throw PixelRangeError("pixel value " + std::to_string(value) +
                              " outside [0, " + std::to_string(modulus - 1) + "]");
    }
}

void require_same_ring(const GrayImage& a, const GrayImage& b) {
    if (!a.same_shape(b)) {
        throw ShapeError("operand shapes differ: " + std::to_string(a.width()) + "x" +
                         std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                         std::to_string(b.height()));
    }
    if (a.modulus() != b.modulus()) {
        throw ModulusError("operand moduli differ: " + std::to_string(a.modulus()) + " vs " +
                           std::to_string(b.modulus()));
    }
}

void require_same_ring(const GrayImage& a, const ScalarImage& s) {
    if (a.width() != s.width() || a.height() != s.height()) {
        throw ShapeError("operand shapes differ: " + std::to_string(a.width()) + "x" +
                         std::to_string(a.height()) + " vs " + std::to_string(s.width()) + "x" +
                         std::to_string(s.height()));
    }
    if (a.modulus() != s.modulus()) {
        throw ModulusError("operand moduli differ: " + std::to_string(a.modulus()) + " vs " +
                           std::to_string(s.modulus()));
    }
}

// Pixelwise combine of two images already known to share a ring.
template <typename F>
GrayImage combine(const GrayImage& a, const GrayImage& b, F op) {
    std::vector<int> out(a.pixels().begin(), a.pixels().end());
    const std::span<const int> rhs = b.pixels();
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = op(out[i], rhs[i]);
    }
    return {a.width(), a.height(), std::move(out), a.modulus()};
}

template <typename F>
GrayImage map_with_scalar(const GrayImage& a, const ScalarImage& s, F op) {
    require_same_ring(a, s);
    const int scalar = s.value();
    std::vector<int> out(a.pixels().begin(), a.pixels().end());
    for (int& v : out) {
        v = op(v, scalar);
    }
    return {a.width(), a.height(), std::move(out), a.modulus()};
}

int add_mod(int x, int y, int n) {
    const int sum = x + y;
    return sum >= n ? sum - n : sum;
}

int sub_mod(int x, int y, int n) {
    const int diff = x - y;
    return diff < 0 ? diff + n : diff;
}

int mul_mod(int x, int y, int n) {
    return static_cast<int>(static_cast<std::int64_t>(x) * y % n);
}

}  // namespace

GrayImage::GrayImage(int width, int height, int modulus)
    : width_(width), height_(height), modulus_(modulus) {
    check_dimensions(width, height);
    check_modulus(modulus);
    pixels_.assign(static_cast<std::size_t>(width) * height, 0);
}

GrayImage::GrayImage(int width, int height, std::vector<int> pixels, int modulus)
    : width_(width), height_(height), modulus_(modulus), pixels_(std::move(pixels)) {
    check_dimensions(width, height);
    check_modulus(modulus);
    if (pixels_.size() != static_cast<std::size_t>(width) * height) {
        throw ShapeError("pixel count " + std::to_string(pixels_.size()) + " does not match " +
                         std::to_string(width) + "x" + std::to_string(height));
    }
    for (int v : pixels_) {
        check_value(v, modulus_);
    }
}

GrayImage GrayImage::constant(int width, int height, int value, int modulus) {
    check_dimensions(width, height);
    check_modulus(modulus);
    check_value(value, modulus);
    std::vector<int> pixels(static_cast<std::size_t>(width) * height, value);
    return {width, height, std::move(pixels), modulus};
}

int GrayImage::at(int row, int col) const {
    if (row < 0 || row >= height_ || col < 0 || col >= width_) {
        throw DomainError("pixel index (" + std::to_string(row) + ", " + std::to_string(col) +
                          ") outside " + std::to_string(width_) + "x" + std::to_string(height_));
    }
    return (*this)(row, col);
}

ScalarImage::ScalarImage(int value, int width, int height, int modulus)
    : value_(value), width_(width), height_(height), modulus_(modulus) {
    check_dimensions(width, height);
    check_modulus(modulus);
    check_value(value, modulus);
}

GrayImage ring_add(const GrayImage& a, const GrayImage& b) {
    require_same_ring(a, b);
    const int n = a.modulus();
    return combine(a, b, [n](int x, int y) { return add_mod(x, y, n); });
}

GrayImage ring_add(const GrayImage& a, const ScalarImage& s) {
    const int n = a.modulus();
    return map_with_scalar(a, s, [n](int x, int y) { return add_mod(x, y, n); });
}

GrayImage ring_add(const ScalarImage& s, const GrayImage& a) {
    const int n = a.modulus();
    return map_with_scalar(a, s, [n](int x, int y) { return add_mod(y, x, n); });
}

ScalarImage ring_add(const ScalarImage& s, const ScalarImage& t) {
    if (s.width() != t.width() || s.height() != t.height()) {
        throw ShapeError("scalar image shapes differ");
    }
    if (s.modulus() != t.modulus()) {
        throw ModulusError("scalar image moduli differ");
    }
    return {add_mod(s.value(), t.value(), s.modulus()), s.width(), s.height(), s.modulus()};
}

GrayImage ring_neg(const GrayImage& a) {
    const int n = a.modulus();
    std::vector<int> out(a.pixels().begin(), a.pixels().end());
    for (int& v : out) {
        v = v == 0 ? 0 : n - v;
    }
    return {a.width(), a.height(), std::move(out), n};
}

ScalarImage ring_neg(const ScalarImage& s) {
    const int v = s.value();
    return {v == 0 ? 0 : s.modulus() - v, s.width(), s.height(), s.modulus()};
}

GrayImage ring_sub(const GrayImage& a, const GrayImage& b) {
    require_same_ring(a, b);
    const int n = a.modulus();
    return combine(a, b, [n](int x, int y) { return sub_mod(x, y, n); });
}

GrayImage ring_sub(const GrayImage& a, const ScalarImage& s) {
    const int n = a.modulus();
    return map_with_scalar(a, s, [n](int x, int y) { return sub_mod(x, y, n); });
}

GrayImage ring_mul(const GrayImage& a, const GrayImage& b) {
    require_same_ring(a, b);
    const int n = a.modulus();
    return combine(a, b, [n](int x, int y) { return mul_mod(x, y, n); });
}

GrayImage ring_mul(const GrayImage& a, const ScalarImage& s) {
    const int n = a.modulus();
    return map_with_scalar(a, s, [n](int x, int y) { return mul_mod(x, y, n); });
}

GrayImage saturating_add(const GrayImage& a, const ScalarImage& s) {
    const int top = a.modulus() - 1;
    return map_with_scalar(a, s, [top](int x, int y) { return std::min(x + y, top); });
}

GrayImage saturating_sub(const GrayImage& a, const ScalarImage& s) {
    return map_with_scalar(a, s, [](int x, int y) { return std::max(x - y, 0); });
}

bool is_scalar(const GrayImage& a) {
    const std::span<const int> px = a.pixels();
    return std::all_of(px.begin(), px.end(), [first = px.front()](int v) { return v == first; });
}

bool is_strong_equivalent(const GrayImage& a, const GrayImage& b) {
    return is_scalar(ring_sub(a, b));
}

GrayImage canonical_representative(const GrayImage& a) {
    const ScalarImage first(a(0, 0), a.width(), a.height(), a.modulus());
    return ring_sub(a, first);
}

}  // namespace ringshift
