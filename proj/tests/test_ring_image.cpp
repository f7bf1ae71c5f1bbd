#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ringshift/entropy.hpp"
#include "ringshift/gray_image.hpp"
#include "ringshift/metrics.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace ringshift;
using namespace ringshift::testing;

TEST_CASE("construction validates invariants") {
    CHECK_THROWS_AS(GrayImage(0, 4), DomainError);
    CHECK_THROWS_AS(GrayImage(4, -1), DomainError);
    CHECK_THROWS_AS(GrayImage(2, 2, 1), DomainError);          // modulus too small
    CHECK_THROWS_AS(GrayImage(2, 2, 70000), DomainError);      // modulus too large
    CHECK_THROWS_AS(GrayImage(2, 2, {0, 1, 2}, 256), ShapeError);
    CHECK_THROWS_AS(GrayImage(2, 2, {0, 1, 2, 256}, 256), PixelRangeError);
    CHECK_THROWS_AS(GrayImage(2, 2, {0, 1, 2, -1}, 256), PixelRangeError);
    CHECK_THROWS_AS(ScalarImage(8, 2, 2, 8), PixelRangeError);

    const GrayImage img(3, 2);
    CHECK(img.width() == 3);
    CHECK(img.height() == 2);
    CHECK(img.modulus() == 256);
    CHECK(img.pixel_count() == 6);
    CHECK(img.at(1, 2) == 0);
    CHECK_THROWS_AS(img.at(2, 0), DomainError);
}

TEST_CASE("ring_add wraps modulo n") {
    const GrayImage a = GrayImage::constant(1, 1, 200);
    const GrayImage b = GrayImage::constant(1, 1, 100);
    CHECK(ring_add(a, b)(0, 0) == 44);  // 300 mod 256

    const GrayImage any = random_image(8, 8, 256, 1);
    const GrayImage zero(8, 8);
    CHECK(ring_add(any, zero) == any);

    const GrayImage x(3, 1, {1, 5, 7}, 8);
    const GrayImage y(3, 1, {7, 3, 1}, 8);
    CHECK(ring_add(x, y) == GrayImage(3, 1, {0, 0, 0}, 8));
}

TEST_CASE("ring_add rejects incompatible operands") {
    const GrayImage a(4, 4);
    CHECK_THROWS_AS(ring_add(a, GrayImage(4, 5)), ShapeError);
    CHECK_THROWS_AS(ring_add(a, GrayImage(4, 4, 128)), ModulusError);
    CHECK_THROWS_AS(ring_add(a, ScalarImage(0, 5, 4)), ShapeError);
    CHECK_THROWS_AS(ring_add(a, ScalarImage(0, 4, 4, 16)), ModulusError);
}

TEST_CASE("ring_neg is the additive inverse") {
    CHECK(ring_neg(GrayImage::constant(1, 1, 100))(0, 0) == 156);
    CHECK(ring_neg(GrayImage::constant(1, 1, 0))(0, 0) == 0);

    const GrayImage a = random_image(16, 16, 256, 2);
    CHECK(ring_add(a, ring_neg(a)) == GrayImage(16, 16));

    // negation permutes gray levels: count[v] moves to (n - v) mod n
    const Histogram before = histogram(a);
    const Histogram after = histogram(ring_neg(a));
    for (int v = 0; v < 256; ++v) {
        const int neg = v == 0 ? 0 : 256 - v;
        CHECK(after.counts[neg] == before.counts[v]);
    }
    CHECK(entropy_bits(ring_neg(a)) == doctest::Approx(entropy_bits(a)).epsilon(1e-13));
}

TEST_CASE("ring_sub is add-inverse") {
    const GrayImage a = random_image(8, 8, 256, 3);
    CHECK(ring_sub(a, a) == GrayImage(8, 8));
    CHECK(ring_sub(GrayImage::constant(1, 1, 50), GrayImage::constant(1, 1, 100))(0, 0) == 206);

    std::mt19937 gen(4);
    for (int trial = 0; trial < 20; ++trial) {
        const GrayImage x = random_image(6, 5, 256, gen());
        const GrayImage y = random_image(6, 5, 256, gen());
        const GrayImage d = ring_sub(x, y);
        CHECK(d == ring_add(x, ring_neg(y)));
        CHECK(d == ring_neg(ring_sub(y, x)));
        // brute-force pixel check
        for (int r = 0; r < 5; ++r) {
            for (int c = 0; c < 6; ++c) {
                CHECK(d(r, c) == ((x(r, c) - y(r, c)) % 256 + 256) % 256);
            }
        }
    }
}

TEST_CASE("ring_mul has neutral I and wraps") {
    const GrayImage a = random_image(8, 8, 256, 5);
    const GrayImage ones = GrayImage::constant(8, 8, 1);
    CHECK(ring_mul(a, ones) == a);
    CHECK(ring_mul(GrayImage::constant(1, 1, 16), GrayImage::constant(1, 1, 16))(0, 0) == 0);
}

TEST_CASE("distributivity holds exhaustively over Z_8 scalars") {
    for (int x = 0; x < 8; ++x) {
        for (int y = 0; y < 8; ++y) {
            for (int z = 0; z < 8; ++z) {
                const GrayImage a = GrayImage::constant(1, 1, x, 8);
                const GrayImage b = GrayImage::constant(1, 1, y, 8);
                const GrayImage c = GrayImage::constant(1, 1, z, 8);
                const int lhs = ring_mul(a, ring_add(b, c))(0, 0);
                const int rhs = ring_add(ring_mul(a, b), ring_mul(a, c))(0, 0);
                CHECK(lhs == rhs);
                CHECK(lhs == (x * ((y + z) % 8)) % 8);  // enumeration oracle
            }
        }
    }
}

TEST_CASE("saturating ops truncate at the boundaries") {
    const GrayImage a = GrayImage::constant(2, 2, 200);
    const GrayImage b = GrayImage::constant(2, 2, 50);
    const ScalarImage s(100, 2, 2);
    CHECK(saturating_add(a, s)(0, 0) == 255);
    CHECK(saturating_sub(b, s)(0, 0) == 0);
    CHECK(saturating_add(GrayImage(2, 2), ScalarImage(0, 2, 2))(0, 0) == 0);
}

TEST_CASE("is_scalar detects the subgroup N") {
    CHECK(is_scalar(GrayImage(4, 4)));
    CHECK_FALSE(is_scalar(GrayImage(2, 2, {1, 1, 1, 2}, 256)));
    for (int v = 0; v < 8; ++v) {
        CHECK(is_scalar(ScalarImage(v, 3, 3, 8).expand()));
    }
}

TEST_CASE("strong equivalence is shift by a scalar image") {
    const GrayImage a = random_image(8, 8, 256, 7);
    CHECK(is_strong_equivalent(a, ring_add(a, ScalarImage(100, 8, 8))));
    CHECK(is_strong_equivalent(a, a));

    const GrayImage cb = checkerboard(64, 64);
    const GrayImage st = stripes(64, 64);
    CHECK(histogram(cb).counts == histogram(st).counts);
    CHECK_FALSE(is_strong_equivalent(cb, st));
    CHECK(is_weak_equivalent(cb, st));
}

TEST_CASE("strong equivalence is an equivalence relation") {
    std::mt19937 gen(8);
    for (int trial = 0; trial < 50; ++trial) {
        const GrayImage a = random_image(5, 4, 256, gen());
        const int s = random_value(gen, 256);
        const int t = random_value(gen, 256);
        const GrayImage b = ring_add(a, ScalarImage(s, 5, 4));
        const GrayImage c = ring_add(a, ScalarImage(t, 5, 4));
        CHECK(is_strong_equivalent(a, a));             // reflexive
        CHECK(is_strong_equivalent(b, a));             // symmetric
        CHECK(is_strong_equivalent(a, b));
        CHECK(is_strong_equivalent(b, c));             // transitive via a
    }
}

TEST_CASE("canonical representative picks the first-pixel-zero member") {
    CHECK(canonical_representative(GrayImage(3, 3)) == GrayImage(3, 3));
    CHECK(canonical_representative(GrayImage::constant(3, 3, 7)) == GrayImage(3, 3));

    std::mt19937 gen(9);
    for (int trial = 0; trial < 100; ++trial) {
        const GrayImage a = random_image(6, 6, 256, gen());
        const int s = random_value(gen, 256);
        const GrayImage shifted = ring_add(a, ScalarImage(s, 6, 6));
        CHECK(canonical_representative(shifted) == canonical_representative(a));
        CHECK(canonical_representative(a)(0, 0) == 0);
    }
    const GrayImage a = random_image(6, 6, 256, 10);
    CHECK(canonical_representative(canonical_representative(a)) ==
          canonical_representative(a));

    // canonical(a) == canonical(b) iff strong equivalent
    const GrayImage b = random_image(6, 6, 256, 11);
    CHECK(canonical_representative(a) != canonical_representative(b));
    CHECK_FALSE(is_strong_equivalent(a, b));
}

TEST_CASE("scalar images form a subgroup and commute with any image") {
    for (int v = 0; v < 256; ++v) {
        const ScalarImage s(v, 2, 2);
        const ScalarImage t((v * 7 + 3) % 256, 2, 2);
        CHECK(is_scalar(ring_add(s, t).expand()));     // closure
        CHECK(is_scalar(ring_neg(s).expand()));        // inverse stays in N
        CHECK(ring_add(s, ring_neg(s)).value() == 0);  // neutral O
    }
    std::mt19937 gen(12);
    for (int trial = 0; trial < 25; ++trial) {
        const GrayImage a = random_image(7, 3, 256, gen());
        const ScalarImage s(random_value(gen, 256), 7, 3);
        CHECK(ring_add(a, s) == ring_add(s, a));
    }
}

TEST_CASE("histogram shifts cyclically under scalar ring_add") {
    const GrayImage a = random_image(32, 32, 256, 13);
    const Histogram base = histogram(a);
    for (int s = 0; s < 256; s += 17) {
        const Histogram shifted = histogram(ring_add(a, ScalarImage(s, 32, 32)));
        for (int g = 0; g < 256; ++g) {
            CHECK(shifted.counts[g] == base.counts[((g - s) % 256 + 256) % 256]);
        }
    }
}

TEST_CASE("saturating add accumulates mass at the top level") {
    const GrayImage a = random_image(32, 32, 256, 14);
    const Histogram base = histogram(a);
    for (int s : {1, 50, 100, 255}) {
        const Histogram sat = histogram(saturating_add(a, ScalarImage(s, 32, 32)));
        std::int64_t expected = 0;
        for (int g = 255 - s; g <= 255; ++g) {
            expected += base.counts[g];
        }
        CHECK(sat.counts[255] == expected);
    }
}
