// Copyright 2026 The onesided Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdint>
#include <limits>
#include <numeric>
#include <random>

#include "onesided/slope.hpp"
#include "oracles/surgery_oracle.hpp"

namespace {

using namespace onesided;

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected an onesided::Error";
    return ErrorCode::InternalInconsistency;
}

TEST(Slope, CanonicalSign) {
    EXPECT_EQ(Slope::make(0, 1), Slope::make(0, -1));
    EXPECT_EQ(Slope::make(8, 3), Slope::make(-8, -3));
    EXPECT_EQ(Slope::make(-4, 1).vec(), (Vec2{-4, 1}));
    EXPECT_EQ(Slope::make(4, -1).vec(), (Vec2{-4, 1}));
    EXPECT_EQ(Slope::make(-1, 0).vec(), (Vec2{1, 0}));
    EXPECT_EQ(Slope::make(-4, 1).with_positive_a(), (Vec2{4, -1}));
    EXPECT_EQ(validate_slope(8, 3), Slope::make(8, 3));
}

TEST(Slope, RejectsZeroAndNonPrimitive) {
    EXPECT_EQ(code_of([] { Slope::make(0, 0); }), ErrorCode::ZeroSlope);
    EXPECT_EQ(code_of([] { Slope::make(4, 2); }), ErrorCode::NonPrimitive);
    EXPECT_EQ(code_of([] { Slope::make(0, 3); }), ErrorCode::NonPrimitive);
}

TEST(Slope, IntersectionNumber) {
    EXPECT_EQ(intersection_number(kMeridian, Slope::make(1, 0)), 1);
    EXPECT_EQ(intersection_number(Slope::make(8, 3), Slope::make(0, 1)), 8);
    EXPECT_EQ(intersection_number(Slope::make(4, 1), Slope::make(8, 3)), 4);
    EXPECT_EQ(intersection_number(Slope::make(4, -1), Slope::make(8, 3)), 20);
}

TEST(Checked, OverflowIsAnError) {
    constexpr Int big = std::numeric_limits<Int>::max();
    EXPECT_EQ(code_of([] { checked::add(big, 1); }), ErrorCode::Overflow);
    EXPECT_EQ(code_of([] { checked::mul(big / 2 + 1, 2); }), ErrorCode::Overflow);
    EXPECT_EQ(code_of([] { checked::neg(std::numeric_limits<Int>::min()); }), ErrorCode::Overflow);
    EXPECT_EQ(checked::mod(-7, 3), 2);
    EXPECT_EQ(checked::mod(7, -3), 1);
    EXPECT_EQ(checked::floor_div(-7, 2), -4);
    EXPECT_EQ(checked::mod_inverse(8, 3), 2);
}

TEST(UnimodularMap, RejectsNonUnimodular) {
    EXPECT_EQ(code_of([] { UnimodularMap::make(2, 0, 0, 1); }), ErrorCode::InvalidFilling);
    const UnimodularMap m = UnimodularMap::make(3, -8, -1, 3);
    const UnimodularMap inv = m.inverse();
    EXPECT_EQ(inv.apply(m.apply(Vec2{5, -7})), (Vec2{5, -7}));
}

TEST(FillingSpec, ConstraintOrder) {
    EXPECT_EQ(code_of([] { FillingSpec::admissible(3, 3); }), ErrorCode::ConstraintGcd);
    EXPECT_EQ(code_of([] { FillingSpec::admissible(5, 2); }), ErrorCode::ConstraintQOdd);
    EXPECT_EQ(code_of([] { FillingSpec::admissible(2, 1); }), ErrorCode::ConstraintPGreaterThan2);
    EXPECT_EQ(code_of([] { FillingSpec::admissible(4, 5); }), ErrorCode::ConstraintPGreaterThanQ);
    EXPECT_EQ(code_of([] { FillingSpec::relaxed(2, 0); }), ErrorCode::NonPrimitive);
    EXPECT_EQ(code_of([] { FillingSpec::relaxed(3, 6); }), ErrorCode::NonPrimitive);
    EXPECT_TRUE(FillingSpec::admissible(4, 3).is_admissible());
    EXPECT_FALSE(FillingSpec::relaxed(1, 1).is_admissible());
    const FillingSpec neg = FillingSpec::admissible(4, -3);
    EXPECT_EQ(neg.two_p(), -8);
    EXPECT_EQ(neg.q(), 3);
}

TEST(FillingBasis, EightThreePins) {
    const FillingSpec f = FillingSpec::admissible(4, 3);
    const UnimodularMap m = filling_basis(f);
    EXPECT_EQ(m.apply(Vec2{8, 3}), (Vec2{0, 1}));
    EXPECT_EQ(m.apply(Vec2{0, 1}), (Vec2{-8, 3}));
    EXPECT_EQ(m.apply(Vec2{4, 1}), (Vec2{4, -1}));
    EXPECT_EQ(m.apply(Vec2{4, -1}), (Vec2{20, -7}));
    EXPECT_EQ(to_torus_coords(Slope::make(4, -1), f), Slope::make(20, -7));
}

TEST(FillingBasis, RelaxedTwoOne) {
    const UnimodularMap m = filling_basis(FillingSpec::relaxed(1, 1));
    EXPECT_EQ(m.m11(), 1);
    EXPECT_EQ(m.m12(), -2);
    EXPECT_EQ(m.m21(), 0);
    EXPECT_EQ(m.m22(), 1);
}

// Every primitive (2p, q) with |p|, |q| <= 50: determinant one, filling sent
// to the meridian, and the matrix agrees with a brute-force search.
TEST(FillingBasis, ExhaustiveAgainstSearch) {
    int checked_count = 0;
    for (Int p = -50; p <= 50; ++p) {
        for (Int q = 1; q <= 50; ++q) {
            if (std::gcd(2 * p, q) != 1) continue;
            const UnimodularMap m = filling_basis(FillingSpec::relaxed(p, q));
            ASSERT_EQ(m.determinant(), 1) << p << "," << q;
            ASSERT_EQ(m.apply(Vec2{2 * p, q}), (Vec2{0, 1})) << p << "," << q;
            const oracle::Basis b = oracle::brute_basis(2 * p, q);
            ASSERT_EQ(m.m11(), b.m11);
            ASSERT_EQ(m.m12(), b.m12);
            ASSERT_EQ(m.m21(), b.m21);
            ASSERT_EQ(m.m22(), b.m22);
            ++checked_count;
        }
    }
    EXPECT_GT(checked_count, 1000);
}

// In filling coordinates the first coordinate of a curve counts its meetings
// with the filling meridian, i.e. its intersection with the filling slope.
TEST(FillingBasis, FirstCoordinateIsIntersection) {
    std::mt19937_64 rng(20261014);
    std::uniform_int_distribution<Int> coord(-500, 500);
    for (int i = 0; i < 10000; ++i) {
        Int p = 0, q = 0;
        do {
            p = coord(rng);
            q = coord(rng);
        } while (q == 0 || std::gcd(2 * p, q) != 1);
        Int a = 0, b = 0;
        do {
            a = coord(rng);
            b = coord(rng);
        } while (std::gcd(a, b) != 1);
        const FillingSpec f = FillingSpec::relaxed(p, q);
        const Vec2 t = filling_basis(f).apply(Vec2{a, b});
        // Coordinates stay below 1e3, so the cross product fits comfortably.
        const Int cross = a * f.q() - b * f.two_p();
        ASSERT_EQ(std::abs(t.a), std::abs(cross));
        // Parity of meridian crossings is the parity of the knot-space intersection.
        ASSERT_EQ(std::abs(t.a) % 2, std::abs(cross % 2));
    }
}

// The filling slope's sign is irrelevant: (2p, q) and (-2p, -q) give the
// same basis.
TEST(FillingBasis, SignOfFillingIrrelevant) {
    for (Int p = 3; p <= 30; ++p) {
        for (Int q = 1; q < p; q += 2) {
            if (std::gcd(p, q) != 1) continue;
            const UnimodularMap a = filling_basis(FillingSpec::admissible(p, q));
            const UnimodularMap b = filling_basis(FillingSpec::admissible(-p, -q));
            EXPECT_EQ(a.apply(Vec2{4, 1}), b.apply(Vec2{4, 1}));
            EXPECT_EQ(a.apply(Vec2{0, 1}), b.apply(Vec2{0, 1}));
        }
    }
}

} // namespace
