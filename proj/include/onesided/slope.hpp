// Copyright 2026 The onesided Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "onesided/checked.hpp"
#include "onesided/error.hpp"

namespace onesided {

using Int = checked::Int;

/// Raw integer vector on the torus lattice; no primitivity implied.
struct Vec2 {
    Int a = 0;
    Int b = 0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Int det(Vec2 u, Vec2 v) { return checked::sub(checked::mul(u.a, v.b), checked::mul(u.b, v.a)); }

/// A slope: primitive integer pair up to simultaneous negation.
///
/// Stored in canonical sign, b > 0, or b = 0 and a > 0, so that the
/// identification (a, b) ~ (-a, -b) is plain member equality.
class Slope {
public:
    /// Validates and canonicalizes. Throws ZeroSlope or NonPrimitive.
    static Slope make(Int a, Int b) {
        if (a == 0 && b == 0) throw Error(ErrorCode::ZeroSlope, "slope (0,0) is not a curve");
        if (checked::gcd(a, b) != 1) {
            throw Error(ErrorCode::NonPrimitive,
                        "slope (" + std::to_string(a) + "," + std::to_string(b) + ") is not primitive");
        }
        if (b < 0 || (b == 0 && a < 0)) {
            a = checked::neg(a);
            b = checked::neg(b);
        }
        return Slope(a, b);
    }

    static Slope make(Vec2 v) { return make(v.a, v.b); }

    Int a() const noexcept { return a_; }
    Int b() const noexcept { return b_; }
    Vec2 vec() const noexcept { return {a_, b_}; }

    /// Representative with the given sign of the first coordinate (a != 0).
    Vec2 with_positive_a() const noexcept { return a_ < 0 ? Vec2{-a_, -b_} : Vec2{a_, b_}; }

    std::string str() const { return "(" + std::to_string(a_) + "," + std::to_string(b_) + ")"; }

    friend bool operator==(const Slope&, const Slope&) = default;
    friend auto operator<=>(const Slope&, const Slope&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.str(); }

private:
    Slope(Int a, Int b) : a_(a), b_(b) {}

    Int a_;
    Int b_;
};

inline Slope validate_slope(Int a, Int b) { return Slope::make(a, b); }

inline const Slope kMeridian = Slope::make(0, 1);

/// Geometric intersection number |det(s, t)|; zero iff s == t.
inline Int intersection_number(const Slope& s, const Slope& t) { return checked::abs(det(s.vec(), t.vec())); }

/// 2x2 integer matrix of determinant +-1, acting on column vectors.
class UnimodularMap {
public:
    static UnimodularMap make(Int m11, Int m12, Int m21, Int m22) {
        const Int d = checked::sub(checked::mul(m11, m22), checked::mul(m12, m21));
        if (d != 1 && d != -1) {
            throw Error(ErrorCode::InvalidFilling, "matrix determinant " + std::to_string(d) + " is not +-1");
        }
        return UnimodularMap({m11, m12, m21, m22});
    }

    Int m11() const noexcept { return m_[0]; }
    Int m12() const noexcept { return m_[1]; }
    Int m21() const noexcept { return m_[2]; }
    Int m22() const noexcept { return m_[3]; }

    Int determinant() const { return checked::sub(checked::mul(m_[0], m_[3]), checked::mul(m_[1], m_[2])); }

    Vec2 apply(Vec2 v) const {
        return {checked::add(checked::mul(m_[0], v.a), checked::mul(m_[1], v.b)),
                checked::add(checked::mul(m_[2], v.a), checked::mul(m_[3], v.b))};
    }

    Slope apply(const Slope& s) const { return Slope::make(apply(s.vec())); }

    UnimodularMap inverse() const {
        const Int d = determinant();
        // d = +-1, so the adjugate times d is the inverse.
        return UnimodularMap({checked::mul(d, m_[3]), checked::mul(d, checked::neg(m_[1])),
                              checked::mul(d, checked::neg(m_[2])), checked::mul(d, m_[0])});
    }

    friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;

private:
    explicit UnimodularMap(std::array<Int, 4> m) : m_(m) {}

    std::array<Int, 4> m_;
};

/// An even filling slope (2p, q), stored with q > 0.
class FillingSpec {
public:
    /// Primitivity-only construction: gcd(2p, q) = 1.
    static FillingSpec relaxed(Int p, Int q) {
        Int two_p = checked::mul(2, p);
        if (q == 0 || checked::gcd(two_p, q) != 1) {
            throw Error(ErrorCode::NonPrimitive, "filling slope (" + std::to_string(two_p) + "," + std::to_string(q) +
                                                     ") is not primitive");
        }
        if (q < 0) {
            p = checked::neg(p);
            q = checked::neg(q);
        }
        return FillingSpec(p, q, false);
    }

    /// Full admissibility: gcd(|p|,|q|) = 1, q odd, |p| > 2, |p| > |q|.
    /// Checks run in that order so the first violated clause is reported.
    static FillingSpec admissible(Int p, Int q) {
        const Int ap = checked::abs(p), aq = checked::abs(q);
        const std::string name = "(" + std::to_string(checked::mul(2, p)) + "," + std::to_string(q) + ")";
        if (checked::gcd(ap, aq) != 1) {
            throw Error(ErrorCode::ConstraintGcd, "filling " + name + " violates gcd(|p|,|q|) = 1");
        }
        if (aq % 2 == 0) {
            throw Error(ErrorCode::ConstraintQOdd, "filling " + name + " violates q odd (slope not primitive)");
        }
        if (ap <= 2) throw Error(ErrorCode::ConstraintPGreaterThan2, "filling " + name + " violates |p| > 2");
        if (ap <= aq) throw Error(ErrorCode::ConstraintPGreaterThanQ, "filling " + name + " violates |p| > |q|");
        FillingSpec f = relaxed(p, q);
        f.admissible_ = true;
        return f;
    }

    Int p() const noexcept { return p_; }
    Int q() const noexcept { return q_; }
    Int two_p() const noexcept { return 2 * p_; }
    bool is_admissible() const noexcept { return admissible_; }

    Slope slope() const { return Slope::make(two_p(), q_); }

    std::string str() const { return "(" + std::to_string(two_p()) + "," + std::to_string(q_) + ")"; }

    friend bool operator==(const FillingSpec& x, const FillingSpec& y) { return x.p_ == y.p_ && x.q_ == y.q_; }

private:
    FillingSpec(Int p, Int q, bool admissible) : p_(p), q_(q), admissible_(admissible) {}

    Int p_;
    Int q_;
    bool admissible_;
};

/// Change of basis from knot-space coordinates to filling-torus coordinates.
///
/// The result M satisfies M(2p, q) = (0, 1) and det M = +1. The second row
/// is fixed by writing M^-1 = [[c1, 2p], [c2, q]] with 0 <= c2 < q and
/// 2p c2 = -1 (mod q).
inline UnimodularMap filling_basis(const FillingSpec& f) {
    const Int two_p = f.two_p();
    const Int q = f.q();
    // 2p c2 = -1 (mod q)  <=>  c2 = -(2p)^-1 (mod q)
    const Int c2 = q == 1 ? 0 : checked::mod(checked::neg(checked::mod_inverse(checked::mod(two_p, q), q)), q);
    const Int numerator = checked::add(1, checked::mul(two_p, c2));
    if (numerator % q != 0) {
        throw Error(ErrorCode::InternalInconsistency, "basis canonicalization failed for " + f.str());
    }
    const Int c1 = numerator / q;
    // M = (M^-1)^-1 for det(M^-1) = c1 q - 2p c2 = 1.
    return UnimodularMap::make(q, checked::neg(two_p), checked::neg(c2), c1);
}

inline Slope to_torus_coords(const Slope& s, const FillingSpec& f) { return filling_basis(f).apply(s); }

} // namespace onesided
