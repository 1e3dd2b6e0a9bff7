// Copyright 2026 The onesided Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "onesided/checked.hpp"
#include "onesided/error.hpp"
#include "onesided/slope.hpp"

namespace onesided {

/// The three geometrically incompressible, boundary incompressible surfaces
/// of Figure-8 knot space: the fibre torus and the two Klein bottles.
enum class SurfaceTag { K01, K41, K4m1 };

inline constexpr std::array<SurfaceTag, 3> kAllSurfaces = {SurfaceTag::K01, SurfaceTag::K41, SurfaceTag::K4m1};

constexpr std::string_view tag_name(SurfaceTag tag) {
    switch (tag) {
        case SurfaceTag::K01: return "K01";
        case SurfaceTag::K41: return "K41";
        case SurfaceTag::K4m1: return "K4m1";
    }
    return "?";
}

inline std::optional<SurfaceTag> parse_tag(std::string_view text) {
    for (SurfaceTag t : kAllSurfaces) {
        if (text == tag_name(t)) return t;
    }
    return std::nullopt;
}

struct SurfaceSpec {
    SurfaceTag tag;
    Slope boundary_slope_K;
    int euler_char;

    static SurfaceSpec of(SurfaceTag tag) {
        switch (tag) {
            case SurfaceTag::K01: return {tag, Slope::make(0, 1), -1};  // once-punctured fibre torus
            case SurfaceTag::K41: return {tag, Slope::make(4, 1), -1};  // once-punctured Klein bottle
            case SurfaceTag::K4m1: return {tag, Slope::make(4, -1), -1};
        }
        throw Error(ErrorCode::InternalInconsistency, "unknown surface tag");
    }

    /// Inverse of the tag <-> boundary slope bijection.
    static std::optional<SurfaceSpec> from_slope(const Slope& s) {
        for (SurfaceTag t : kAllSurfaces) {
            if (of(t).boundary_slope_K == s) return of(t);
        }
        return std::nullopt;
    }
};

/// Crosscap number of a nonorientable surface (g with chi = 2 - g for a
/// closed surface, chi = 1 - g with one boundary circle). Always >= 1.
struct GenusValue {
    Int crosscaps;

    friend bool operator==(const GenusValue&, const GenusValue&) = default;
};

inline constexpr int kExpansionDepthCap = 64;

/// Minimal crosscap number N(a, b) of a one-sided surface in the filling
/// solid torus bounded by the T-coordinate curve (a, b), where the meridian is
/// (0, 1) and so the curve meets the meridian disc |a| times.
///
/// Bredon–Wood recursion on n = |a| with b taken modulo n and folded into
/// [1, n/2]:
///     N(n, 1) = n / 2
///     N(n, b) = floor(n / 2b) + N(n mod 2b, b)
/// The batched quotient is the repeated Möbius-band boundary compression
/// n -> n - 2b. Each level at least halves n, so depth stays logarithmic.
inline GenusValue completion_genus(const Slope& t) {
    if (t.a() == 0) throw Error(ErrorCode::MeridianBoundary, "curve " + t.str() + " bounds a meridian disc");
    if (t.a() % 2 != 0) {
        throw Error(ErrorCode::OddWinding, "curve " + t.str() + " meets the meridian an odd number of times");
    }
    Int n = checked::abs(t.a());
    Int b = checked::mod(t.b(), n);
    Int total = 0;
    for (int depth = 0; depth < kExpansionDepthCap; ++depth) {
        if (b > n - b) b = n - b;
        if (b == 1) return {checked::add(total, n / 2)};
        const Int two_b = 2 * b;
        total = checked::add(total, n / two_b);
        n %= two_b;
        b %= n;
    }
    throw Error(ErrorCode::DepthExceeded, "expansion of " + t.str() + " exceeded depth cap");
}

/// Genus data of the closed one-sided splitting surface obtained by capping
/// a knot-space surface with its minimal solid-torus completion.
struct ClosedGenus {
    Slope torus_slope;      ///< boundary slope in filling-torus coordinates
    GenusValue completion;  ///< crosscaps of the solid-torus piece
    Int crosscaps;          ///< crosscap number of the closed surface: 2 - chi
    Int genus;              ///< splitting genus 1 - chi (genus of the complementary handlebody)

    friend bool operator==(const ClosedGenus&, const ClosedGenus&) = default;
};

inline ClosedGenus closed_genus(const SurfaceSpec& s, const FillingSpec& f) {
    const Slope t = to_torus_coords(s.boundary_slope_K, f);
    const GenusValue n = completion_genus(t);
    // chi(closed) = chi(s) + (1 - N)
    const Int chi = checked::add(s.euler_char, checked::sub(1, n.crosscaps));
    return {t, n, checked::sub(2, chi), checked::sub(1, chi)};
}

} // namespace onesided
