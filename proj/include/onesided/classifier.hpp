// Copyright 2026 The onesided Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "onesided/checked.hpp"
#include "onesided/error.hpp"
#include "onesided/genus.hpp"
#include "onesided/slope.hpp"

namespace onesided {

enum class Verdict { UniqueMinimal, TwoMinimal };

constexpr std::string_view verdict_name(Verdict v) {
    return v == Verdict::TwoMinimal ? "TwoMinimal" : "UniqueMinimal";
}

struct SurfaceGenus {
    SurfaceSpec surface;
    ClosedGenus genus;
};

struct ClassificationResult {
    FillingSpec filling;
    std::vector<SurfaceGenus> surfaces;  // K01, K41, K4m1 in that order
    Int minimal_genus;
    std::vector<SurfaceTag> minimal_classes;
    Verdict verdict;
    std::string note;
};

/// Admissible even filling from its slope coordinates (2p, q).
inline FillingSpec validate_filling(Int two_p, Int q) {
    if (two_p % 2 != 0) {
        throw Error(ErrorCode::OddFirstCoordinate,
                    "filling first coordinate " + std::to_string(two_p) + " is odd; only even fillings are supported");
    }
    return FillingSpec::admissible(two_p / 2, q);
}

/// |2p/q| < 3, evaluated exactly as |2p| < 3|q|. Equality cannot occur:
/// 2p is even and 3q is odd.
inline Verdict analytic_verdict(const FillingSpec& f) {
    const Int lhs = checked::abs(f.two_p());
    const Int rhs = checked::mul(3, checked::abs(f.q()));
    return lhs < rhs ? Verdict::TwoMinimal : Verdict::UniqueMinimal;
}

namespace detail {

inline std::string stabilization_note(const std::vector<SurfaceTag>& minimal, const std::vector<SurfaceTag>& rest) {
    std::string m, r;
    for (SurfaceTag t : minimal) m += (m.empty() ? "" : ", ") + std::string(tag_name(t));
    for (SurfaceTag t : rest) r += (r.empty() ? "" : ", ") + std::string(tag_name(t));
    std::string note = "minimal genus classes: " + m + " (pairwise non-isotopic)";
    if (!r.empty()) note += "; non-minimal: " + r + " (geometrically compressible, a stabilization)";
    note += "; every one-sided splitting is isotopic to a minimal class or a stabilization of one";
    return note;
}

} // namespace detail

inline ClassificationResult classify(const FillingSpec& f) {
    if (!f.is_admissible()) {
        throw Error(ErrorCode::InvalidFilling, "classify requires an admissible filling, got " + f.str());
    }
    ClassificationResult result{f, {}, 0, {}, analytic_verdict(f), {}};
    for (SurfaceTag tag : kAllSurfaces) {
        const SurfaceSpec s = SurfaceSpec::of(tag);
        result.surfaces.push_back({s, closed_genus(s, f)});
    }
    result.minimal_genus = std::min_element(result.surfaces.begin(), result.surfaces.end(), [](auto& x, auto& y) {
                               return x.genus.genus < y.genus.genus;
                           })->genus.genus;
    std::vector<SurfaceTag> rest;
    for (const SurfaceGenus& sg : result.surfaces) {
        (sg.genus.genus == result.minimal_genus ? result.minimal_classes : rest).push_back(sg.surface.tag);
    }

    // The analytic dichotomy and the computed genera must agree.
    const auto& mc = result.minimal_classes;
    const bool has_k01 = std::find(mc.begin(), mc.end(), SurfaceTag::K01) != mc.end();
    const bool consistent =
        result.verdict == Verdict::TwoMinimal ? (mc.size() == 2 && has_k01) : (mc.size() == 1);
    if (!consistent) {
        std::string got;
        for (const auto& sg : result.surfaces) got += " " + std::to_string(sg.genus.genus);
        throw Error(ErrorCode::InternalInconsistency, "filling " + f.str() + ": verdict " +
                                                          std::string(verdict_name(result.verdict)) +
                                                          " disagrees with computed genera" + got);
    }
    result.note = detail::stabilization_note(mc, rest);
    return result;
}

/// Every admissible (2p, q) with |2p| <= max_two_p and q > 0, ordered by
/// (|2p|, 2p, q).
inline std::vector<ClassificationResult> enumerate(Int max_two_p) {
    if (max_two_p < 8) {
        throw Error(ErrorCode::InvalidFilling, "enumerate requires max >= 8 (smallest admissible |2p| is 8)");
    }
    std::vector<ClassificationResult> out;
    for (Int abs_two_p = 6; abs_two_p <= max_two_p; abs_two_p += 2) {
        for (Int two_p : {-abs_two_p, abs_two_p}) {
            for (Int q = 1; q < abs_two_p / 2; q += 2) {
                const Int p = two_p / 2;
                if (checked::gcd(p, q) != 1) continue;
                out.push_back(classify(FillingSpec::admissible(p, q)));
            }
        }
    }
    return out;
}

} // namespace onesided
