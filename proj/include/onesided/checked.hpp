// Copyright 2026 The onesided Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>
#include <numeric>

#include "onesided/error.hpp"

// Overflow-checked 64-bit integer helpers. All slope arithmetic goes
// through these; an overflow is a domain error rather than UB.

namespace onesided::checked {

using Int = std::int64_t;

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in addition");
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in subtraction");
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
    return r;
}

inline Int neg(Int a) { return sub(0, a); }

inline Int abs(Int a) { return a < 0 ? neg(a) : a; }

inline Int gcd(Int a, Int b) { return std::gcd(abs(a), abs(b)); }

/// Floor division/modulo (result of `mod` lies in [0, |m|)).
inline Int mod(Int a, Int m) {
    const Int r = a % m;
    return r < 0 ? r + abs(m) : r;
}

inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Inverse of `a` modulo `m` (m >= 1, gcd(a, m) = 1), in [0, m).
inline Int mod_inverse(Int a, Int m) {
    if (m == 1) return 0;
    Int old_r = mod(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        const Int quotient = old_r / r;
        Int tmp = r;
        r = old_r - quotient * r;
        old_r = tmp;
        tmp = s;
        s = sub(old_s, mul(quotient, s));
        old_s = tmp;
    }
    return mod(old_s, m);
}

} // namespace onesided::checked
