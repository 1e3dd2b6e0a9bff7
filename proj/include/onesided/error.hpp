// Copyright 2026 The onesided Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace onesided {

/// Machine-readable failure categories. Every domain error raised by the
/// library carries one of these; the CLI prints `code_name()` on stderr.
enum class ErrorCode {
    ZeroSlope,
    NonPrimitive,
    Overflow,
    InvalidFilling,
    OddFirstCoordinate,
    ConstraintGcd,
    ConstraintQOdd,
    ConstraintPGreaterThan2,
    ConstraintPGreaterThanQ,
    MeridianBoundary,
    OddWinding,
    DepthExceeded,
    InternalInconsistency,
    MeridianSlope,
    IllegalMove,
    InvalidPattern,
    GeneratorRejected,
    TraceParse,
    UnknownMoveKind,
    Io,
};

constexpr std::string_view code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroSlope: return "ZERO_SLOPE";
        case ErrorCode::NonPrimitive: return "NON_PRIMITIVE";
        case ErrorCode::Overflow: return "OVERFLOW";
        case ErrorCode::InvalidFilling: return "INVALID_FILLING";
        case ErrorCode::OddFirstCoordinate: return "ODD_FIRST_COORDINATE";
        case ErrorCode::ConstraintGcd: return "CONSTRAINT_GCD";
        case ErrorCode::ConstraintQOdd: return "CONSTRAINT_Q_ODD";
        case ErrorCode::ConstraintPGreaterThan2: return "CONSTRAINT_P_GT_2";
        case ErrorCode::ConstraintPGreaterThanQ: return "CONSTRAINT_P_GT_Q";
        case ErrorCode::MeridianBoundary: return "MERIDIAN_BOUNDARY";
        case ErrorCode::OddWinding: return "ODD_WINDING";
        case ErrorCode::DepthExceeded: return "DEPTH_EXCEEDED";
        case ErrorCode::InternalInconsistency: return "INTERNAL_INCONSISTENCY";
        case ErrorCode::MeridianSlope: return "MERIDIAN_SLOPE";
        case ErrorCode::IllegalMove: return "ILLEGAL_MOVE";
        case ErrorCode::InvalidPattern: return "INVALID_PATTERN";
        case ErrorCode::GeneratorRejected: return "GENERATOR_REJECTED";
        case ErrorCode::TraceParse: return "TRACE_PARSE";
        case ErrorCode::UnknownMoveKind: return "UNKNOWN_MOVE_KIND";
        case ErrorCode::Io: return "IO_ERROR";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace onesided
