// Copyright 2026 The onesided Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "onesided/classifier.hpp"
#include "onesided/error.hpp"
#include "onesided/genus.hpp"
#include "onesided/slope.hpp"
#include "onesided/sweepout.hpp"

// JSON schemas for sweep traces, trace reports and classifier results. All
// numbers are integers; object keys serialize in sorted order, so dump()
// output is canonical.

namespace onesided::json_io {

using nlohmann::json;

inline json vec_json(Vec2 v) { return json::array({v.a, v.b}); }
inline json slope_json(const Slope& s) { return vec_json(s.vec()); }
inline json filling_json(const FillingSpec& f) { return json::array({f.two_p(), f.q()}); }

// ---------------------------------------------------------------------------
// Trace parsing
// ---------------------------------------------------------------------------

namespace detail {

[[noreturn]] inline void parse_error(const std::string& where, const std::string& what) {
    throw Error(ErrorCode::TraceParse, where + ": " + what);
}

inline Int get_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) parse_error(where, "expected an integer");
    return j.get<Int>();
}

inline Vec2 get_pair(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) parse_error(where, "expected a two-element integer array");
    return {get_int(j[0], where), get_int(j[1], where)};
}

inline Slope get_slope(const json& j, const std::string& where) {
    const Vec2 v = get_pair(j, where);
    try {
        return Slope::make(v);
    } catch (const Error& e) {
        parse_error(where, e.what());
    }
}

inline sweep::Path get_path(const json& j, const std::string& where) {
    if (!j.is_array()) parse_error(where, "expected an index array");
    sweep::Path p;
    for (const json& x : j) {
        const Int i = get_int(x, where);
        if (i < 0) parse_error(where, "negative index");
        p.push_back(static_cast<std::size_t>(i));
    }
    return p;
}

inline sweep::Forest get_forest(const json& j, const std::string& where) {
    if (!j.is_array()) parse_error(where, "forest must be an array of nested arrays");
    sweep::Forest f;
    for (std::size_t i = 0; i < j.size(); ++i) {
        f.push_back({get_forest(j[i], where + "[" + std::to_string(i) + "]")});
    }
    return f;
}

inline const json& member(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) parse_error(where, std::string("missing \"") + key + "\"");
    return obj.at(key);
}

inline sweep::SaddleOp get_op(const json& obj, const std::string& where) {
    const json& op = member(obj, "op", where);
    if (op == "join") return sweep::SaddleOp::Join;
    if (op == "split") return sweep::SaddleOp::Split;
    parse_error(where, "\"op\" must be \"join\" or \"split\"");
}

} // namespace detail

inline sweep::CriticalMove parse_move(const json& j, std::size_t index) {
    using namespace sweep;
    const std::string where = "move " + std::to_string(index);
    const json& kind_j = detail::member(j, "kind", where);
    if (!kind_j.is_string()) detail::parse_error(where, "\"kind\" must be a string");
    const std::string kind = kind_j.get<std::string>();
    auto path_or_root = [&](const char* key) {
        return j.contains(key) ? detail::get_path(j.at(key), where) : Path{};
    };

    if (kind == "min") return MinMove{path_or_root("path")};
    if (kind == "max") return MaxMove{detail::get_path(detail::member(j, "path", where), where)};
    if (kind == "saddle1") {
        const SaddleOp op = detail::get_op(j, where);
        if (op == SaddleOp::Join) {
            const json& paths = detail::member(j, "paths", where);
            if (!paths.is_array() || paths.size() != 2) detail::parse_error(where, "\"paths\" must hold two paths");
            return Saddle1Move{op, detail::get_path(paths[0], where), detail::get_path(paths[1], where), {}};
        }
        std::vector<std::size_t> moved;
        if (j.contains("children")) moved = detail::get_path(j.at("children"), where);
        return Saddle1Move{op, detail::get_path(detail::member(j, "path", where), where), {}, std::move(moved)};
    }
    if (kind == "saddle2") {
        const SaddleOp op = detail::get_op(j, where);
        if (op == SaddleOp::Join) return Saddle2Move{op, detail::get_path(detail::member(j, "path", where), where)};
        return Saddle2Move{op, {}};
    }
    if (kind == "saddle3") return Saddle3Move{detail::get_path(detail::member(j, "path", where), where)};
    if (kind == "saddle4") return Saddle4Move{};
    if (kind == "saddle5") return Saddle5Move{detail::get_slope(detail::member(j, "slope", where), where)};
    throw Error(ErrorCode::UnknownMoveKind, where + ": unknown kind \"" + kind + "\"");
}

inline sweep::TorusPattern parse_pattern(const json& j, const std::string& where) {
    const json& ess = detail::member(j, "essential", where);
    const json& slope_j = detail::member(ess, "slope", where + ".essential");
    if (slope_j.is_null()) {
        throw Error(ErrorCode::InvalidPattern, where + ": essential slope is required (essential count must be odd)");
    }
    const Slope slope = detail::get_slope(slope_j, where + ".essential.slope");
    const Int count = detail::get_int(detail::member(ess, "count", where + ".essential"), where + ".essential.count");
    sweep::Forest forest;
    if (j.contains("forest")) forest = detail::get_forest(j.at("forest"), where + ".forest");
    return sweep::TorusPattern::make(slope, count, std::move(forest));
}

inline sweep::SweepTrace parse_trace(const json& j) {
    if (!j.is_object()) detail::parse_error("trace", "document must be an object");
    const Vec2 f = detail::get_pair(detail::member(j, "filling", "trace"), "filling");
    const FillingSpec filling = validate_filling(f.a, f.b);
    sweep::TorusPattern initial = parse_pattern(detail::member(j, "initial", "trace"), "initial");
    std::vector<sweep::CriticalMove> moves;
    if (j.contains("moves")) {
        const json& ms = j.at("moves");
        if (!ms.is_array()) detail::parse_error("moves", "expected an array");
        for (std::size_t i = 0; i < ms.size(); ++i) moves.push_back(parse_move(ms[i], i));
    }
    return {filling, std::move(initial), std::move(moves)};
}

inline sweep::SweepTrace parse_trace_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::TraceParse, std::string("invalid JSON: ") + e.what());
    }
    return parse_trace(j);
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline json forest_json(const sweep::Forest& f) {
    json arr = json::array();
    for (const sweep::CurveNode& n : f) arr.push_back(forest_json(n.children));
    return arr;
}

inline json path_json(const sweep::Path& p) {
    json arr = json::array();
    for (std::size_t i : p) arr.push_back(i);
    return arr;
}

inline json pattern_json(const sweep::TorusPattern& p) {
    return {{"essential", {{"slope", slope_json(p.essential_slope())}, {"count", p.essential_count()}}},
            {"forest", forest_json(p.forest())}};
}

inline json move_json(const sweep::CriticalMove& m) {
    using namespace sweep;
    json j = {{"kind", std::string(move_kind(m))}};
    std::visit(
        [&](const auto& mv) {
            using M = std::decay_t<decltype(mv)>;
            if constexpr (std::is_same_v<M, MinMove>) {
                j["path"] = path_json(mv.parent);
            } else if constexpr (std::is_same_v<M, MaxMove>) {
                j["path"] = path_json(mv.leaf);
            } else if constexpr (std::is_same_v<M, Saddle1Move>) {
                j["op"] = mv.op == SaddleOp::Join ? "join" : "split";
                if (mv.op == SaddleOp::Join) {
                    j["paths"] = json::array({path_json(mv.first), path_json(mv.second)});
                } else {
                    j["path"] = path_json(mv.first);
                    j["children"] = path_json(mv.moved_children);
                }
            } else if constexpr (std::is_same_v<M, Saddle2Move>) {
                j["op"] = mv.op == SaddleOp::Join ? "join" : "split";
                if (mv.op == SaddleOp::Join) j["path"] = path_json(mv.node);
            } else if constexpr (std::is_same_v<M, Saddle3Move>) {
                j["path"] = path_json(mv.node);
            } else if constexpr (std::is_same_v<M, Saddle5Move>) {
                j["slope"] = slope_json(mv.slope);
            }
        },
        m);
    return j;
}

inline json trace_json(const sweep::SweepTrace& t) {
    json moves = json::array();
    for (const auto& m : t.moves) moves.push_back(move_json(m));
    return {{"filling", filling_json(t.filling)}, {"initial", pattern_json(t.initial)}, {"moves", moves}};
}

inline json report_json(const sweep::TraceReport& r, const sweep::SweepContext& ctx) {
    json steps = json::array();
    for (const sweep::StepReport& s : r.steps) {
        json js = {{"index", s.index}, {"kind", std::string(s.kind)}, {"legal", s.legal}};
        if (s.legal) {
            js["label"] = std::string(sweep::label_name(s.label));
            js["essential_slope"] = slope_json(s.pattern->essential_slope());
            js["essential_count"] = s.pattern->essential_count();
            js["forest_size"] = sweep::forest_size(s.pattern->forest());
        } else {
            js["error"] = s.error;
        }
        steps.push_back(std::move(js));
    }
    json j = {{"filling", filling_json(ctx.filling())},
              {"generator", std::string(ctx.generator().name())},
              {"initial_label", std::string(sweep::label_name(r.initial_label))},
              {"steps", steps},
              {"verdict", std::string(sweep::trace_verdict_name(r.verdict))}};
    if (r.failed_step) j["failed_step"] = *r.failed_step;
    return j;
}

inline json surface_json(const SurfaceGenus& sg, const FillingSpec& f) {
    return {{"tag", std::string(tag_name(sg.surface.tag))},
            {"boundary_slope_K", slope_json(sg.surface.boundary_slope_K)},
            {"boundary_slope_T", vec_json(filling_basis(f).apply(sg.surface.boundary_slope_K.vec()))},
            {"completion_crosscaps", sg.genus.completion.crosscaps},
            {"crosscaps", sg.genus.crosscaps},
            {"genus", sg.genus.genus}};
}

inline json classification_json(const ClassificationResult& r) {
    json surfaces = json::array(), genera = json::array(), classes = json::array();
    for (const auto& sg : r.surfaces) {
        surfaces.push_back(surface_json(sg, r.filling));
        genera.push_back(sg.genus.genus);
    }
    for (SurfaceTag t : r.minimal_classes) classes.push_back(std::string(tag_name(t)));
    return {{"filling", filling_json(r.filling)},
            {"surfaces", surfaces},
            {"genera", genera},
            {"minimal_genus", r.minimal_genus},
            {"minimal_classes", classes},
            {"verdict", std::string(verdict_name(r.verdict))},
            {"note", r.note}};
}

/// Envelope shared by every CLI command.
inline json output_record(const std::string& command, json payload) {
    return {{"schema_version", "1"}, {"command", command}, {"payload", std::move(payload)}};
}

} // namespace onesided::json_io
