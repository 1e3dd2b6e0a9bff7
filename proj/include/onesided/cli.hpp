// Copyright 2026 The onesided Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "onesided/classifier.hpp"
#include "onesided/error.hpp"
#include "onesided/genus.hpp"
#include "onesided/json_io.hpp"
#include "onesided/slope.hpp"
#include "onesided/sweepout.hpp"

namespace onesided::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

struct Style {
    bool color = false;
    std::string bold(const std::string& s) const { return color ? "\033[1m" + s + "\033[0m" : s; }
    std::string good(const std::string& s) const { return color ? "\033[32m" + s + "\033[0m" : s; }
    std::string bad(const std::string& s) const { return color ? "\033[31m" + s + "\033[0m" : s; }
};

namespace detail {

using json_io::json;

inline void emit_json(std::ostream& out, const std::string& command, json payload) {
    out << json_io::output_record(command, std::move(payload)).dump(2) << "\n";
}

inline std::string vec_str(Vec2 v) { return "(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")"; }

inline std::string join_tags(const std::vector<SurfaceTag>& tags, const char* sep) {
    std::string s;
    for (SurfaceTag t : tags) s += (s.empty() ? "" : sep) + std::string(tag_name(t));
    return s;
}

/// Parses "0,1", "4,1", "4,-1" or a tag name.
inline SurfaceSpec parse_surface(const std::string& text) {
    if (auto tag = parse_tag(text)) return SurfaceSpec::of(*tag);
    const auto comma = text.find(',');
    if (comma != std::string::npos) {
        try {
            const Slope s = Slope::make(std::stoll(text.substr(0, comma)), std::stoll(text.substr(comma + 1)));
            if (auto spec = SurfaceSpec::from_slope(s)) return *spec;
        } catch (const std::logic_error&) {
        }
    }
    throw CLI::ValidationError("--surface", "expected one of 0,1 | 4,1 | 4,-1 (or K01, K41, K4m1), got '" + text + "'");
}

inline void print_classification(std::ostream& out, const ClassificationResult& r, const Style& st) {
    const UnimodularMap m = filling_basis(r.filling);
    out << "filling " << r.filling.str() << "  |2p/q| " << (r.verdict == Verdict::TwoMinimal ? "< 3" : "> 3") << "\n";
    out << std::left << std::setw(9) << "surface" << std::setw(10) << "slope_K" << std::setw(12) << "slope_T"
        << std::setw(11) << "completion" << std::setw(10) << "crosscaps" << "genus\n";
    for (const SurfaceGenus& sg : r.surfaces) {
        out << std::left << std::setw(9) << tag_name(sg.surface.tag) << std::setw(10)
            << sg.surface.boundary_slope_K.str() << std::setw(12)
            << vec_str(m.apply(sg.surface.boundary_slope_K.vec())) << std::setw(11) << sg.genus.completion.crosscaps
            << std::setw(10) << sg.genus.crosscaps << sg.genus.genus << "\n";
    }
    out << "verdict: " << st.bold(std::string(verdict_name(r.verdict))) << "  minimal genus " << r.minimal_genus
        << ": " << join_tags(r.minimal_classes, ", ") << "\n";
    out << "note: " << r.note << "\n";
}

inline std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open trace file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace detail

/// Runs one CLI invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, Style style = {}) {
    using detail::json;

    CLI::App app{"Classify one-sided Heegaard splittings of even fillings of Figure-8 knot space", "onesided"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit one JSON document on stdout");

    Int two_p = 0, q = 0;

    auto* classify_cmd = app.add_subcommand("classify", "classify the minimal genus splittings of a (2p,q) filling");
    classify_cmd->add_option("two_p", two_p, "first filling coordinate (even)")->required();
    classify_cmd->add_option("q", q, "second filling coordinate")->required();

    std::string surface_text;
    auto* genus_cmd = app.add_subcommand("genus", "splitting genus of one surface's closure");
    genus_cmd->add_option("two_p", two_p, "first filling coordinate (even)")->required();
    genus_cmd->add_option("q", q, "second filling coordinate")->required();
    genus_cmd->add_option("--surface", surface_text, "0,1 | 4,1 | 4,-1")->required();

    bool relaxed = false;
    auto* basis_cmd = app.add_subcommand("basis", "knot-to-torus change of basis for a filling");
    basis_cmd->add_option("two_p", two_p, "first filling coordinate (even)")->required();
    basis_cmd->add_option("q", q, "second filling coordinate")->required();
    basis_cmd->add_flag("--relaxed", relaxed, "only require (2p,q) primitive");

    Int max_two_p = 0;
    bool tsv = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "classify every admissible filling up to a bound");
    enum_cmd->add_option("--max", max_two_p, "largest |2p|")->required();
    enum_cmd->add_flag("--tsv", tsv, "tab-separated output with a header row");

    std::string trace_path;
    std::string generator_name = "meridian-twist";
    auto* sweep_cmd = app.add_subcommand("sweep", "sweep-out trace tools");
    sweep_cmd->require_subcommand(1);
    auto* verify_cmd = sweep_cmd->add_subcommand("verify", "check label invariance along a trace file");
    verify_cmd->add_option("trace", trace_path, "trace JSON file ('-' for stdin)")->required();
    verify_cmd->add_option("--generator", generator_name, "slope action used by saddle5 moves")
        ->check(CLI::IsMember({"meridian-twist", "descent"}));

    for (CLI::App* sub : {classify_cmd, genus_cmd, basis_cmd, enum_cmd, sweep_cmd, verify_cmd}) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "USAGE: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*classify_cmd) {
            const ClassificationResult r = classify(validate_filling(two_p, q));
            if (as_json) {
                detail::emit_json(out, "classify", json_io::classification_json(r));
            } else {
                detail::print_classification(out, r, style);
            }
        } else if (*genus_cmd) {
            SurfaceSpec s = SurfaceSpec::of(SurfaceTag::K01);
            try {
                s = detail::parse_surface(surface_text);
            } catch (const CLI::ValidationError& e) {
                err << "USAGE: " << e.what() << "\n";
                return kExitUsage;
            }
            const FillingSpec f = validate_filling(two_p, q);
            const ClosedGenus g = closed_genus(s, f);
            if (as_json) {
                json payload = json_io::surface_json({s, g}, f);
                payload["filling"] = json_io::filling_json(f);
                detail::emit_json(out, "genus", std::move(payload));
            } else {
                out << g.genus << "\n";
            }
        } else if (*basis_cmd) {
            if (two_p % 2 != 0) {
                throw Error(ErrorCode::OddFirstCoordinate, "filling first coordinate " + std::to_string(two_p) + " is odd");
            }
            const FillingSpec f = relaxed ? FillingSpec::relaxed(two_p / 2, q) : validate_filling(two_p, q);
            const UnimodularMap m = filling_basis(f);
            if (as_json) {
                json images = json::array();
                for (SurfaceTag t : kAllSurfaces) {
                    const SurfaceSpec s = SurfaceSpec::of(t);
                    images.push_back({{"tag", std::string(tag_name(t))},
                                      {"knot", json_io::slope_json(s.boundary_slope_K)},
                                      {"torus", json_io::vec_json(m.apply(s.boundary_slope_K.vec()))},
                                      {"intersection", intersection_number(s.boundary_slope_K, f.slope())}});
                }
                detail::emit_json(out, "basis",
                                  {{"filling", json_io::filling_json(f)},
                                   {"relaxed", relaxed},
                                   {"matrix", json::array({json::array({m.m11(), m.m12()}),
                                                           json::array({m.m21(), m.m22()})})},
                                   {"determinant", m.determinant()},
                                   {"filling_image", json_io::vec_json(m.apply(f.slope().vec()))},
                                   {"images", images}});
            } else {
                out << "filling " << f.str() << (relaxed ? " (relaxed)" : "") << "\n";
                out << "M = [[" << m.m11() << ", " << m.m12() << "], [" << m.m21() << ", " << m.m22()
                    << "]]  det " << m.determinant() << "\n";
                out << "M" << f.str() << " = " << detail::vec_str(m.apply(f.slope().vec())) << "\n";
                for (SurfaceTag t : kAllSurfaces) {
                    const SurfaceSpec s = SurfaceSpec::of(t);
                    out << std::left << std::setw(5) << tag_name(t) << s.boundary_slope_K.str() << "_K -> "
                        << detail::vec_str(m.apply(s.boundary_slope_K.vec())) << "_T\n";
                }
            }
        } else if (*enum_cmd) {
            const auto rows = enumerate(max_two_p);
            if (as_json) {
                json arr = json::array();
                for (const auto& r : rows) {
                    json genera = json::array(), classes = json::array();
                    for (const auto& sg : r.surfaces) genera.push_back(sg.genus.genus);
                    for (SurfaceTag t : r.minimal_classes) classes.push_back(std::string(tag_name(t)));
                    arr.push_back({{"two_p", r.filling.two_p()},
                                   {"q", r.filling.q()},
                                   {"genera", genera},
                                   {"verdict", std::string(verdict_name(r.verdict))},
                                   {"minimal_classes", classes}});
                }
                detail::emit_json(out, "enumerate", {{"max", max_two_p}, {"count", rows.size()}, {"rows", arr}});
            } else if (tsv) {
                out << "two_p\tq\tg_K01\tg_K41\tg_K4m1\tverdict\tminimal_classes\n";
                for (const auto& r : rows) {
                    out << r.filling.two_p() << "\t" << r.filling.q();
                    for (const auto& sg : r.surfaces) out << "\t" << sg.genus.genus;
                    out << "\t" << verdict_name(r.verdict) << "\t" << detail::join_tags(r.minimal_classes, ",") << "\n";
                }
            } else {
                out << std::left << std::setw(8) << "2p" << std::setw(6) << "q" << std::setw(6) << "K01"
                    << std::setw(6) << "K41" << std::setw(6) << "K4m1" << std::setw(15) << "verdict" << "minimal\n";
                for (const auto& r : rows) {
                    out << std::left << std::setw(8) << r.filling.two_p() << std::setw(6) << r.filling.q();
                    for (const auto& sg : r.surfaces) out << std::setw(6) << sg.genus.genus;
                    out << std::setw(15) << verdict_name(r.verdict) << detail::join_tags(r.minimal_classes, ",")
                        << "\n";
                }
            }
        } else if (*verify_cmd) {
            const sweep::SweepTrace trace = json_io::parse_trace_text(detail::read_file(trace_path));
            std::shared_ptr<const sweep::MobiusGenerator> gen = sweep::default_generator();
            if (generator_name == "descent") gen = std::make_shared<const sweep::DescentGenerator>();
            const sweep::SweepContext ctx(trace.filling, gen);
            const sweep::TraceReport report = sweep::verify_trace(trace, ctx);
            if (as_json) {
                detail::emit_json(out, "sweep verify", json_io::report_json(report, ctx));
            } else {
                out << "filling " << ctx.filling().str() << "  generator " << ctx.generator().name()
                    << "  initial label " << sweep::label_name(report.initial_label) << "\n";
                for (const auto& s : report.steps) {
                    out << std::right << std::setw(5) << s.index << "  " << std::left << std::setw(8) << s.kind;
                    if (s.legal) {
                        out << s.pattern->essential_slope().str() << " x" << s.pattern->essential_count() << "  forest "
                            << sweep::forest_size(s.pattern->forest()) << "  label " << sweep::label_name(s.label)
                            << "\n";
                    } else {
                        out << style.bad("illegal") << ": " << s.error << "\n";
                    }
                }
                const std::string v(sweep::trace_verdict_name(report.verdict));
                out << "verdict: "
                    << (report.verdict == sweep::TraceVerdict::LabelConstant ? style.good(v) : style.bad(v));
                if (report.failed_step) out << " at step " << *report.failed_step;
                out << "\n";
            }
            if (report.verdict == sweep::TraceVerdict::LabelChanged) {
                err << "LABEL_CHANGED: label changed at step " << *report.failed_step << "\n";
                return kExitDomain;
            }
            if (report.verdict == sweep::TraceVerdict::IllegalMove) {
                err << "ILLEGAL_MOVE: step " << *report.failed_step << ": " << report.steps.back().error << "\n";
                return kExitDomain;
            }
        }
    } catch (const Error& e) {
        err << code_name(e.code()) << ": " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}

/// Style for a real terminal: color only on a tty with NO_COLOR unset.
inline Style terminal_style(bool stdout_is_tty) {
    const char* no_color = std::getenv("NO_COLOR");
    return Style{stdout_is_tty && (no_color == nullptr || *no_color == '\0')};
}

} // namespace onesided::cli
