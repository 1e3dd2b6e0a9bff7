// Copyright 2026 The onesided Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "onesided/checked.hpp"
#include "onesided/error.hpp"
#include "onesided/genus.hpp"
#include "onesided/slope.hpp"

// Combinatorial model of a one-sided surface sweeping across the filling
// torus: which curves the surface image cuts on the torus, how critical
// points of the sweep change them, and which boundary incompressible surface
// of the knot space each region compresses to.

namespace onesided::sweep {

// ---------------------------------------------------------------------------
// Inessential curve forest
// ---------------------------------------------------------------------------

/// One inessential curve on the torus; children are the curves nested inside
/// the disc it bounds. Sibling order carries no meaning.
struct CurveNode {
    std::vector<CurveNode> children;
};

using Forest = std::vector<CurveNode>;

/// Index path into a forest: {i} is the i-th root, {i, j} its j-th child.
using Path = std::vector<std::size_t>;

inline std::string path_str(const Path& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
}

/// Canonical bracket encoding, invariant under sibling permutation.
inline std::string canonical_shape(const Forest& forest) {
    std::vector<std::string> parts;
    parts.reserve(forest.size());
    for (const CurveNode& n : forest) parts.push_back("(" + canonical_shape(n.children) + ")");
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& s : parts) out += s;
    return out;
}

inline std::size_t forest_size(const Forest& forest) {
    std::size_t n = 0;
    for (const CurveNode& c : forest) n += 1 + forest_size(c.children);
    return n;
}

inline std::size_t forest_depth(const Forest& forest) {
    std::size_t d = 0;
    for (const CurveNode& c : forest) d = std::max(d, 1 + forest_depth(c.children));
    return d;
}

/// Paths of every node, preorder.
inline void collect_paths(const Forest& forest, Path& prefix, std::vector<Path>& out, bool leaves_only) {
    for (std::size_t i = 0; i < forest.size(); ++i) {
        prefix.push_back(i);
        if (!leaves_only || forest[i].children.empty()) out.push_back(prefix);
        collect_paths(forest[i].children, prefix, out, leaves_only);
        prefix.pop_back();
    }
}

inline std::vector<Path> node_paths(const Forest& forest) {
    std::vector<Path> out;
    Path prefix;
    collect_paths(forest, prefix, out, false);
    return out;
}

inline std::vector<Path> leaf_paths(const Forest& forest) {
    std::vector<Path> out;
    Path prefix;
    collect_paths(forest, prefix, out, true);
    return out;
}

// ---------------------------------------------------------------------------
// TorusPattern
// ---------------------------------------------------------------------------

/// Intersection pattern of the surface image with the filling torus, in
/// T-coordinates. All essential curves on a torus are parallel, so one slope
/// and a count describe them.
///
/// Invariants: the essential count is odd (the surface is dual to the
/// filling core, so it meets the torus in an odd number of nontrivial
/// curves); the slope is not the meridian (it would bound a disc); the slope
/// meets the meridian an even number of times (an odd number of parallel
/// copies must be Z2-null in the solid torus).
class TorusPattern {
public:
    static TorusPattern make(Slope essential_slope, Int essential_count, Forest forest = {}) {
        check(essential_slope, essential_count);
        return TorusPattern(essential_slope, essential_count, std::move(forest));
    }

    const Slope& essential_slope() const noexcept { return slope_; }
    Int essential_count() const noexcept { return count_; }
    const Forest& forest() const noexcept { return forest_; }
    std::string shape() const { return canonical_shape(forest_); }

    friend bool operator==(const TorusPattern& x, const TorusPattern& y) {
        return x.slope_ == y.slope_ && x.count_ == y.count_ && x.shape() == y.shape();
    }

    // Mutators used by moves; they re-check the invariants they can break.
    Forest& mutable_forest() noexcept { return forest_; }
    void set_essential(Slope s, Int count) {
        check(s, count);
        slope_ = s;
        count_ = count;
    }

private:
    TorusPattern(Slope s, Int count, Forest forest) : slope_(s), count_(count), forest_(std::move(forest)) {}

    static void check(const Slope& s, Int count) {
        if (count <= 0 || count % 2 == 0) {
            throw Error(ErrorCode::InvalidPattern,
                        "essential curve count " + std::to_string(count) + " must be odd and positive");
        }
        if (s == kMeridian) throw Error(ErrorCode::InvalidPattern, "essential slope cannot be the meridian (0,1)");
        if (s.a() % 2 != 0) {
            throw Error(ErrorCode::InvalidPattern,
                        "essential slope " + s.str() + " meets the meridian an odd number of times");
        }
    }

    Slope slope_;
    Int count_;
    Forest forest_;
};

// ---------------------------------------------------------------------------
// Critical moves
// ---------------------------------------------------------------------------

enum class SaddleOp { Join, Split };

/// Minimum: a new childless inessential curve inside `parent` ({} = on the torus).
struct MinMove {
    Path parent;
};
/// Maximum: a childless inessential curve disappears.
struct MaxMove {
    Path leaf;
};
/// Saddle 1: two sibling inessential curves join, or one splits in two.
/// For a split, `moved_children` of `first` go to the new sibling.
struct Saddle1Move {
    SaddleOp op;
    Path first;
    Path second;
    std::vector<std::size_t> moved_children;
};
/// Saddle 2: a root-level inessential curve joins the essential family,
/// or a new one splits off it.
struct Saddle2Move {
    SaddleOp op;
    Path node;
};
/// Saddle 3: a root-level childless inessential curve becomes two essential curves.
struct Saddle3Move {
    Path node;
};
/// Saddle 4: two parallel essential curves join into one inessential curve.
struct Saddle4Move {};
/// Saddle 5: the single essential curve changes slope.
struct Saddle5Move {
    Slope slope;
};

using CriticalMove = std::variant<MinMove, MaxMove, Saddle1Move, Saddle2Move, Saddle3Move, Saddle4Move, Saddle5Move>;

inline std::string_view move_kind(const CriticalMove& m) {
    static constexpr std::array<std::string_view, 7> names = {"min",     "max",     "saddle1", "saddle2",
                                                              "saddle3", "saddle4", "saddle5"};
    return names[m.index()];
}

// ---------------------------------------------------------------------------
// Möbius-compression slope action
// ---------------------------------------------------------------------------

/// Slope update of a saddle5 move, as a configurable action on T-slopes.
class MobiusGenerator {
public:
    virtual ~MobiusGenerator() = default;

    virtual std::string_view name() const = 0;

    /// `times` applications (negative = inverse, if invertible).
    virtual Slope apply(const Slope& s, Int times) const = 0;

    virtual bool invertible() const = 0;

    /// Orbit element minimizing (|a|, then |b|); a complete orbit invariant.
    virtual Slope reduced(const Slope& s) const = 0;

    /// Whether a saddle5 move may take `from` to `to`.
    virtual bool related(const Slope& from, const Slope& to) const { return reduced(from) == reduced(to); }

    /// One rewriting step from `from` toward `to` in the same orbit.
    virtual Slope step_toward(const Slope& /*from*/, const Slope& to) const { return to; }
};

/// Twist along the filling meridian, (a, b) -> (a, b + a). A self-map of the
/// solid torus, so it preserves meridian crossings and completion genus.
class MeridianTwist final : public MobiusGenerator {
public:
    std::string_view name() const override { return "meridian-twist"; }

    Slope apply(const Slope& s, Int times) const override {
        return Slope::make(s.a(), checked::add(s.b(), checked::mul(times, s.a())));
    }

    bool invertible() const override { return true; }

    Slope reduced(const Slope& s) const override {
        const Vec2 v = s.with_positive_a();
        if (v.a == 0) return s;
        Int b = checked::mod(v.b, v.a);  // [0, a)
        if (2 * b > v.a) b -= v.a;       // (-a/2, a/2]
        return Slope::make(v.a, b);
    }

    Slope step_toward(const Slope& from, const Slope& to) const override {
        const Vec2 f = from.with_positive_a();
        const Vec2 t = to.with_positive_a();
        // Twisting adds a to b in the positive-a representative regardless of
        // the stored sign.
        if (f.a != t.a || f.a == 0 || f.b == t.b || (t.b - f.b) % f.a != 0) return to;
        return apply(from, t.b > f.b ? 1 : -1);
    }
};

/// One Bredon–Wood boundary compression of the solid-torus completion,
/// (n, m) -> (2j - n, 2x - m) with j m - x n = 1, 0 < j < n. Lowers the
/// completion genus by one; every slope descends to (2, +-1), so this action
/// does not separate the canonical slopes and is rejected by
/// `generator_separates`.
class DescentGenerator final : public MobiusGenerator {
public:
    std::string_view name() const override { return "descent"; }

    static Slope descend(const Slope& s) {
        const Vec2 v = s.with_positive_a();
        if (v.a <= 2) return s;
        const Int n = v.a, m = v.b;
        const Int j = checked::mod_inverse(checked::mod(m, n), n);
        const Int x = checked::sub(checked::mul(j, m), 1) / n;
        return Slope::make(checked::sub(checked::mul(2, j), n), checked::sub(checked::mul(2, x), m));
    }

    Slope apply(const Slope& s, Int times) const override {
        if (times < 0) throw Error(ErrorCode::IllegalMove, "descent generator is not invertible");
        Slope cur = s;
        for (Int i = 0; i < times && cur.with_positive_a().a > 2; ++i) cur = descend(cur);
        return cur;
    }

    bool invertible() const override { return false; }

    Slope reduced(const Slope& s) const override {
        Slope cur = s;
        for (int depth = 0; cur.with_positive_a().a > 2; ++depth) {
            if (depth > 4096) throw Error(ErrorCode::DepthExceeded, "descent of " + s.str() + " did not terminate");
            cur = descend(cur);
        }
        return cur;
    }
};

inline std::shared_ptr<const MobiusGenerator> default_generator() {
    static const auto gen = std::make_shared<const MeridianTwist>();
    return gen;
}

/// T-coordinate boundary slopes of K01, K41, K4m1 for a filling.
inline std::array<Slope, 3> canonical_torus_slopes(const FillingSpec& f) {
    const UnimodularMap m = filling_basis(f);
    return {m.apply(SurfaceSpec::of(SurfaceTag::K01).boundary_slope_K),
            m.apply(SurfaceSpec::of(SurfaceTag::K41).boundary_slope_K),
            m.apply(SurfaceSpec::of(SurfaceTag::K4m1).boundary_slope_K)};
}

/// True iff the three canonical slopes lie in pairwise distinct orbits.
inline bool generator_separates(const MobiusGenerator& gen, const FillingSpec& f) {
    const auto c = canonical_torus_slopes(f);
    const Slope r0 = gen.reduced(c[0]), r1 = gen.reduced(c[1]), r2 = gen.reduced(c[2]);
    return r0 != r1 && r0 != r2 && r1 != r2;
}

/// First admissible filling with |2p| <= max_two_p (q > 0) the generator
/// fails to separate, if any.
inline std::optional<FillingSpec> validate_generator(const MobiusGenerator& gen, Int max_two_p) {
    for (Int abs_p = 3; checked::mul(2, abs_p) <= max_two_p; ++abs_p) {
        for (Int p : {-abs_p, abs_p}) {
            for (Int q = 1; q < abs_p; q += 2) {
                if (checked::gcd(p, q) != 1) continue;
                const FillingSpec f = FillingSpec::admissible(p, q);
                if (!generator_separates(gen, f)) return f;
            }
        }
    }
    return std::nullopt;
}

/// Filling plus slope action; fixes the three canonical T-slopes.
class SweepContext {
public:
    explicit SweepContext(FillingSpec f, std::shared_ptr<const MobiusGenerator> gen = default_generator())
        : SweepContext(f, std::move(gen), true) {}

    /// Skips the orbit-separation check (test harnesses only).
    static SweepContext unchecked(FillingSpec f, std::shared_ptr<const MobiusGenerator> gen) {
        return SweepContext(f, std::move(gen), false);
    }

    const FillingSpec& filling() const noexcept { return filling_; }
    const MobiusGenerator& generator() const noexcept { return *generator_; }
    const std::array<Slope, 3>& canonical_slopes() const noexcept { return canonical_; }

private:
    SweepContext(FillingSpec f, std::shared_ptr<const MobiusGenerator> gen, bool validate)
        : filling_(f), generator_(std::move(gen)), canonical_(canonical_torus_slopes(f)) {
        if (validate && !generator_separates(*generator_, filling_)) {
            throw Error(ErrorCode::GeneratorRejected, "generator '" + std::string(generator_->name()) +
                                                          "' merges canonical slope orbits for filling " +
                                                          filling_.str());
        }
    }

    FillingSpec filling_;
    std::shared_ptr<const MobiusGenerator> generator_;
    std::array<Slope, 3> canonical_;
};

// ---------------------------------------------------------------------------
// apply_move
// ---------------------------------------------------------------------------

namespace detail {

[[noreturn]] inline void illegal(const std::string& clause) { throw Error(ErrorCode::IllegalMove, clause); }

inline Forest& container_of(Forest& forest, const Path& path) {
    Forest* cur = &forest;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (path[i] >= cur->size()) illegal("path " + path_str(path) + " does not address a node");
        cur = &(*cur)[path[i]].children;
    }
    return *cur;
}

inline CurveNode& node_at(Forest& forest, const Path& path) {
    if (path.empty()) illegal("empty path does not address a node");
    Forest& c = container_of(forest, path);
    if (path.back() >= c.size()) illegal("path " + path_str(path) + " does not address a node");
    return c[path.back()];
}

inline void require_root_childless(Forest& forest, const Path& path, std::string_view what) {
    CurveNode& n = node_at(forest, path);
    if (path.size() != 1) illegal(std::string(what) + " needs a root-level curve, got " + path_str(path));
    if (!n.children.empty()) illegal(std::string(what) + " needs a childless curve, " + path_str(path) + " has nested curves");
}

} // namespace detail

inline TorusPattern apply_move(const TorusPattern& p, const CriticalMove& move, const SweepContext& ctx) {
    using detail::illegal;
    TorusPattern out = p;
    Forest& forest = out.mutable_forest();

    std::visit(
        [&](const auto& m) {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, MinMove>) {
                if (m.parent.empty()) {
                    forest.emplace_back();
                } else {
                    detail::node_at(forest, m.parent).children.emplace_back();
                }
            } else if constexpr (std::is_same_v<M, MaxMove>) {
                CurveNode& n = detail::node_at(forest, m.leaf);
                if (!n.children.empty()) illegal("max removes only childless curves; " + path_str(m.leaf) + " has nested curves");
                Forest& c = detail::container_of(forest, m.leaf);
                c.erase(c.begin() + static_cast<std::ptrdiff_t>(m.leaf.back()));
            } else if constexpr (std::is_same_v<M, Saddle1Move>) {
                if (m.op == SaddleOp::Join) {
                    detail::node_at(forest, m.first);
                    detail::node_at(forest, m.second);
                    const bool siblings = m.first.size() == m.second.size() &&
                                          std::equal(m.first.begin(), m.first.end() - 1, m.second.begin()) &&
                                          m.first.back() != m.second.back();
                    if (!siblings) illegal("saddle1 join needs two distinct sibling curves");
                    Forest& c = detail::container_of(forest, m.first);
                    const std::size_t lo = std::min(m.first.back(), m.second.back());
                    const std::size_t hi = std::max(m.first.back(), m.second.back());
                    CurveNode merged = std::move(c[lo]);
                    for (CurveNode& ch : c[hi].children) merged.children.push_back(std::move(ch));
                    c.erase(c.begin() + static_cast<std::ptrdiff_t>(hi));
                    c[lo] = std::move(merged);
                } else {
                    CurveNode& n = detail::node_at(forest, m.first);
                    std::vector<std::size_t> moved = m.moved_children;
                    std::sort(moved.begin(), moved.end());
                    if (std::adjacent_find(moved.begin(), moved.end()) != moved.end() ||
                        (!moved.empty() && moved.back() >= n.children.size())) {
                        illegal("saddle1 split lists invalid nested curves for " + path_str(m.first));
                    }
                    CurveNode sibling;
                    for (auto it = moved.rbegin(); it != moved.rend(); ++it) {
                        sibling.children.push_back(std::move(n.children[*it]));
                        n.children.erase(n.children.begin() + static_cast<std::ptrdiff_t>(*it));
                    }
                    std::reverse(sibling.children.begin(), sibling.children.end());
                    Forest& c = detail::container_of(forest, m.first);
                    c.insert(c.begin() + static_cast<std::ptrdiff_t>(m.first.back() + 1), std::move(sibling));
                }
            } else if constexpr (std::is_same_v<M, Saddle2Move>) {
                if (out.essential_count() <= 0) illegal("saddle2 needs an essential curve");
                if (m.op == SaddleOp::Join) {
                    detail::node_at(forest, m.node);
                    if (m.node.size() != 1) illegal("saddle2 join needs a root-level curve, got " + path_str(m.node));
                    CurveNode absorbed = std::move(forest[m.node[0]]);
                    forest.erase(forest.begin() + static_cast<std::ptrdiff_t>(m.node[0]));
                    for (CurveNode& ch : absorbed.children) forest.push_back(std::move(ch));
                } else {
                    forest.emplace_back();
                }
            } else if constexpr (std::is_same_v<M, Saddle3Move>) {
                detail::require_root_childless(forest, m.node, "saddle3");
                forest.erase(forest.begin() + static_cast<std::ptrdiff_t>(m.node[0]));
                // New curves are parallel to the existing essential family.
                out.set_essential(out.essential_slope(), checked::add(out.essential_count(), 2));
            } else if constexpr (std::is_same_v<M, Saddle4Move>) {
                if (out.essential_count() < 2) illegal("saddle4 needs at least two parallel essential curves");
                out.set_essential(out.essential_slope(), out.essential_count() - 2);
                forest.emplace_back();
            } else if constexpr (std::is_same_v<M, Saddle5Move>) {
                if (out.essential_count() != 1) {
                    illegal("saddle5 needs a single essential curve, found " + std::to_string(out.essential_count()));
                }
                if (m.slope == kMeridian) illegal("saddle5 cannot produce the meridian slope");
                if (m.slope == out.essential_slope()) illegal("saddle5 must change the slope");
                if (m.slope.a() % 2 != 0) illegal("saddle5 target " + m.slope.str() + " has odd meridian crossings");
                if (!ctx.generator().related(out.essential_slope(), m.slope)) {
                    illegal("saddle5 target " + m.slope.str() + " is not in the Möbius orbit of " +
                            out.essential_slope().str());
                }
                out.set_essential(m.slope, 1);
            }
        },
        move);
    return out;
}

// ---------------------------------------------------------------------------
// Normal form and labels
// ---------------------------------------------------------------------------

/// Orbit representative: the canonical boundary slope the orbit contains,
/// else the minimal (|a|, |b|) element.
inline Slope slope_orbit_normalize(const Slope& s, const SweepContext& ctx) {
    if (s == kMeridian) throw Error(ErrorCode::MeridianSlope, "meridian slope has no Möbius orbit");
    const MobiusGenerator& gen = ctx.generator();
    const Slope r = gen.reduced(s);
    for (const Slope& c : ctx.canonical_slopes()) {
        if (gen.reduced(c) == r) return c;
    }
    return r;
}

/// Picks which of `n` available reductions to perform next; must return a
/// value in [0, n).
using ReductionChooser = std::function<std::size_t(std::size_t)>;

/// Boundary-incompressible normal form: every inessential curve removed by
/// disc compression (innermost first), essential curves cancelled in pairs by
/// annular compression down to one, slope moved to its orbit representative.
/// The result does not depend on the order reductions are applied in; the
/// chooser lets tests exercise arbitrary orders.
inline TorusPattern normal_form(const TorusPattern& p, const SweepContext& ctx,
                                const ReductionChooser& choose = {}) {
    const Slope target = slope_orbit_normalize(p.essential_slope(), ctx);
    Forest forest = p.forest();
    Slope slope = p.essential_slope();
    Int count = p.essential_count();

    struct Redex {
        enum Kind { Disc, Annulus, SlopeStep } kind;
        Path path;
    };
    std::vector<Redex> redexes;
    for (;;) {
        redexes.clear();
        for (Path& leaf : leaf_paths(forest)) redexes.push_back({Redex::Disc, std::move(leaf)});
        if (count >= 3) redexes.push_back({Redex::Annulus, {}});
        if (slope != target) redexes.push_back({Redex::SlopeStep, {}});
        if (redexes.empty()) break;

        const std::size_t pick = choose ? choose(redexes.size()) : 0;
        if (pick >= redexes.size()) throw Error(ErrorCode::InternalInconsistency, "reduction chooser out of range");
        const Redex& r = redexes[pick];
        switch (r.kind) {
            case Redex::Disc: {
                Forest& c = detail::container_of(forest, r.path);
                c.erase(c.begin() + static_cast<std::ptrdiff_t>(r.path.back()));
                break;
            }
            case Redex::Annulus: count -= 2; break;
            case Redex::SlopeStep: slope = ctx.generator().step_toward(slope, target); break;
        }
    }
    return TorusPattern::make(slope, count, std::move(forest));
}

enum class Label { K01, K41, K4m1, Unknown };

constexpr std::string_view label_name(Label l) {
    switch (l) {
        case Label::K01: return "K01";
        case Label::K41: return "K41";
        case Label::K4m1: return "K4m1";
        case Label::Unknown: return "Unknown";
    }
    return "?";
}

/// Which boundary incompressible surface the region compresses to.
inline Label label(const TorusPattern& p, const SweepContext& ctx) {
    const Slope s = normal_form(p, ctx).essential_slope();
    constexpr std::array<Label, 3> tags = {Label::K01, Label::K41, Label::K4m1};
    for (std::size_t i = 0; i < 3; ++i) {
        if (ctx.canonical_slopes()[i] == s) return tags[i];
    }
    return Label::Unknown;
}

// ---------------------------------------------------------------------------
// Trace verification
// ---------------------------------------------------------------------------

struct SweepTrace {
    FillingSpec filling;
    TorusPattern initial;
    std::vector<CriticalMove> moves;
};

enum class TraceVerdict { LabelConstant, LabelChanged, IllegalMove };

constexpr std::string_view trace_verdict_name(TraceVerdict v) {
    switch (v) {
        case TraceVerdict::LabelConstant: return "LabelConstant";
        case TraceVerdict::LabelChanged: return "LabelChanged";
        case TraceVerdict::IllegalMove: return "IllegalMove";
    }
    return "?";
}

struct StepReport {
    std::size_t index;
    std::string_view kind;
    bool legal;
    std::string error;                   // set when !legal
    std::optional<TorusPattern> pattern;  // state after the move, when legal
    Label label = Label::Unknown;
};

struct TraceReport {
    Label initial_label;
    std::vector<StepReport> steps;  // stops at the first failing step
    TraceVerdict verdict = TraceVerdict::LabelConstant;
    std::optional<std::size_t> failed_step;
};

/// Runs the moves in order, recording legality and the label after each.
/// A transition between two different known labels is LabelChanged; Unknown
/// labels in between are tolerated.
inline TraceReport verify_trace(const SweepTrace& trace, const SweepContext& ctx) {
    TraceReport report{label(trace.initial, ctx), {}, TraceVerdict::LabelConstant, std::nullopt};
    std::optional<Label> known;
    if (report.initial_label != Label::Unknown) known = report.initial_label;

    TorusPattern cur = trace.initial;
    for (std::size_t i = 0; i < trace.moves.size(); ++i) {
        StepReport step{i, move_kind(trace.moves[i]), true, {}, std::nullopt, Label::Unknown};
        try {
            cur = apply_move(cur, trace.moves[i], ctx);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::IllegalMove && e.code() != ErrorCode::InvalidPattern) throw;
            step.legal = false;
            step.error = e.what();
            report.steps.push_back(std::move(step));
            report.verdict = TraceVerdict::IllegalMove;
            report.failed_step = i;
            return report;
        }
        step.pattern = cur;
        step.label = label(cur, ctx);
        const Label l = step.label;
        report.steps.push_back(std::move(step));
        if (l == Label::Unknown) continue;
        if (known && *known != l) {
            report.verdict = TraceVerdict::LabelChanged;
            report.failed_step = i;
            return report;
        }
        known = l;
    }
    return report;
}

inline TraceReport verify_trace(const SweepTrace& trace) { return verify_trace(trace, SweepContext(trace.filling)); }

} // namespace onesided::sweep
