#include "gapsmith/structure.hpp"

#include <algorithm>

namespace gapsmith {

const char* to_string(Direction d) { return d == Direction::Right ? "right" : "left"; }

const char* to_string(CaseTag t) {
    switch (t) {
        case CaseTag::A1: return "A1";
        case CaseTag::B111: return "B111";
        case CaseTag::B112: return "B112";
        case CaseTag::B113: return "B113";
        case CaseTag::B12: return "B12";
        case CaseTag::A2: return "A2";
        case CaseTag::B211: return "B211";
        case CaseTag::B212: return "B212";
        case CaseTag::B22: return "B22";
    }
    return "?";
}

Rational CellMap::at(const Rational& t) const {
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const auto& [t0, v0] = knots[i];
        const auto& [t1, v1] = knots[i + 1];
        if (t < t0 || t > t1) continue;
        if (t0 == t1) return v0;
        return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
    }
    throw Error(ErrorKind::OutOfDomain, "cell coordinate " + t.str() + " outside [0, 1]");
}

namespace {

struct Rule {
    CaseTag tag;
    std::optional<std::pair<Rational, Rational>> arc;  // local; empty when free
    std::optional<Component> forbidden;                // local, in the next cell
    bool through_singleton = true;                     // next map passes through (s, c)
};

// Where the collapse value is forced in the neighbouring cell, given the
// singleton s of this cell's arc [x, y] and whether this cell accumulates at
// the arc ends. A forced region of length zero imposes nothing further.
Rule classify(Direction dir, const Rational& x, const Rational& y, const std::optional<Rational>& s, bool tl,
              bool tr) {
    Rule r{CaseTag::A1, std::nullopt, std::nullopt, true};
    if (dir == Direction::Right) {
        if (tl && tr) {
            r = {CaseTag::A1, std::pair{x, y}, std::nullopt, true};
            if (s) r.forbidden = Component::interval(*s, y, false, true);
        } else if (!s) {
            r.tag = CaseTag::B12;
        } else if (tr) {
            r = {CaseTag::B111, std::nullopt, Component::interval(*s, y, false, true), false};
        } else if (tl) {
            r = {CaseTag::B112, std::pair{x, *s}, std::nullopt, true};
        } else {
            r.tag = CaseTag::B113;
        }
    } else {
        if (tl && tr) {
            r = {CaseTag::A2, std::pair{x, y}, std::nullopt, true};
            if (s) r.forbidden = Component::interval(x, *s, true, false);
        } else if (!s) {
            r.tag = CaseTag::B22;
        } else if (tl) {
            r = {CaseTag::B211, std::nullopt, Component::interval(x, *s, true, false), false};
        } else if (tr) {
            r = {CaseTag::B212, std::pair{*s, y}, std::nullopt, true};
        } else {
            r.tag = CaseTag::B212;
        }
    }
    if (r.arc && r.arc->first == r.arc->second) r.arc.reset();
    return r;
}

// Members of s inside the window, or nullopt when there are infinitely many.
std::optional<std::vector<Rational>> members(const PointSet& s, const Component& window) {
    std::vector<Rational> out;
    if (!window.well_formed()) return out;
    for (const auto& c : s.components()) {
        auto part = c.intersect(window);
        if (!part) continue;
        if (!part->is_point()) return std::nullopt;
        out.push_back(part->lo);
    }
    return out;
}

Component shifted(const Component& c, const Rational& by) {
    return Component::interval(c.lo + by, c.hi + by, c.lo_closed, c.hi_closed);
}

CellMap reinterpolate(const CellMap& phi, const Rational& e_l, const std::optional<Rational>& s, const Rational& c,
                      const Rational& e_r, bool free) {
    std::vector<std::pair<Rational, Rational>> knots;
    for (const auto& k : phi.knots)
        if (k.first < e_l) knots.push_back(k);
    knots.emplace_back(e_l, phi.at(e_l));
    if (s && *s != e_l && *s != e_r) knots.emplace_back(*s, c);
    if (e_r != e_l) knots.emplace_back(e_r, phi.at(e_r));
    for (const auto& k : phi.knots)
        if (k.first > e_r) knots.push_back(k);

    auto old_tag = [&](const Rational& mid) {
        for (std::size_t i = 0; i + 1 < phi.knots.size(); ++i)
            if (phi.knots[i].first <= mid && mid <= phi.knots[i + 1].first) return phi.tags[i];
        return PieceTag::Plain;
    };

    CellMap out;
    out.knots = knots;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const auto& [t0, v0] = knots[i];
        const auto& [t1, v1] = knots[i + 1];
        PieceTag tag;
        if (t1 <= e_l || t0 >= e_r) tag = old_tag((t0 + t1) / 2);
        else if (v0 == v1) tag = PieceTag::Lambda3;
        else if (!s) tag = PieceTag::ContractionC;
        else tag = t1 <= *s ? PieceTag::ContractionC1 : PieceTag::ContractionC2;
        if (free && tag == PieceTag::Lambda1) tag = PieceTag::Lambda2;
        out.tags.push_back(tag);
    }
    return out;
}

struct Frame {
    const PointSet& set;
    Rational anchor;
    Rational inf, sup;

    Rational cell_lo(long long k) const { return anchor + Rational(k); }
};

// Examines cell n (data P_n) against the incoming arc and forbidden region,
// then produces the map for the following cell.
struct ChainState {
    CellMap phi;
    Rational x, y;
    std::optional<Component> forbidden;
    bool free = false;
    CaseTag tag = CaseTag::A1;  // rule that produced this state
};

struct StepOutcome {
    StepReport report;
    std::optional<std::string> failure;
    ChainState next;
};

StepOutcome step(const Frame& f, Direction dir, long long k, const ChainState& st) {
    StepOutcome out;
    const Rational lo = f.cell_lo(k);
    StepReport& rep = out.report;
    rep.n = k < 0 ? -k : k;
    rep.window_lo = lo + st.x;
    rep.window_hi = lo + st.y;
    rep.in_span = rep.window_lo >= f.inf && rep.window_hi <= f.sup;

    if (st.forbidden) {
        auto hit = members(f.set, shifted(*st.forbidden, lo));
        if (!hit || !hit->empty()) {
            out.failure = "forbidden region occupied";
            return out;
        }
    }
    auto in_arc = members(f.set, Component::closed(rep.window_lo, rep.window_hi));
    if (!in_arc || in_arc->size() > 1) {
        out.failure = "singleton violation";
        return out;
    }
    std::optional<Rational> s;
    if (!in_arc->empty()) {
        s = in_arc->front() - lo;
        rep.singleton = in_arc->front();
    }

    Rational e_l = 0;
    if (auto p = f.set.closure_pred(rep.window_lo); p && *p > lo) e_l = *p - lo;
    Rational e_r = 1;
    if (auto q = f.set.closure_succ(rep.window_hi); q && *q < lo + 1) e_r = *q - lo;
    rep.tight_l = e_l == st.x;
    rep.tight_r = e_r == st.y;
    rep.gamma_l = st.x - e_l;
    rep.gamma_r = e_r - st.y;

    const Rule rule = classify(dir, st.x, st.y, s, rep.tight_l, rep.tight_r);
    rep.case_tag = rule.tag;
    rep.terminal = !rule.arc;
    const Rational c = st.phi.at(st.x);
    out.next.phi = reinterpolate(st.phi, e_l, rule.through_singleton ? s : std::nullopt, c, e_r, rep.terminal);
    out.next.free = rep.terminal;
    if (rule.arc) {
        out.next.x = rule.arc->first;
        out.next.y = rule.arc->second;
        rep.restart = out.next.x > st.x || out.next.y < st.y;
    }
    out.next.forbidden = rule.forbidden;
    out.next.tag = rule.tag;
    return out;
}

CaseTag retag(Direction dir, bool has_s, bool tl, bool tr) {
    const Rational zero = 0, one = 1;
    std::optional<Rational> s;
    if (has_s) s = Rational(1, 2);
    return classify(dir, zero, one, s, tl, tr).tag;
}

Direction flip(Direction d) { return d == Direction::Right ? Direction::Left : Direction::Right; }

// Maps a context computed in the mirrored frame back to original coordinates.
GapContext unmirror(GapContext ctx) {
    ctx.direction = flip(ctx.direction);
    for (auto& st : ctx.steps) {
        std::swap(st.window_lo, st.window_hi);
        st.window_lo = -st.window_lo;
        st.window_hi = -st.window_hi;
        if (st.singleton) st.singleton = -*st.singleton;
        std::swap(st.gamma_l, st.gamma_r);
        std::swap(st.tight_l, st.tight_r);
        st.case_tag = retag(ctx.direction, st.singleton.has_value(), st.tight_l, st.tight_r);
    }
    return ctx;
}

}  // namespace

Propagation propagate(const PointSet& s, const Gap& g) {
    if (!g.is_bad()) throw Error(ErrorKind::NotBad, "gap is not half-open");
    const auto all = gaps(s);
    if (std::find(all.begin(), all.end(), g) == all.end())
        throw Error(ErrorKind::NoSuchGap, "gap [" + g.lo.str() + ", " + g.hi.str() + "] not present");
    const Rational delta = g.length();
    if (delta >= 1) throw Error(ErrorKind::GapTooLong, "gap length " + delta.str() + " is at least 1");

    Propagation prop;
    prop.mirrored = g.kind == GapKind::OpenClosed;
    const PointSet frame_set = prop.mirrored ? s.mirror() : s;
    const Rational a = prop.mirrored ? -g.hi : g.lo;
    const Rational b = prop.mirrored ? -g.lo : g.hi;

    const Rational alpha = (Rational(1) - delta) / 2;
    const Rational beta = (Rational(1) + delta) / 2;
    const Frame f{frame_set, b - beta, frame_set.inf(), frame_set.sup()};
    prop.anchor = f.anchor;
    prop.k_min = (f.inf - f.anchor - 1).ceil().convert_to<long long>();
    prop.k_max = (f.sup - f.anchor).floor().convert_to<long long>();
    prop.cells.resize(static_cast<std::size_t>(prop.k_max - prop.k_min + 1));

    const Rational c = alpha / (Rational(1) - delta);
    CellMap phi0;
    phi0.knots = {{Rational(0), Rational(0)}, {alpha, c}, {beta, c}, {Rational(1), Rational(1)}};
    phi0.tags = {PieceTag::Lambda1, PieceTag::Lambda3, PieceTag::Lambda1};
    prop.cells[static_cast<std::size_t>(-prop.k_min)] = phi0;

    Rational e_r = 1;
    if (auto q = frame_set.closure_succ(b); q && *q < f.anchor + 1) e_r = *q - f.anchor;
    const bool tight_r0 = e_r == beta;

    auto run = [&](Direction dir) {
        GapContext ctx;
        ctx.direction = dir;
        const Rule first = classify(dir, alpha, beta, beta, true, tight_r0);
        ChainState st;
        st.phi = reinterpolate(phi0, alpha, first.through_singleton ? std::optional<Rational>(beta) : std::nullopt, c,
                               e_r, !first.arc);
        st.free = !first.arc;
        if (first.arc) {
            st.x = first.arc->first;
            st.y = first.arc->second;
        }
        st.forbidden = first.forbidden;
        st.tag = first.tag;
        const long long stride = dir == Direction::Right ? 1 : -1;
        const long long last = dir == Direction::Right ? prop.k_max : prop.k_min;
        for (long long k = stride; stride * k <= stride * last; k += stride) {
            prop.cells[static_cast<std::size_t>(k - prop.k_min)] = st.phi;
            if (ctx.failure) continue;
            if (st.free) {
                // A chain that stops may still leave a region that must be empty.
                if (st.forbidden) {
                    const Component region = shifted(*st.forbidden, f.cell_lo(k));
                    auto hit = members(frame_set, region);
                    if (!hit || !hit->empty()) {
                        StepReport rep;
                        rep.n = stride * k;
                        rep.case_tag = st.tag;
                        rep.window_lo = region.lo;
                        rep.window_hi = region.hi;
                        rep.in_span = true;
                        rep.terminal = true;
                        ctx.steps.push_back(rep);
                        ctx.failure = StepFailure{rep.n, "forbidden region occupied"};
                    }
                    st.forbidden.reset();
                }
                continue;
            }
            StepOutcome o = step(f, dir, k, st);
            if (o.failure) {
                o.report.in_span = true;
                ctx.failure = StepFailure{o.report.n, *o.failure};
                ctx.steps.push_back(o.report);
                continue;
            }
            ctx.steps.push_back(o.report);
            st = std::move(o.next);
        }
        return ctx;
    };

    GapContext right = run(Direction::Right);
    GapContext left = run(Direction::Left);
    if (prop.mirrored) {
        std::swap(right, left);
        right = unmirror(std::move(right));
        left = unmirror(std::move(left));
    }
    for (GapContext* ctx : {&right, &left}) {
        ctx->gap = g;
        ctx->r = g.kind == GapKind::ClosedOpen ? g.lo : g.hi;
        ctx->ua = g.kind == GapKind::ClosedOpen ? g.hi : g.lo;
    }
    prop.analysis = {std::move(right), std::move(left)};
    return prop;
}

GapAnalysis analyze_gap(const PointSet& s, const Gap& g) { return propagate(s, g).analysis; }

StructureReport check_all(const PointSet& s) {
    StructureReport report;
    for (const auto& g : bad_gaps_by_size(s)) {
        if (g.length() >= 1) {
            if (!report.failure) report.failure = StructureFailure{g, Direction::Right, 0, "gap length >= 1"};
            continue;
        }
        GapAnalysis a = analyze_gap(s, g);
        if (!report.failure) {
            for (const GapContext* ctx : {&a.right, &a.left})
                if (!report.failure && ctx->failure)
                    report.failure = StructureFailure{g, ctx->direction, ctx->failure->n, ctx->failure->reason};
        }
        report.per_gap.push_back(std::move(a));
    }
    return report;
}

}  // namespace gapsmith
