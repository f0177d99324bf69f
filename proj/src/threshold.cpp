#include "gapsmith/threshold.hpp"

#include <algorithm>
#include <map>

namespace gapsmith {

const char* to_string(Orientation o) { return o == Orientation::ClosedOpen ? "closed_open" : "open_closed"; }

namespace {

struct RawPiece {
    Rational lo, hi, slope, intercept;
    PieceTag tag;
};

PointSet hull(const PointSet& s) { return PointSet::normalize({Component::closed(s.inf(), s.sup())}); }

// Half-open pieces in increasing order, the last one closed.
std::vector<AffinePiece> tile(std::vector<RawPiece> raw, const Rational& inf, const Rational& sup) {
    std::sort(raw.begin(), raw.end(), [](const RawPiece& a, const RawPiece& b) { return a.lo < b.lo; });
    std::vector<AffinePiece> out;
    if (inf == sup) {
        for (const auto& r : raw)
            if (r.lo <= inf && inf <= r.hi)
                return {AffinePiece{Component::point(inf), r.slope, r.intercept, r.tag}};
    }
    for (const auto& r : raw) {
        if (r.lo >= r.hi) continue;
        out.push_back({Component::interval(r.lo, r.hi, true, r.hi == sup), r.slope, r.intercept, r.tag});
    }
    return out;
}

Rational sup_distance(const PLMap& m, const PointSet& s) {
    Rational best = 0;
    for (const auto& x : sample_points(s)) best = max(best, abs(apply(m, x) - x));
    return best;
}

Rational max_slope(const PLMap& m) {
    Rational best = 0;
    for (const auto& p : m.pieces()) best = max(best, p.slope);
    return best;
}

void certify(const PLMap& m, const PointSet& s, const char* what) {
    const auto pts = certificate_points(m, s);
    if (auto c = strictly_increasing_on_points(m, pts); !c)
        throw CertificateError(std::string(what) + ": not strictly increasing at (" + c.witness->first.str() + ", " +
                                   c.witness->second.str() + ")",
                               *c.witness);
    if (auto c = threshold_equiv_on_points(m, pts); !c)
        throw CertificateError(std::string(what) + ": threshold law broken at (" + c.witness->first.str() + ", " +
                                   c.witness->second.str() + ")",
                               *c.witness);
}

std::string describe(const GapAnalysis& a) {
    for (const GapContext* ctx : {&a.right, &a.left})
        if (ctx->failure)
            return std::string(to_string(ctx->direction)) + " step " + std::to_string(ctx->failure->n) + ": " +
                   ctx->failure->reason;
    return "ok";
}

}  // namespace

ThresholdPlan plan_gap(const PointSet& s, const Gap& g, const GapAnalysis& ctx) {
    if (!ctx.ok()) throw Error(ErrorKind::StructureViolated, describe(ctx));
    const Propagation prop = propagate(s, g);
    if (!prop.analysis.ok()) throw Error(ErrorKind::StructureViolated, describe(prop.analysis));

    ThresholdPlan plan;
    plan.gap = g;
    plan.orientation = g.kind == GapKind::ClosedOpen ? Orientation::ClosedOpen : Orientation::OpenClosed;
    plan.structure = prop.analysis;
    for (const GapContext* c : {&prop.analysis.right, &prop.analysis.left}) {
        std::size_t depth = 0;
        for (const auto& st : c->steps) {
            plan.gammas.emplace_back(st.gamma_l, st.gamma_r);
            if (st.in_span) ++depth;
            if (st.restart) ++plan.restarts;
        }
        (c == &prop.analysis.right ? plan.m : plan.m_prime) = depth;
    }

    const PointSet frame = prop.mirrored ? s.mirror() : s;
    const Rational inf = frame.inf(), sup = frame.sup();
    std::vector<RawPiece> raw;
    for (long long k = prop.k_min; k <= prop.k_max; ++k) {
        const Rational cell_lo = prop.anchor + Rational(k);
        const CellMap& phi = prop.cell(k);
        for (std::size_t i = 0; i + 1 < phi.knots.size(); ++i) {
            const auto& [t0, v0] = phi.knots[i];
            const auto& [t1, v1] = phi.knots[i + 1];
            if (t0 == t1) continue;
            const Rational lo = max(cell_lo + t0, inf), hi = min(cell_lo + t1, sup);
            if (lo > hi) continue;
            const Rational slope = (v1 - v0) / (t1 - t0);
            const Rational intercept = cell_lo + v0 - slope * (cell_lo + t0);
            raw.push_back({lo, hi, slope, intercept, phi.tags[i]});
        }
    }
    if (prop.mirrored) {
        for (auto& r : raw) {
            std::swap(r.lo, r.hi);
            r.lo = -r.lo;
            r.hi = -r.hi;
            r.intercept = -r.intercept;
        }
    }
    plan.pieces = tile(std::move(raw), s.inf(), s.sup());
    return plan;
}

Applied apply_plan(const PointSet& s, const ThresholdPlan& p) {
    PLMap map(p.pieces, hull(s));
    certify(map, s, "plan");
    if (apply(map, p.gap.lo) != apply(map, p.gap.hi))
        throw CertificateError("gap [" + p.gap.lo.str() + ", " + p.gap.hi.str() + "] not closed",
                               {p.gap.lo, p.gap.hi});
    PointSet img = image(map, s);
    return {std::move(map), std::move(img)};
}

namespace {

struct Pipeline {
    PointSet original;
    PointSet current;
    PLMap total;
    ScheduleTrace trace;

    explicit Pipeline(const PointSet& s) : original(s), current(s), total(PLMap::identity(hull(s))) {}

    void close(const Gap& g, std::optional<long long> interval) {
        const GapAnalysis ctx = analyze_gap(current, g);
        if (!ctx.ok())
            throw Error(ErrorKind::StructureViolated,
                        "gap [" + g.lo.str() + ", " + g.hi.str() + "] of the current image: " + describe(ctx));
        ThresholdPlan plan = plan_gap(current, g, ctx);
        Applied a = apply_plan(current, plan);
        ThresholdStep step{g, interval, std::move(plan), sup_distance(a.map, current), max_slope(a.map),
                           Rational(1) / (Rational(1) - g.length())};
        trace.sup_norm_ledger.push_back(step.sup_norm);
        trace.steps.push_back(std::move(step));
        total = compose(a.map, total);
        current = std::move(a.image);
    }

    ThresholdResult finish() {
        certify(total, original, "composite");
        trace.sup_norm_ledger.push_back(Rational(0));
        return {std::move(total), std::move(current), std::move(trace)};
    }
};

void require_structure(const PointSet& s) {
    const StructureReport rep = check_all(s);
    if (!rep.pass()) {
        const auto& f = *rep.failure;
        throw Error(ErrorKind::StructureViolated, "gap [" + f.gap.lo.str() + ", " + f.gap.hi.str() + "] " +
                                                      to_string(f.direction) + " step " + std::to_string(f.step) +
                                                      ": " + f.reason);
    }
}

// Pieces of bad gaps inside each unit interval; straddling gaps are split.
std::map<long long, std::vector<Rational>> deltas_by_interval(const PointSet& s, const UnitPartition& part) {
    std::map<long long, std::vector<Rational>> out;
    for (const auto& g : bad_gaps(s))
        for (const auto& cell : part.intervals) {
            const Rational lo = max(g.lo, cell.lo), hi = min(g.hi, cell.hi);
            if (lo < hi) out[cell.index].push_back(hi - lo);
        }
    for (auto& [k, v] : out) std::sort(v.begin(), v.end(), std::greater<>());
    return out;
}

}  // namespace

ThresholdResult remove_strong(const PointSet& s) {
    require_structure(s);
    Pipeline p(s);
    while (true) {
        const auto bad = bad_gaps_by_size(p.current);
        if (bad.empty()) break;
        p.close(bad.front(), std::nullopt);
    }
    return p.finish();
}

ThresholdResult remove_epsilon(const PointSet& s, const Rational& eps0) {
    if (eps0.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "eps0 must be positive");
    require_structure(s);
    Pipeline p(s);
    p.trace.eps0 = eps0;
    p.trace.eps1 = eps0 / 2;
    const auto bad = bad_gaps_by_size(s);
    if (bad.empty()) return p.finish();

    const Gap& top = bad.front();
    const Rational anchor = top.kind == GapKind::ClosedOpen ? top.hi : top.lo;
    const UnitPartition part = unit_partition(s, anchor);
    const auto deltas = deltas_by_interval(s, part);

    std::vector<std::pair<long long, std::vector<Rational>>> order(deltas.begin(), deltas.end());
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.second.front() > b.second.front(); });
    Rational product = 1;
    for (const auto& [k, ds] : order) {
        p.trace.interval_order.push_back(k);
        p.trace.per_interval_deltas.push_back(ds);
        Rational factor = 1;
        for (const auto& d : ds) factor -= d;
        if (factor.sign() <= 0) p.trace.excluded_intervals.push_back(k);
        else product *= factor;
    }
    p.trace.eps1 = eps0 * product / 2;

    for (const auto& [k, ds] : order) {
        const auto cell = std::find_if(part.intervals.begin(), part.intervals.end(),
                                       [&](const auto& c) { return c.index == k; });
        while (true) {
            const Rational lo = apply(p.total, max(cell->lo, s.inf()));
            const Rational hi = apply(p.total, min(cell->hi, s.sup()));
            std::optional<Gap> target;
            for (const auto& g : bad_gaps_by_size(p.current))
                if (g.lo < hi && g.hi > lo && g.length() >= p.trace.eps1) {
                    target = g;
                    break;
                }
            if (!target) break;
            p.close(*target, k);
        }
    }
    while (true) {
        const auto rest = bad_gaps_by_size(p.current);
        if (rest.empty() || rest.front().length() < eps0) break;
        p.trace.fallback = true;
        p.close(rest.front(), std::nullopt);
    }
    return p.finish();
}

}  // namespace gapsmith
