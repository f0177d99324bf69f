#include "gapsmith/plmap.hpp"

#include <algorithm>

namespace gapsmith {

const char* to_string(PieceTag tag) {
    switch (tag) {
        case PieceTag::Plain: return "plain";
        case PieceTag::Identity: return "identity";
        case PieceTag::Lambda1: return "lambda1";
        case PieceTag::Lambda2: return "lambda2";
        case PieceTag::Lambda3: return "lambda3";
        case PieceTag::ContractionC: return "c";
        case PieceTag::ContractionC1: return "c1";
        case PieceTag::ContractionC2: return "c2";
    }
    return "?";
}

PieceTag piece_tag_from_string(const std::string& s) {
    for (auto t : {PieceTag::Plain, PieceTag::Identity, PieceTag::Lambda1, PieceTag::Lambda2, PieceTag::Lambda3,
                   PieceTag::ContractionC, PieceTag::ContractionC1, PieceTag::ContractionC2})
        if (s == to_string(t)) return t;
    throw Error(ErrorKind::ParseError, "unknown piece tag '" + s + "'");
}

namespace {

bool before(const Component& a, const Component& b) {
    return a.hi < b.lo || (a.hi == b.lo && !(a.hi_closed && b.lo_closed));
}

// Preimage of the interval `target` under x -> slope*x + intercept (slope > 0).
Component preimage(const AffinePiece& p, const Component& target) {
    return {(target.lo - p.intercept) / p.slope, (target.hi - p.intercept) / p.slope, target.lo_closed,
            target.hi_closed};
}

Component forward(const AffinePiece& p, const Component& d) {
    if (p.slope.is_zero()) return Component::point(p.intercept);
    return {p.at(d.lo), p.at(d.hi), d.lo_closed, d.hi_closed};
}

bool covered(std::vector<Component> parts, const Component& whole) {
    auto u = PointSet::normalize(parts);
    return u.components().size() == 1 && u.components().front() == whole;
}

// Merge touching pieces that share one affine formula.
std::vector<AffinePiece> coalesce(std::vector<AffinePiece> pieces) {
    std::sort(pieces.begin(), pieces.end(),
              [](const AffinePiece& a, const AffinePiece& b) { return before(a.domain, b.domain); });
    std::vector<AffinePiece> out;
    for (auto& p : pieces) {
        if (!out.empty()) {
            auto& last = out.back();
            const bool touch = last.domain.hi == p.domain.lo && (last.domain.hi_closed || p.domain.lo_closed);
            if (touch && last.slope == p.slope && last.intercept == p.intercept && last.tag == p.tag) {
                last.domain.hi = p.domain.hi;
                last.domain.hi_closed = p.domain.hi_closed;
                if (last.domain.lo == last.domain.hi) last.domain.lo_closed = true;
                continue;
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

PLMap::PLMap(std::vector<AffinePiece> pieces, PointSet domain_hint)
    : pieces_(std::move(pieces)), domain_hint_(std::move(domain_hint)) {
    std::sort(pieces_.begin(), pieces_.end(),
              [](const AffinePiece& a, const AffinePiece& b) { return before(a.domain, b.domain); });
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const auto& p = pieces_[i];
        if (!p.domain.well_formed()) throw Error(ErrorKind::MalformedComponent, "piece domain not well formed");
        if (p.slope.sign() < 0) throw Error(ErrorKind::InvalidArgument, "negative slope");
        if (i == 0) continue;
        const auto& q = pieces_[i - 1];
        if (!before(q.domain, p.domain)) throw Error(ErrorKind::InvalidArgument, "overlapping piece domains");
        if (q.at(q.domain.hi) > p.at(p.domain.lo))
            throw Error(ErrorKind::InvalidArgument, "map decreases across piece boundary at " + p.domain.lo.str());
    }
}

PLMap PLMap::identity(const PointSet& domain) {
    return affine(1, 0, domain);
}

PLMap PLMap::affine(const Rational& slope, const Rational& intercept, const PointSet& domain) {
    std::vector<AffinePiece> pieces;
    if (!domain.empty())
        pieces.push_back({Component::closed(domain.inf(), domain.sup()), slope, intercept,
                          slope == 1 && intercept.is_zero() ? PieceTag::Identity : PieceTag::Plain});
    return PLMap(std::move(pieces), domain);
}

PLMap PLMap::through_knots(const std::vector<std::pair<Rational, Rational>>& knots, const PointSet& domain_hint,
                           const std::vector<PieceTag>& tags) {
    std::vector<AffinePiece> pieces;
    if (knots.size() == 1) {
        pieces.push_back({Component::point(knots[0].first), 0, knots[0].second, PieceTag::Plain});
        return PLMap(std::move(pieces), domain_hint);
    }
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const auto& [x0, y0] = knots[i];
        const auto& [x1, y1] = knots[i + 1];
        if (!(x0 < x1)) throw Error(ErrorKind::InvalidArgument, "knots must have increasing abscissae");
        const Rational slope = (y1 - y0) / (x1 - x0);
        const bool last = i + 2 == knots.size();
        pieces.push_back({Component::interval(x0, x1, true, last), slope, y0 - slope * x0,
                          i < tags.size() ? tags[i] : PieceTag::Plain});
    }
    return PLMap(coalesce(std::move(pieces)), domain_hint);
}

const AffinePiece* PLMap::piece_at(const Rational& x) const {
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                               [](const Rational& v, const AffinePiece& p) { return v < p.domain.lo; });
    while (it != pieces_.begin()) {
        --it;
        if (it->domain.contains(x)) return &*it;
        if (it->domain.hi < x) break;
    }
    return nullptr;
}

Rational apply(const PLMap& m, const Rational& x) {
    const AffinePiece* p = m.piece_at(x);
    if (!p) throw Error(ErrorKind::OutOfDomain, "no piece covers " + x.str());
    return p->at(x);
}

PLMap compose(const PLMap& outer, const PLMap& inner) {
    std::vector<AffinePiece> result;
    for (const auto& c : inner.domain_hint().components()) {
        std::vector<Component> reached;
        for (const auto& p : inner.pieces()) {
            auto d = p.domain.intersect(c);
            if (!d) continue;
            const Component img = forward(p, *d);
            for (const auto& q : outer.pieces()) {
                auto e = img.intersect(q.domain);
                if (!e) continue;
                Component dom = p.slope.is_zero() ? *d : preimage(p, *e);
                if (auto clipped = dom.intersect(*d)) dom = *clipped;
                else continue;
                result.push_back({dom, q.slope * p.slope, q.slope * p.intercept + q.intercept, p.tag});
                reached.push_back(dom);
            }
        }
        if (reached.empty() || !covered(reached, c))
            throw Error(ErrorKind::DomainMismatch, "outer map does not cover the image of [" + c.lo.str() + ", " +
                                                       c.hi.str() + "]");
    }
    return PLMap(coalesce(std::move(result)), inner.domain_hint());
}

PointSet image(const PLMap& m, const PointSet& s) {
    std::vector<Component> out;
    for (const auto& c : s.components()) {
        std::vector<Component> reached;
        for (const auto& p : m.pieces()) {
            auto d = p.domain.intersect(c);
            if (!d) continue;
            reached.push_back(*d);
            out.push_back(forward(p, *d));
        }
        if (reached.empty() || !covered(reached, c))
            throw Error(ErrorKind::OutOfDomain, "map undefined on part of [" + c.lo.str() + ", " + c.hi.str() + "]");
    }
    return PointSet::normalize(out);
}

Certificate strictly_increasing_on_points(const PLMap& m, const std::vector<Rational>& points) {
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (!(apply(m, points[i]) < apply(m, points[i + 1]))) return {false, std::pair{points[i], points[i + 1]}};
    }
    return {};
}

Certificate threshold_equiv_on_points(const PLMap& m, const std::vector<Rational>& points) {
    std::vector<Rational> values;
    values.reserve(points.size());
    for (const auto& x : points) values.push_back(apply(m, x));
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            const bool before_map = points[i] + 1 < points[j];
            const bool after_map = values[i] + 1 < values[j];
            if (before_map != after_map) return {false, std::pair{points[i], points[j]}};
        }
    }
    return {};
}

Certificate is_strictly_increasing_on(const PLMap& m, const PointSet& s) {
    return strictly_increasing_on_points(m, sample_points(s));
}

Certificate threshold_equiv(const PLMap& m, const PointSet& s) {
    return threshold_equiv_on_points(m, sample_points(s));
}

std::vector<Rational> certificate_points(const PLMap& m, const PointSet& s) {
    std::vector<Component> refined;
    for (const auto& c : s.components()) {
        bool any = false;
        for (const auto& p : m.pieces()) {
            if (auto d = p.domain.intersect(c)) {
                refined.push_back(*d);
                any = true;
            }
        }
        if (!any) refined.push_back(c);
    }
    std::vector<Rational> pts;
    for (const auto& c : refined) {
        if (c.is_point()) {
            pts.push_back(c.lo);
            continue;
        }
        const Rational len = c.hi - c.lo;
        if (c.lo_closed) pts.push_back(c.lo);
        for (int k = 1; k < 4; ++k) pts.push_back(c.lo + len * k / 4);
        if (c.hi_closed) pts.push_back(c.hi);
    }
    const std::size_t base = pts.size();
    for (std::size_t i = 0; i < base; ++i) {
        for (int shift : {-2, -1, 1, 2}) {
            Rational y = pts[i] + shift;
            if (s.contains(y)) pts.push_back(y);
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace gapsmith
