#include "gapsmith/pointset.hpp"

#include <algorithm>

namespace gapsmith {

const char* to_string(GapKind kind) {
    switch (kind) {
        case GapKind::Open: return "Open";
        case GapKind::Closed: return "Closed";
        case GapKind::ClosedOpen: return "ClosedOpen";
        case GapKind::OpenClosed: return "OpenClosed";
    }
    return "?";
}

bool Component::contains(const Rational& x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !lo_closed) return false;
    if (x == hi && !hi_closed) return false;
    return true;
}

std::optional<Component> Component::intersect(const Component& o) const {
    Component r;
    if (lo > o.lo) { r.lo = lo; r.lo_closed = lo_closed; }
    else if (o.lo > lo) { r.lo = o.lo; r.lo_closed = o.lo_closed; }
    else { r.lo = lo; r.lo_closed = lo_closed && o.lo_closed; }
    if (hi < o.hi) { r.hi = hi; r.hi_closed = hi_closed; }
    else if (o.hi < hi) { r.hi = o.hi; r.hi_closed = o.hi_closed; }
    else { r.hi = hi; r.hi_closed = hi_closed && o.hi_closed; }
    if (!r.well_formed()) return std::nullopt;
    return r;
}

namespace {

// Lower endpoints order: smaller value first, closed before open.
bool starts_before(const Component& a, const Component& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
}

}  // namespace

PointSet PointSet::normalize(std::span<const Component> raw) {
    std::vector<Component> items(raw.begin(), raw.end());
    for (const auto& c : items) {
        if (!c.well_formed())
            throw Error(ErrorKind::MalformedComponent,
                        "component [" + c.lo.str() + ", " + c.hi.str() + "] is not well formed");
    }
    std::sort(items.begin(), items.end(), starts_before);
    PointSet out;
    for (const auto& c : items) {
        if (out.components_.empty()) {
            out.components_.push_back(c);
            continue;
        }
        Component& last = out.components_.back();
        const bool connected = c.lo < last.hi || (c.lo == last.hi && (last.hi_closed || c.lo_closed));
        if (!connected) {
            out.components_.push_back(c);
            continue;
        }
        if (c.hi > last.hi) {
            last.hi = c.hi;
            last.hi_closed = c.hi_closed;
        } else if (c.hi == last.hi) {
            last.hi_closed = last.hi_closed || c.hi_closed;
        }
        if (c.lo == last.lo) last.lo_closed = last.lo_closed || c.lo_closed;
    }
    return out;
}

Rational PointSet::inf() const {
    if (empty()) throw Error(ErrorKind::EmptySet, "inf of empty set");
    return components_.front().lo;
}

Rational PointSet::sup() const {
    if (empty()) throw Error(ErrorKind::EmptySet, "sup of empty set");
    return components_.back().hi;
}

bool PointSet::contains(const Rational& x) const {
    auto it = std::upper_bound(components_.begin(), components_.end(), x,
                               [](const Rational& v, const Component& c) { return v < c.lo; });
    if (it == components_.begin()) return false;
    return std::prev(it)->contains(x);
}

bool PointSet::is_left_limit(const Rational& x) const {
    for (const auto& c : components_)
        if (!c.is_point() && c.lo < x && x <= c.hi) return true;
    return false;
}

bool PointSet::is_right_limit(const Rational& x) const {
    for (const auto& c : components_)
        if (!c.is_point() && c.lo <= x && x < c.hi) return true;
    return false;
}

std::optional<std::size_t> PointSet::count_in(const Rational& lo, const Rational& hi) const {
    std::size_t count = 0;
    const Component window = Component::closed(lo, hi);
    for (const auto& c : components_) {
        auto part = c.intersect(window);
        if (!part) continue;
        if (!part->is_point()) return std::nullopt;
        ++count;
    }
    return count;
}

std::vector<Rational> PointSet::members_in(const Rational& lo, const Rational& hi) const {
    std::vector<Rational> out;
    const Component window = Component::closed(lo, hi);
    for (const auto& c : components_) {
        auto part = c.intersect(window);
        if (part && part->is_point()) out.push_back(part->lo);
    }
    return out;
}

std::optional<Rational> PointSet::closure_pred(const Rational& x) const {
    std::optional<Rational> best;
    for (const auto& c : components_) {
        if (c.lo >= x) break;
        best = (c.hi < x) ? c.hi : x;
    }
    return best;
}

std::optional<Rational> PointSet::closure_succ(const Rational& x) const {
    for (const auto& c : components_) {
        if (c.hi <= x) continue;
        return (c.lo > x) ? c.lo : x;
    }
    return std::nullopt;
}

PointSet PointSet::clip(const Rational& lo, const Rational& hi) const {
    PointSet out;
    const Component window = Component::closed(lo, hi);
    for (const auto& c : components_)
        if (auto part = c.intersect(window)) out.components_.push_back(*part);
    return out;
}

PointSet PointSet::translate(const Rational& by) const {
    PointSet out = *this;
    for (auto& c : out.components_) {
        c.lo += by;
        c.hi += by;
    }
    return out;
}

PointSet PointSet::mirror() const {
    PointSet out;
    for (auto it = components_.rbegin(); it != components_.rend(); ++it)
        out.components_.push_back({-it->hi, -it->lo, it->hi_closed, it->lo_closed});
    return out;
}

std::vector<Gap> gaps(const PointSet& s) {
    if (s.empty()) throw Error(ErrorKind::EmptySet, "gaps of empty set");
    std::vector<Gap> out;
    const auto& cs = s.components();
    for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
        const Component& left = cs[i];
        const Component& right = cs[i + 1];
        if (left.hi == right.lo) continue;  // a single missing point is not a lacuna
        const bool lo_in = left.hi_closed;
        const bool hi_in = right.lo_closed;
        GapKind kind;
        if (lo_in && hi_in) kind = GapKind::Open;
        else if (!lo_in && !hi_in) kind = GapKind::Closed;
        else if (!lo_in) kind = GapKind::ClosedOpen;
        else kind = GapKind::OpenClosed;
        out.push_back({left.hi, right.lo, kind});
    }
    return out;
}

std::vector<Gap> bad_gaps(const PointSet& s) {
    auto all = gaps(s);
    std::erase_if(all, [](const Gap& g) { return !g.is_bad(); });
    return all;
}

std::vector<Gap> bad_gaps_by_size(const PointSet& s) {
    auto bad = bad_gaps(s);
    std::stable_sort(bad.begin(), bad.end(), [](const Gap& a, const Gap& b) { return a.length() > b.length(); });
    return bad;
}

BadGapMass bad_gap_mass(const PointSet& s) {
    BadGapMass mass;
    for (const auto& g : bad_gaps_by_size(s)) {
        mass.per_gap.push_back(g.length());
        mass.total += g.length();
    }
    return mass;
}

std::vector<Rational> sample_points(const PointSet& s) {
    if (s.empty()) throw Error(ErrorKind::EmptySet, "sample_points of empty set");
    std::vector<Rational> out;
    for (const auto& c : s.components()) {
        if (c.is_point()) {
            out.push_back(c.lo);
            continue;
        }
        const Rational len = c.hi - c.lo;
        if (c.lo_closed) out.push_back(c.lo);
        out.push_back(c.lo + len / 4);
        out.push_back(c.lo + len / 2);
        out.push_back(c.lo + len * 3 / 4);
        if (c.hi_closed) out.push_back(c.hi);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

UnitPartition unit_partition(const PointSet& s, const Rational& anchor) {
    // I_k = [anchor + k - 2, anchor + k - 1], so that I_1 = [anchor - 1, anchor].
    const Rational lo = s.inf(), hi = s.sup();
    const auto k_lo = static_cast<long long>((lo - anchor).floor()) + 2;
    auto k_hi = static_cast<long long>((hi - anchor).ceil()) + 1;
    k_hi = std::max(k_hi, k_lo);
    UnitPartition p;
    p.anchor = anchor;
    for (long long k = k_lo; k <= k_hi; ++k) {
        p.intervals.push_back({k, anchor + Rational(k - 2), anchor + Rational(k - 1)});
        if (k <= 0) ++p.m;
        else ++p.n;
    }
    return p;
}

}  // namespace gapsmith
