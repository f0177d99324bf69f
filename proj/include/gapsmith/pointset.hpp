#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gapsmith/rational.hpp"

namespace gapsmith {

/// One connected piece of a bounded subset of the line: an isolated point or
/// a non-degenerate interval with independent endpoint membership.
struct Component {
    Rational lo;
    Rational hi;
    bool lo_closed = true;
    bool hi_closed = true;

    static Component point(const Rational& at) { return {at, at, true, true}; }
    static Component interval(const Rational& lo, const Rational& hi, bool lo_closed, bool hi_closed) {
        return {lo, hi, lo_closed, hi_closed};
    }
    static Component closed(const Rational& lo, const Rational& hi) { return {lo, hi, true, true}; }

    bool is_point() const { return lo == hi; }
    /// Points need both flags set; intervals need lo < hi.
    bool well_formed() const { return lo < hi || (lo == hi && lo_closed && hi_closed); }
    bool contains(const Rational& x) const;
    /// Intersection, if nonempty.
    std::optional<Component> intersect(const Component& other) const;
    Rational length() const { return hi - lo; }

    friend bool operator==(const Component&, const Component&) = default;
};

enum class GapKind { Open, Closed, ClosedOpen, OpenClosed };

const char* to_string(GapKind kind);

/// A maximal lacuna. The kind names the interval removed from the hull:
/// ClosedOpen is [lo, hi) (lo not in S, hi in S), OpenClosed is (lo, hi].
struct Gap {
    Rational lo;
    Rational hi;
    GapKind kind = GapKind::Open;

    Rational length() const { return hi - lo; }
    bool is_bad() const { return kind == GapKind::ClosedOpen || kind == GapKind::OpenClosed; }

    friend bool operator==(const Gap&, const Gap&) = default;
};

/// Sorted, disjoint, maximally merged list of components.
class PointSet {
public:
    PointSet() = default;

    /// Builds the normalized union of arbitrary well-formed components.
    static PointSet normalize(std::span<const Component> raw);
    static PointSet normalize(std::initializer_list<Component> raw) {
        return normalize(std::span<const Component>(raw.begin(), raw.size()));
    }

    const std::vector<Component>& components() const { return components_; }
    bool empty() const { return components_.empty(); }

    Rational inf() const;
    Rational sup() const;
    bool contains(const Rational& x) const;

    /// x is approached by members of S from strictly below.
    bool is_left_limit(const Rational& x) const;
    /// x is approached by members of S from strictly above.
    bool is_right_limit(const Rational& x) const;

    /// Number of members in the closed window [lo, hi], or nullopt when
    /// infinitely many.
    std::optional<std::size_t> count_in(const Rational& lo, const Rational& hi) const;
    std::vector<Rational> members_in(const Rational& lo, const Rational& hi) const;

    /// Supremum of the members of S strictly below x; equals x itself when S
    /// accumulates at x from below.
    std::optional<Rational> closure_pred(const Rational& x) const;
    /// Infimum of the members of S strictly above x; equals x when S
    /// accumulates at x from above.
    std::optional<Rational> closure_succ(const Rational& x) const;

    /// S intersected with [lo, hi] (closed window).
    PointSet clip(const Rational& lo, const Rational& hi) const;
    PointSet translate(const Rational& by) const;
    /// Image under x -> -x.
    PointSet mirror() const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::vector<Component> components_;
};

std::vector<Gap> gaps(const PointSet& s);
std::vector<Gap> bad_gaps(const PointSet& s);

struct BadGapMass {
    Rational total;
    std::vector<Rational> per_gap;  // non-increasing
};

BadGapMass bad_gap_mass(const PointSet& s);

/// Bad gaps sorted by decreasing length; equal lengths keep left-to-right order.
std::vector<Gap> bad_gaps_by_size(const PointSet& s);

/// Member endpoints, midpoints and interior quartiles of every component.
std::vector<Rational> sample_points(const PointSet& s);

struct UnitPartition {
    Rational anchor;
    long long m = 0;  // intervals at or left of I_0
    long long n = 0;  // intervals I_1 .. I_N
    struct Cell {
        long long index;
        Rational lo;
        Rational hi;
    };
    std::vector<Cell> intervals;

    long long total() const { return m + n; }
};

/// Minimal covering of [inf S, sup S] by unit intervals I_k = [k-1+anchor, k+anchor].
UnitPartition unit_partition(const PointSet& s, const Rational& anchor);

}  // namespace gapsmith
