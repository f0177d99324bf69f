#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gapsmith/pointset.hpp"

namespace gapsmith {

/// Provenance of a piece inside a threshold-preserving plan. Maps built
/// outside the threshold module leave every piece as Plain.
enum class PieceTag { Plain, Identity, Lambda1, Lambda2, Lambda3, ContractionC, ContractionC1, ContractionC2 };

const char* to_string(PieceTag tag);
PieceTag piece_tag_from_string(const std::string& s);

struct AffinePiece {
    Component domain;
    Rational slope;
    Rational intercept;
    PieceTag tag = PieceTag::Plain;

    Rational at(const Rational& x) const { return slope * x + intercept; }

    friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
};

/// Non-decreasing piecewise-affine map. Pieces are sorted and pairwise
/// disjoint; `domain_hint` is the set the map is meant to act on.
class PLMap {
public:
    PLMap() = default;
    PLMap(std::vector<AffinePiece> pieces, PointSet domain_hint);

    static PLMap identity(const PointSet& domain);
    static PLMap affine(const Rational& slope, const Rational& intercept, const PointSet& domain);

    /// Continuous map through the given knots, linear in between, defined on
    /// [knots.front().x, knots.back().x]. Knots must have strictly increasing x.
    static PLMap through_knots(const std::vector<std::pair<Rational, Rational>>& knots,
                               const PointSet& domain_hint,
                               const std::vector<PieceTag>& tags = {});

    const std::vector<AffinePiece>& pieces() const { return pieces_; }
    const PointSet& domain_hint() const { return domain_hint_; }

    /// Piece covering x, if any.
    const AffinePiece* piece_at(const Rational& x) const;
    bool defined_at(const Rational& x) const { return piece_at(x) != nullptr; }

    friend bool operator==(const PLMap&, const PLMap&) = default;

private:
    std::vector<AffinePiece> pieces_;
    PointSet domain_hint_;
};

Rational apply(const PLMap& m, const Rational& x);

/// outer after inner, defined on inner's domain hint.
PLMap compose(const PLMap& outer, const PLMap& inner);

PointSet image(const PLMap& m, const PointSet& s);

struct Certificate {
    bool ok = true;
    std::optional<std::pair<Rational, Rational>> witness;

    explicit operator bool() const { return ok; }
};

Certificate is_strictly_increasing_on(const PLMap& m, const PointSet& s);
Certificate threshold_equiv(const PLMap& m, const PointSet& s);

/// Same predicates over an explicit, sorted list of points.
Certificate strictly_increasing_on_points(const PLMap& m, const std::vector<Rational>& points);
Certificate threshold_equiv_on_points(const PLMap& m, const std::vector<Rational>& points);

/// sample_points of S refined by the map's piece partition, plus unit
/// translates of those samples that fall back into S. Used for the hard
/// postconditions of threshold removal.
std::vector<Rational> certificate_points(const PLMap& m, const PointSet& s);

}  // namespace gapsmith
