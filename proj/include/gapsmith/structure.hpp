#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gapsmith/plmap.hpp"
#include "gapsmith/pointset.hpp"
#include "gapsmith/rational.hpp"

namespace gapsmith {

enum class Direction { Right, Left };

enum class CaseTag { A1, B111, B112, B113, B12, A2, B211, B212, B22 };

const char* to_string(Direction d);
const char* to_string(CaseTag t);

/// One grid step away from the gap. The window is the collapse arc carried
/// into cell n; the tag classifies how the arc continues into cell n +/- 1.
struct StepReport {
    long long n = 0;
    CaseTag case_tag = CaseTag::A1;
    std::optional<Rational> singleton;
    Rational gamma_l;
    Rational gamma_r;

    Rational window_lo;
    Rational window_hi;
    bool tight_l = false;
    bool tight_r = false;
    /// The arc shrank to one side of the singleton; the continuation is
    /// analysed as a fresh gap on the shrunken window.
    bool restart = false;
    /// No collapse is carried further; later cells are unconstrained.
    bool terminal = false;
    /// Window lies inside [inf S, sup S].
    bool in_span = false;
};

struct StepFailure {
    long long n = 0;
    std::string reason;
};

struct GapContext {
    Gap gap;
    Rational r;
    Rational ua;
    Direction direction = Direction::Right;
    std::vector<StepReport> steps;
    std::optional<StepFailure> failure;

    bool ok() const { return !failure; }
};

struct GapAnalysis {
    GapContext right;
    GapContext left;

    bool ok() const { return right.ok() && left.ok(); }
};

/// Non-decreasing continuous PL self-map of [0, 1] fixing both ends, given
/// by knots; tags[i] labels the segment between knots i and i + 1.
struct CellMap {
    std::vector<std::pair<Rational, Rational>> knots;
    std::vector<PieceTag> tags;

    Rational at(const Rational& t) const;
};

/// Per-cell maps for closing one bad gap. Cell k is [anchor + k, anchor + k + 1]
/// and is sent to itself by t -> anchor + k + cells[k - k_min](t - anchor - k).
/// When `mirrored` is set everything lives in the frame x -> -x.
struct Propagation {
    Rational anchor;
    bool mirrored = false;
    long long k_min = 0;
    long long k_max = 0;
    std::vector<CellMap> cells;
    GapAnalysis analysis;

    const CellMap& cell(long long k) const { return cells[static_cast<std::size_t>(k - k_min)]; }
};

/// Throws NotBad, GapTooLong, NoSuchGap.
Propagation propagate(const PointSet& s, const Gap& g);

GapAnalysis analyze_gap(const PointSet& s, const Gap& g);

struct StructureFailure {
    Gap gap;
    Direction direction = Direction::Right;
    long long step = 0;
    std::string reason;
};

struct StructureReport {
    std::vector<GapAnalysis> per_gap;
    std::optional<StructureFailure> failure;

    bool pass() const { return !failure; }
};

StructureReport check_all(const PointSet& s);

}  // namespace gapsmith
