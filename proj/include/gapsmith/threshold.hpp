#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gapsmith/plmap.hpp"
#include "gapsmith/pointset.hpp"
#include "gapsmith/rational.hpp"
#include "gapsmith/structure.hpp"

namespace gapsmith {

enum class Orientation { ClosedOpen, OpenClosed };

const char* to_string(Orientation o);

/// CertificateFailed carrying the offending pair.
class CertificateError : public Error {
public:
    CertificateError(const std::string& what, std::pair<Rational, Rational> witness)
        : Error(ErrorKind::CertificateFailed, what), witness_(std::move(witness)) {}

    const std::pair<Rational, Rational>& witness() const { return witness_; }

private:
    std::pair<Rational, Rational> witness_;
};

/// Piecewise-affine self-map of the hull of S that closes one bad gap while
/// keeping x + 1 < y equivalent to g(x) + 1 < g(y) on S.
struct ThresholdPlan {
    Gap gap;
    Orientation orientation = Orientation::ClosedOpen;
    std::size_t m = 0;        // right-chain depth
    std::size_t m_prime = 0;  // left-chain depth
    std::vector<std::pair<Rational, Rational>> gammas;  // right steps, then left steps
    std::vector<AffinePiece> pieces;
    GapAnalysis structure;
    /// Steps that re-entered the analysis on a shrunken window.
    std::size_t restarts = 0;
};

/// Throws StructureViolated when ctx failed, GapTooLong, NotBad.
ThresholdPlan plan_gap(const PointSet& s, const Gap& g, const GapAnalysis& ctx);

struct Applied {
    PLMap map;
    PointSet image;
};

/// Builds the map and certifies it on S. Throws CertificateFailed.
Applied apply_plan(const PointSet& s, const ThresholdPlan& p);

struct ThresholdStep {
    Gap gap;                     // in the coordinates of the set it was closed in
    std::optional<long long> interval;
    ThresholdPlan plan;
    Rational sup_norm;           // max |g(x) - x| over the current sample points
    Rational max_slope;
    Rational expansion_bound;    // 1 / (1 - delta)
};

struct ScheduleTrace {
    std::vector<long long> interval_order;
    std::vector<std::vector<Rational>> per_interval_deltas;  // indexed like interval_order
    std::vector<long long> excluded_intervals;              // 1 - sum(delta) <= 0
    Rational eps0;
    Rational eps1;
    std::vector<Rational> sup_norm_ledger;
    std::vector<ThresholdStep> steps;
    /// Gaps closed after the per-interval pass to reach the eps0 target.
    bool fallback = false;
};

struct ThresholdResult {
    PLMap map;
    PointSet image;
    ScheduleTrace trace;
};

/// Biggest bad gap of the image is below eps0. Throws StructureViolated,
/// CertificateFailed, InvalidArgument (eps0 <= 0).
ThresholdResult remove_epsilon(const PointSet& s, const Rational& eps0);

/// Image has no bad gaps. Throws StructureViolated, CertificateFailed.
ThresholdResult remove_strong(const PointSet& s);

}  // namespace gapsmith
