#pragma once

#include <cstddef>
#include <vector>

#include "gapsmith/plmap.hpp"
#include "gapsmith/pointset.hpp"
#include "gapsmith/rational.hpp"

namespace gapsmith {

struct RemovalStep {
    std::size_t index = 0;  // 1-based
    Gap gap_before;         // as found in the current set
    Rational delta;         // length of the same gap in the input set
    Rational l;             // length at removal time
    PLMap map;
};

struct RemovalTrace {
    std::vector<RemovalStep> steps;
    PLMap total_map;
    PointSet final_set;
};

struct Removal {
    PLMap map;
    PointSet image;
};

/// Two-piece map that fuses the ends of g and keeps inf and sup fixed.
/// Throws NotBad, NoSuchGap.
Removal remove_one(const PointSet& s, const Gap& g);

/// Removes bad gaps biggest first (leftmost on ties) until none remain.
RemovalTrace remove_all(const PointSet& s);

/// Stops as soon as the biggest remaining bad gap is shorter than eps.
/// Throws InvalidArgument when eps <= 0.
RemovalTrace remove_until(const PointSet& s, const Rational& eps);

/// delta_n / (1 - sum_{k<n} delta_k), lengths relative to a unit span.
/// Throws MassExceedsOne, InvalidArgument (n out of range).
Rational predicted_length(const std::vector<Rational>& deltas, std::size_t n);

/// (d0 - sum) / (1 - sum) for gaps that all lie between the two points.
/// Throws DegenerateDistance when sum >= d0, MassExceedsOne when sum >= 1.
Rational predicted_distance(const std::vector<Rational>& deltas_between, const Rational& d0);

}  // namespace gapsmith
