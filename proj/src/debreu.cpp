#include "gapsmith/debreu.hpp"

#include <algorithm>
#include <numeric>

namespace gapsmith {

Removal remove_one(const PointSet& s, const Gap& g) {
    if (!g.is_bad()) throw Error(ErrorKind::NotBad, std::string("gap is ") + to_string(g.kind));
    const auto all = gaps(s);
    if (std::find(all.begin(), all.end(), g) == all.end())
        throw Error(ErrorKind::NoSuchGap, "gap [" + g.lo.str() + ", " + g.hi.str() + "] not present");

    const Rational lo = s.inf();
    const Rational span = s.sup() - lo;
    const Rational delta = g.length();
    const Rational slope = Rational(1) / (Rational(1) - delta / span);
    std::vector<AffinePiece> pieces{
        {Component::closed(lo, g.lo), slope, lo - slope * lo, PieceTag::Plain},
        {Component::closed(g.hi, s.sup()), slope, lo - slope * (lo + delta), PieceTag::Plain},
    };
    PLMap map(std::move(pieces), s);
    PointSet img = image(map, s);
    return {std::move(map), std::move(img)};
}

namespace {

struct Tracked {
    Gap original;
    Rational lo, hi;  // current endpoints
};

RemovalTrace run(const PointSet& s, const Rational* eps) {
    RemovalTrace trace{{}, PLMap::identity(s), s};
    std::vector<Tracked> tracked;
    for (const auto& g : bad_gaps(s)) tracked.push_back({g, g.lo, g.hi});

    while (true) {
        const auto bad = bad_gaps_by_size(trace.final_set);
        if (bad.empty() || (eps && bad.front().length() < *eps)) break;
        const Gap& g = bad.front();
        const auto it = std::find_if(tracked.begin(), tracked.end(),
                                     [&](const Tracked& t) { return t.lo == g.lo && t.hi == g.hi; });
        if (it == tracked.end())
            throw Error(ErrorKind::InvalidArgument, "bad gap [" + g.lo.str() + ", " + g.hi.str() + "] has no preimage");

        Removal r = remove_one(trace.final_set, g);
        RemovalStep step{trace.steps.size() + 1, g, it->original.length(), g.length(), r.map};
        tracked.erase(it);
        for (auto& t : tracked) {
            t.lo = apply(r.map, t.lo);
            t.hi = apply(r.map, t.hi);
        }
        trace.total_map = compose(r.map, trace.total_map);
        trace.final_set = std::move(r.image);
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

Rational sum(const std::vector<Rational>& xs) { return std::accumulate(xs.begin(), xs.end(), Rational(0)); }

}  // namespace

RemovalTrace remove_all(const PointSet& s) {
    if (s.empty()) throw Error(ErrorKind::EmptySet, "cannot remove gaps of an empty set");
    return run(s, nullptr);
}

RemovalTrace remove_until(const PointSet& s, const Rational& eps) {
    if (eps.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "eps must be positive");
    if (s.empty()) throw Error(ErrorKind::EmptySet, "cannot remove gaps of an empty set");
    return run(s, &eps);
}

Rational predicted_length(const std::vector<Rational>& deltas, std::size_t n) {
    if (n == 0 || n > deltas.size())
        throw Error(ErrorKind::InvalidArgument, "index " + std::to_string(n) + " out of range");
    if (sum(deltas) >= 1) throw Error(ErrorKind::MassExceedsOne, "gap lengths sum to " + sum(deltas).str());
    const std::vector<Rational> before(deltas.begin(), deltas.begin() + static_cast<std::ptrdiff_t>(n - 1));
    return deltas[n - 1] / (Rational(1) - sum(before));
}

Rational predicted_distance(const std::vector<Rational>& deltas_between, const Rational& d0) {
    const Rational total = sum(deltas_between);
    if (total >= d0) throw Error(ErrorKind::DegenerateDistance, "removed mass " + total.str() + " >= " + d0.str());
    if (total >= 1) throw Error(ErrorKind::MassExceedsOne, "gap lengths sum to " + total.str());
    return (d0 - total) / (Rational(1) - total);
}

}  // namespace gapsmith
