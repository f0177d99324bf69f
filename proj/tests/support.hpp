#pragma once

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gapsmith/pointset.hpp"

namespace testing_support {

using gapsmith::Component;
using gapsmith::PointSet;
using gapsmith::Rational;

/// Reads "[0,1/2) {7/4} (2,5/2]" into a normalized set.
inline PointSet set_of(const std::string& text) {
    std::vector<Component> parts;
    std::size_t i = 0;
    while (i < text.size()) {
        const char open = text[i];
        if (open == ' ') {
            ++i;
            continue;
        }
        const char close_char = open == '{' ? '}' : ',';
        const std::size_t comma = text.find(close_char, i);
        const Rational lo = Rational::parse(text.substr(i + 1, comma - i - 1));
        if (open == '{') {
            parts.push_back(Component::point(lo));
            i = comma + 1;
            continue;
        }
        const std::size_t end = text.find_first_of(")]", comma);
        const Rational hi = Rational::parse(text.substr(comma + 1, end - comma - 1));
        parts.push_back(Component::interval(lo, hi, open == '[', text[end] == ']'));
        i = end + 1;
    }
    return PointSet::normalize(parts);
}

inline std::string show(const PointSet& s) {
    std::ostringstream out;
    for (const auto& c : s.components()) {
        if (c.is_point()) out << "{" << c.lo.str() << "} ";
        else out << (c.lo_closed ? "[" : "(") << c.lo.str() << "," << c.hi.str() << (c.hi_closed ? "]" : ")") << " ";
    }
    return out.str();
}

struct Shape {
    int den = 12;
    int span = 4;
    int min_parts = 1;
    int max_parts = 5;
    double point_share = 0.25;
};

/// Finite union of points and intervals with endpoints on (1/den)Z inside [0, span].
inline PointSet random_set(std::mt19937& rng, const Shape& shape) {
    std::uniform_int_distribution<int> count(shape.min_parts, shape.max_parts), pos(0, shape.span * shape.den);
    std::bernoulli_distribution coin(0.5), point(shape.point_share);
    std::vector<int> cuts;
    const int n = count(rng);
    for (int i = 0; i < 2 * n; ++i) cuts.push_back(pos(rng));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<Component> parts;
    for (std::size_t i = 0; i + 1 < cuts.size(); i += 2) {
        const Rational lo(cuts[i], shape.den), hi(cuts[i + 1], shape.den);
        if (point(rng)) parts.push_back(Component::point(lo));
        else parts.push_back(Component::interval(lo, hi, coin(rng), coin(rng)));
    }
    if (parts.empty()) parts.push_back(Component::point(Rational(cuts.front(), shape.den)));
    return PointSet::normalize(parts);
}

/// Half-open intervals of random orientation separated by gaps; every gap is bad.
/// Denominators are drawn from 1..max_den.
inline PointSet random_presentation(std::mt19937& rng, int max_bad, int max_den) {
    std::uniform_int_distribution<int> gaps_n(1, max_bad), den(1, max_den), num(1, 40);
    std::bernoulli_distribution closed_open(0.5);
    const int n = gaps_n(rng);
    std::vector<Component> parts;
    Rational at = 0;
    for (int i = 0; i <= n; ++i) {
        const Rational width(num(rng), den(rng));
        const Rational gap(num(rng), den(rng));
        parts.push_back(Component::interval(at, at + width, i == 0 || closed_open(rng), true));
        at += width + gap;
    }
    // Interval i ends open exactly when interval i+1 starts closed, so every gap is half-open.
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) parts[i].hi_closed = !parts[i + 1].lo_closed;
    return PointSet::normalize(parts);
}

inline std::string tight_right() { return "[0,1/2) [1,3/2) {7/4} (2,5/2) {11/4} (3,7/2]"; }
inline std::string slack_right() { return "[0,1/2) [1,7/5] {9/5} [21/10,5/2]"; }
inline std::string tight_left() { return "[-2,-3/2) [-1,-1/2) [0,1/2) [1,3/2]"; }
inline std::string released_left() { return "[-2,-3/5) (1/10,1/2) [1,3/2]"; }

}  // namespace testing_support
