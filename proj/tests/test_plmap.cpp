#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gapsmith/plmap.hpp"
#include "support.hpp"

using namespace gapsmith;
using testing_support::set_of;

namespace {

PLMap fuse_gap() {
    // Sends [0,1) to [0,2) and [3/2,2] to [2,3]: closes the gap [1,3/2).
    return PLMap({{Component::interval(R(0), R(1), true, false), R(2), R(0)},
                  {Component::closed(R(3, 2), R(2)), R(2), R(-1)}},
                 set_of("[0,1) [3/2,2]"));
}

}  // namespace

TEST_CASE("apply uses the covering piece and rejects points outside") {
    const PLMap m = fuse_gap();
    CHECK(apply(m, R(1, 2)) == R(1));
    CHECK(apply(m, R(3, 2)) == R(2));
    CHECK(apply(m, R(2)) == R(3));
    CHECK_THROWS_AS(apply(m, R(1)), Error);
    CHECK_THROWS_AS(apply(m, R(5)), Error);
}

TEST_CASE("constructor rejects overlapping, decreasing and negative-slope pieces") {
    const PointSet d = set_of("[0,2]");
    CHECK_THROWS_AS(PLMap({{Component::closed(R(0), R(1)), R(1), R(0)}, {Component::closed(R(1), R(2)), R(1), R(0)}}, d),
                    Error);
    CHECK_THROWS_AS(PLMap({{Component::closed(R(0), R(1)), R(-1), R(0)}}, d), Error);
    CHECK_THROWS_AS(PLMap({{Component::interval(R(0), R(1), true, false), R(1), R(5)},
                           {Component::closed(R(1), R(2)), R(1), R(0)}},
                          d),
                    Error);
}

TEST_CASE("image keeps endpoint membership and fuses closed gaps") {
    const PLMap m = fuse_gap();
    CHECK(image(m, set_of("[0,1) [3/2,2]")) == set_of("[0,3]"));
    CHECK(image(PLMap::affine(R(1, 2), R(1), set_of("[0,2]")), set_of("(0,1) {2}")) == set_of("(1,3/2) {2}"));
}

TEST_CASE("through_knots interpolates linearly") {
    const PLMap m = PLMap::through_knots({{R(0), R(0)}, {R(1), R(1, 2)}, {R(2), R(2)}}, set_of("[0,2]"));
    CHECK(apply(m, R(1, 2)) == R(1, 4));
    CHECK(apply(m, R(3, 2)) == R(5, 4));
    CHECK(apply(m, R(2)) == R(2));
}

TEST_CASE("composition agrees with pointwise application") {
    const PLMap inner = fuse_gap();
    const PLMap outer = PLMap::through_knots({{R(0), R(0)}, {R(2), R(1)}, {R(3), R(3)}}, set_of("[0,3]"));
    const PLMap both = compose(outer, inner);
    for (const auto& x : sample_points(inner.domain_hint())) CHECK(apply(both, x) == apply(outer, apply(inner, x)));
}

TEST_CASE("strict increase certificate finds flat pieces") {
    const PLMap flat({{Component::closed(R(0), R(1)), R(0), R(0)}}, set_of("[0,1]"));
    const auto c = is_strictly_increasing_on(flat, set_of("[0,1]"));
    CHECK_FALSE(c.ok);
    CHECK(c.witness.has_value());
    CHECK(is_strictly_increasing_on(fuse_gap(), set_of("[0,1) [3/2,2]")).ok);
}

TEST_CASE("threshold certificate compares x+1<y with g(x)+1<g(y)") {
    const PointSet s = set_of("[0,1/2] [3/2,2]");
    CHECK(threshold_equiv(PLMap::identity(set_of("[0,2]")), s).ok);
    CHECK(threshold_equiv(PLMap::affine(R(1), R(7), set_of("[0,2]")), s).ok);
    const auto stretched = threshold_equiv(PLMap::affine(R(2), R(0), set_of("[0,2]")), s);
    CHECK_FALSE(stretched.ok);
    REQUIRE(stretched.witness.has_value());
    CHECK(stretched.witness->first < stretched.witness->second);
}

TEST_CASE("certificate points include piece breaks and unit translates") {
    const PointSet s = set_of("[0,1) [3/2,2]");
    const auto pts = certificate_points(fuse_gap(), s);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    for (const auto& x : pts) CHECK(s.contains(x));
    CHECK(std::find(pts.begin(), pts.end(), R(3, 2)) != pts.end());
}
