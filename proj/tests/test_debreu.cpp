#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gapsmith/debreu.hpp"
#include "support.hpp"

using namespace gapsmith;
using testing_support::set_of;

TEST_CASE("one removal fuses the gap ends and keeps the span") {
    const PointSet s = set_of("[0,1) [3/2,2]");
    const Removal r = remove_one(s, bad_gaps(s).front());
    CHECK(r.image == set_of("[0,2]"));
    CHECK(apply(r.map, R(0)) == R(0));
    CHECK(apply(r.map, R(2)) == R(2));
    CHECK(apply(r.map, R(3, 2)) == R(4, 3));
    CHECK(is_strictly_increasing_on(r.map, s).ok);
}

TEST_CASE("remove_one rejects open gaps and foreign gaps") {
    const PointSet s = set_of("[0,1) (3/2,2]");
    CHECK_THROWS_AS(remove_one(s, gaps(s).front()), Error);
    CHECK_THROWS_AS(remove_one(s, Gap{R(5), R(6), GapKind::ClosedOpen}), Error);
}

TEST_CASE("remove_all clears every bad gap, largest first") {
    const PointSet s = set_of("[0,1) [2,3) {7/2} (4,5]");
    const RemovalTrace t = remove_all(s);
    CHECK(bad_gaps(t.final_set).empty());
    CHECK(t.final_set.inf() == s.inf());
    CHECK(t.final_set.sup() == s.sup());
    REQUIRE(t.steps.size() == 3);
    CHECK(t.steps[0].delta == R(1));
    CHECK(t.steps[0].gap_before.lo == R(1));
    CHECK(t.steps[1].delta == R(1, 2));
    CHECK(t.steps[2].delta == R(1, 2));
    for (const auto& st : t.steps) CHECK(st.index >= 1);
    CHECK(is_strictly_increasing_on(t.total_map, s).ok);
}

TEST_CASE("measured lengths follow the ledger formula") {
    const PointSet s = set_of("[0,1) [3/2,2) [9/4,4]");
    const RemovalTrace t = remove_all(s);
    const Rational span = s.sup() - s.inf();
    std::vector<Rational> deltas;
    for (const auto& st : t.steps) deltas.push_back(st.delta / span);
    for (std::size_t n = 1; n <= t.steps.size(); ++n) CHECK(t.steps[n - 1].l / span == predicted_length(deltas, n));
}

TEST_CASE("remove_until stops below the threshold") {
    const PointSet s = set_of("[0,1) [3/2,2) [9/4,4]");
    const RemovalTrace t = remove_until(s, R(1, 3));
    REQUIRE(t.steps.size() == 1);
    for (const auto& g : bad_gaps(t.final_set)) CHECK(g.length() < R(1, 3));
    CHECK_THROWS_AS(remove_until(s, R(0)), Error);
}

TEST_CASE("prediction helpers") {
    CHECK(predicted_length({R(1, 4), R(1, 8)}, 2) == R(1, 6));
    CHECK(predicted_distance({R(1, 4)}, R(1, 2)) == R(1, 3));
    CHECK_THROWS_AS(predicted_length({R(1, 2), R(1, 2)}, 1), Error);
    CHECK_THROWS_AS(predicted_length({R(1, 4)}, 2), Error);
    CHECK_THROWS_AS(predicted_distance({R(1, 2)}, R(1, 2)), Error);
}

TEST_CASE("a tenth-long gap in the unit interval") {
    const PointSet s = set_of("[0,1/2) [3/5,1]");
    const Removal r = remove_one(s, bad_gaps(s).front());
    CHECK(r.image == set_of("[0,1]"));
    CHECK(apply(r.map, R(1, 4)) == R(1, 4) * R(10, 9));
    CHECK(apply(r.map, R(4, 5)) == (R(4, 5) - R(1, 10)) * R(10, 9));
    const RemovalTrace t = remove_all(s);
    CHECK(t.steps.size() == 1);
    CHECK(t.final_set == set_of("[0,1]"));
}
