#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "gapsmith/rational.hpp"

using namespace gapsmith;

namespace {

ErrorKind kind_of(std::string_view text) {
    try {
        Rational::parse(text);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("parse accepts integers and reduced fractions") {
    CHECK(Rational::parse("3/5") == R(3, 5));
    CHECK(Rational::parse("-7/4") == R(-7, 4));
    CHECK(Rational::parse("12") == R(12));
    CHECK(Rational::parse("0") == R(0));
}

TEST_CASE("parse rejects malformed text") {
    for (const char* bad : {"", "1/0", "2/4", "1/-3", "a/b", "1/2/3", " 1/2", "1.5"}) {
        CAPTURE(bad);
        CHECK(kind_of(bad) == ErrorKind::MalformedRational);
    }
}

TEST_CASE("arithmetic stays exact") {
    CHECK(R(1, 3) + R(1, 6) == R(1, 2));
    CHECK(R(1, 3) - R(1, 2) == R(-1, 6));
    CHECK(R(2, 3) * R(9, 4) == R(3, 2));
    CHECK(R(1, 7) / R(3, 14) == R(2, 3));
    Rational sum = 0;
    for (int k = 1; k <= 60; ++k) sum += R(1, k * (k + 1));
    CHECK(sum == R(60, 61));
}

TEST_CASE("division by zero is reported") {
    CHECK_THROWS_AS(R(1) / R(0), Error);
}

TEST_CASE("floor and ceil round toward the right integers") {
    CHECK(R(7, 2).floor() == 3);
    CHECK(R(7, 2).ceil() == 4);
    CHECK(R(-7, 2).floor() == -4);
    CHECK(R(-7, 2).ceil() == -3);
    CHECK(R(5).floor() == 5);
    CHECK(R(5).ceil() == 5);
}

TEST_CASE("ordering, printing and helpers") {
    CHECK(R(1, 3) < R(1, 2));
    CHECK(R(-1, 2) < R(-1, 3));
    CHECK(min(R(1, 3), R(1, 2)) == R(1, 3));
    CHECK(max(R(1, 3), R(1, 2)) == R(1, 2));
    CHECK(abs(R(-2, 9)) == R(2, 9));
    CHECK(R(6, -8).str() == "-3/4");
    CHECK(R(4, 2).str() == "2");
    std::ostringstream out;
    out << R(5, 10);
    CHECK(out.str() == "1/2");
    CHECK(R(3, 4).is_integer() == false);
    CHECK(R(8, 4).is_integer());
}
