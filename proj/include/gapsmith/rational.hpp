#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "gapsmith/error.hpp"

namespace gapsmith {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Every coordinate, length and slope in the library is a Rational; there is
/// no floating-point path anywhere in the geometric code.
class Rational {
public:
    using Int = boost::multiprecision::cpp_int;

    Rational() = default;
    Rational(long long n) : value_(n) {}  // NOLINT: implicit from integers is intended
    Rational(const Int& num, const Int& den);

    /// Parses "p/q" or "p". Rejects zero or negative denominators and
    /// fractions not in lowest terms.
    static Rational parse(std::string_view text);

    Int num() const { return boost::multiprecision::numerator(value_); }
    Int den() const { return boost::multiprecision::denominator(value_); }

    std::string str() const;
    double to_double() const { return value_.convert_to<double>(); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return den() == 1; }
    int sign() const { return value_.sign(); }

    /// Largest integer not above this value.
    Int floor() const;
    Int ceil() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    boost::multiprecision::cpp_rational value_{0};
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Shorthand for tests and fixtures: R(3, 5) == 3/5.
inline Rational R(long long num, long long den = 1) { return Rational(Rational::Int(num), Rational::Int(den)); }

}  // namespace gapsmith
