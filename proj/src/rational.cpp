#include "gapsmith/rational.hpp"

#include <cctype>
#include <ostream>

namespace gapsmith {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedRational: return "MalformedRational";
        case ErrorKind::MalformedComponent: return "MalformedComponent";
        case ErrorKind::EmptySet: return "EmptySet";
        case ErrorKind::OutOfDomain: return "OutOfDomain";
        case ErrorKind::DomainMismatch: return "DomainMismatch";
        case ErrorKind::NotAsymmetric: return "NotAsymmetric";
        case ErrorKind::NotASemiorder: return "NotASemiorder";
        case ErrorKind::SynthesisFailed: return "SynthesisFailed";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::GapTooLong: return "GapTooLong";
        case ErrorKind::NotBad: return "NotBad";
        case ErrorKind::NoSuchGap: return "NoSuchGap";
        case ErrorKind::MassExceedsOne: return "MassExceedsOne";
        case ErrorKind::DegenerateDistance: return "DegenerateDistance";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::StructureViolated: return "StructureViolated";
        case ErrorKind::CertificateFailed: return "CertificateFailed";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::UsageError: return "UsageError";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

Rational::Rational(const Int& num, const Int& den) {
    if (den == 0) throw Error(ErrorKind::MalformedRational, "zero denominator");
    value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
}

namespace {

bool parse_int(std::string_view s, bool allow_sign, Rational::Int& out) {
    if (s.empty()) return false;
    std::size_t i = 0;
    bool neg = false;
    if (allow_sign && s[0] == '-') {
        neg = true;
        i = 1;
    }
    if (i == s.size()) return false;
    Rational::Int v = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        v = v * 10 + (s[i] - '0');
    }
    out = neg ? Rational::Int(-v) : v;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    Int num, den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_int(text, true, num))
            throw Error(ErrorKind::MalformedRational, "not a rational: '" + std::string(text) + "'");
        return Rational(num, 1);
    }
    if (!parse_int(text.substr(0, slash), true, num) || !parse_int(text.substr(slash + 1), false, den))
        throw Error(ErrorKind::MalformedRational, "not a rational: '" + std::string(text) + "'");
    if (den == 0) throw Error(ErrorKind::MalformedRational, "zero denominator in '" + std::string(text) + "'");
    if (boost::multiprecision::gcd(num, den) != 1)
        throw Error(ErrorKind::MalformedRational, "not in lowest terms: '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) return num().str();
    return num().str() + "/" + den().str();
}

Rational::Int Rational::floor() const {
    Int n = num(), d = den();
    Int q = n / d;  // truncates toward zero
    if (n < 0 && q * d != n) q -= 1;
    return q;
}

Rational::Int Rational::ceil() const {
    Int f = floor();
    return (Rational(f, 1) == *this) ? f : Int(f + 1);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace gapsmith
