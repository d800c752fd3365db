#include "panto/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace panto {

namespace {

BigInt pow10(int digits) {
    BigInt p = 1;
    for (int i = 0; i < digits; ++i) p *= 10;
    return p;
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) {
    if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
    // cpp_rational's two-argument constructor rejects negative denominators.
    if (den < 0) {
        num = -num;
        den = -den;
    }
    value_ = boost::multiprecision::cpp_rational(std::move(num), std::move(den));
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&](const char* why) {
        return std::invalid_argument("invalid rational literal '" + std::string(text) + "': " + why);
    };
    if (text.empty()) throw bad("empty");
    const auto slash = text.find('/');
    const auto parse_int = [&](std::string_view part, const char* what) {
        if (part.empty()) throw bad(what);
        std::size_t i = 0;
        bool neg = false;
        if (part[0] == '-') {
            neg = true;
            i = 1;
            if (i == part.size()) throw bad(what);
        }
        BigInt v = 0;
        for (; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) throw bad(what);
            v = v * 10 + (part[i] - '0');
        }
        return neg ? BigInt(-v) : v;
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text, "bad integer"));
    BigInt num = parse_int(text.substr(0, slash), "bad numerator");
    BigInt den = parse_int(text.substr(slash + 1), "bad denominator");
    if (den.is_zero()) throw bad("zero denominator");
    return Rational(std::move(num), std::move(den));
}

Rational Rational::operator-() const { return Rational(-value_); }

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

std::string Rational::str() const {
    std::string s = numerator().str();
    if (denominator() != 1) {
        s += '/';
        s += denominator().str();
    }
    return s;
}

std::string Rational::to_decimal(int digits) const {
    if (digits < 1 || digits > 50) throw std::invalid_argument("to_decimal: digits must be in [1, 50]");
    const BigInt q = denominator();
    BigInt scaled = abs(numerator()) * pow10(digits);
    BigInt quot = scaled / q;
    const BigInt rem = scaled % q;
    // round half to even
    const BigInt twice = rem * 2;
    if (twice > q || (twice == q && (quot & 1) != 0)) ++quot;
    const BigInt unit = pow10(digits);
    std::string frac = BigInt(quot % unit).str();
    frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
    std::string out;
    if (sign() < 0 && quot != 0) out += '-';
    out += BigInt(quot / unit).str();
    out += '.';
    out += frac;
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace panto
