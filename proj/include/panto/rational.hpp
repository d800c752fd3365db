#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace panto {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational. Always normalized: gcd(num, den) = 1,
/// den > 0, zero stored as 0/1. This is the value type of the whole exact
/// pipeline; floating point never enters except in the verifier's oracles.
///
/// The representation is a private detail so it can be swapped (e.g. for a
/// factored power-of-lambda form) without touching callers.
class Rational {
  public:
    Rational() = default;
    Rational(long long n) : value_(n) {}  // NOLINT: implicit by design
    Rational(const BigInt& n) : value_(n) {}
    Rational(BigInt num, BigInt den);

    /// Parses `p/q` or `p`, optional leading minus. Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_ < 0 ? -1 : (value_.is_zero() ? 0 : 1); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws std::domain_error on 0

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.value_ < b.value_   ? std::strong_ordering::less
               : a.value_ == b.value_ ? std::strong_ordering::equal
                                      : std::strong_ordering::greater;
    }

    /// Nearest double; fine for oracle comparisons, never used in the exact path.
    double to_double() const { return value_.convert_to<double>(); }

    /// `p/q`, or just `p` when the denominator is 1.
    std::string str() const;

    /// Fixed-point decimal with `digits` fractional digits, round-half-even.
    /// digits must be in [1, 50].
    std::string to_decimal(int digits) const;

    friend Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x);

  private:
    boost::multiprecision::cpp_rational value_;

    explicit Rational(boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}
};

}  // namespace panto
