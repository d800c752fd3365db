#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "panto/numerics.hpp"

using panto::BigInt;
using panto::Rational;

namespace {

// seeded generator for property-style checks
Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> num(-1000, 1000);
    std::uniform_int_distribution<long long> den(1, 1000);
    return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

}  // namespace

TEST_CASE("rational arithmetic basics") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(5, 6) * Rational(0) == Rational(0));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(-4, -6) == Rational(2, 3));
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational normalization") {
    std::mt19937_64 rng(20240901);
    for (int i = 0; i < 200; ++i) {
        const Rational x = random_rational(rng);
        CHECK(x.denominator() > 0);
        CHECK(gcd(abs(x.numerator()), x.denominator()) == 1);
    }
    CHECK(Rational(0, 17).numerator() == 0);
    CHECK(Rational(0, 17).denominator() == 1);
}

TEST_CASE("field laws on random triples") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
        const Rational x = random_rational(rng);
        const Rational y = random_rational(rng);
        const Rational z = random_rational(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        if (!z.is_zero()) CHECK((x / z) * z == x);
    }
}

TEST_CASE("rational literal parsing") {
    CHECK(Rational::parse("5/72") == Rational(5, 72));
    CHECK(Rational::parse("-1/3") == Rational(-1, 3));
    CHECK(Rational::parse("42") == Rational(42));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);

    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const Rational x = random_rational(rng);
        CHECK(Rational::parse(x.str()) == x);
    }
}

TEST_CASE("pow_int") {
    CHECK(panto::pow_int(2, -3) == Rational(1, 8));
    CHECK(panto::pow_int(2, 0) == Rational(1));
    CHECK(panto::pow_int(3, 4) == Rational(81));
    CHECK_THROWS_AS(panto::pow_int(0, 2), std::invalid_argument);
}

TEST_CASE("factorial") {
    CHECK(panto::factorial(0) == 1);
    CHECK(panto::factorial(5) == 120);
    CHECK_THROWS_AS(panto::factorial(65), std::invalid_argument);
    CHECK(panto::factorial(65, 70) > 0);  // bound is configurable
    CHECK_THROWS_AS(panto::factorial(-1), std::invalid_argument);
}

TEST_CASE("binomial") {
    CHECK(panto::binomial(5, 2) == 10);
    CHECK(panto::binomial(7, 0) == 1);
    CHECK(panto::binomial(7, 7) == 1);
    CHECK(panto::binomial(3, 5) == 0);
    CHECK(panto::binomial(40, 20) == BigInt("137846528820"));
}

TEST_CASE("decimal rendering rounds half to even") {
    CHECK(Rational(5, 72).to_decimal(6) == "0.069444");
    CHECK(Rational(1, 2).to_decimal(3) == "0.500");
    CHECK(Rational(-1, 3).to_decimal(4) == "-0.3333");
    CHECK(Rational(1, 8).to_decimal(2) == "0.12");   // ties to even, down
    CHECK(Rational(3, 8).to_decimal(2) == "0.38");   // ties to even, up
    CHECK(Rational(67, 72).to_decimal(6) == "0.930556");
    CHECK(Rational(2).to_decimal(3) == "2.000");
    CHECK(Rational(-1, 30000).to_decimal(2) == "0.00");  // sign dropped at zero
    CHECK_THROWS_AS(Rational(1).to_decimal(0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1).to_decimal(51), std::invalid_argument);
}

TEST_CASE("decimal rendering parse-back error bound") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        const Rational x = random_rational(rng);
        for (int digits : {2, 6, 12}) {
            const std::string s = x.to_decimal(digits);
            // reparse the fixed-point string exactly
            const auto dot = s.find('.');
            std::string int_part = s.substr(0, dot);
            const std::string frac = s.substr(dot + 1);
            const bool neg = int_part[0] == '-';
            if (neg) int_part.erase(0, 1);
            Rational parsed = Rational::parse(int_part) +
                              Rational::parse(frac) / panto::pow_int(10, static_cast<int>(frac.size()));
            if (neg) parsed = -parsed;
            Rational bound = panto::pow_int(10, 1 - digits);
            const Rational mag = abs(x);
            if (mag > Rational(1)) bound *= mag;
            CHECK(abs(parsed - x) < bound);
        }
    }
}

TEST_CASE("trapezoid rule") {
    SUBCASE("constant") {
        const std::vector<double> ones(5, 1.0);
        CHECK(panto::trapezoid(ones, 0.25) == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("linear is exact") {
        const std::vector<double> f{0.0, 0.5, 1.0};
        CHECK(panto::trapezoid(f, 0.5) == doctest::Approx(0.5).epsilon(1e-15));
    }
    SUBCASE("quadratic carries the textbook error") {
        const std::vector<double> f{0.0, 0.25, 1.0};
        CHECK(panto::trapezoid(f, 0.5) == doctest::Approx(0.375).epsilon(1e-15));
    }
    SUBCASE("fewer than two samples") {
        const std::vector<double> f{1.0};
        CHECK_THROWS_AS(panto::trapezoid(f, 0.5), std::invalid_argument);
    }
    SUBCASE("exact variant agrees on affine data") {
        const std::vector<Rational> f{Rational(1, 3), Rational(5, 6), Rational(4, 3)};
        CHECK(panto::trapezoid_exact(f, Rational(1, 2)) == Rational(5, 6));
    }
}
