#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "panto/evaluator.hpp"
#include "panto/numerics.hpp"

using panto::BoundaryData;
using panto::GridPoint;
using panto::GridTable;
using panto::Letter;
using panto::Rational;
using panto::Substitution;
using panto::TabulateOptions;

namespace {

const Substitution& thue_morse() {
    static const Substitution s = Substitution::parse("a:ab,b:ba");
    return s;
}

const Substitution& quartic() {
    static const Substitution s = Substitution::parse("a:abab,b:abba");
    return s;
}

const BoundaryData kUnit{Rational(0), Rational(1)};

}  // namespace

TEST_CASE("refinement coefficients") {
    CHECK(panto::vk_coefficient(0, 0, 2) == Rational(1));
    CHECK(panto::vk_coefficient(1, 0, 2) == Rational(1, 2));
    CHECK(panto::vk_coefficient(1, 1, 2) == Rational(1, 4));
    CHECK(panto::vk_coefficient(3, 2, 3) == Rational(1, 6) * panto::pow_int(3, -6));
    CHECK_THROWS_AS(panto::vk_coefficient(1, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(panto::vk_coefficient(2, -1, 2), std::invalid_argument);

    // exponents stay integral and the coefficients positive through the
    // depths the pipeline uses
    for (int ell = 0; ell <= 12; ++ell) {
        const auto coeff = panto::StepCoefficients::make(ell, 3);
        CHECK(coeff.target_level == ell + 1);
        CHECK(coeff.v.size() == static_cast<std::size_t>(ell) + 1);
        for (const auto& v : coeff.v) CHECK(v.sign() > 0);
        CHECK(coeff.remainder_weight == panto::pow_int(3, -(ell * (ell + 1)) / 2));
    }
}

TEST_CASE("grid reproduces the classical quarter values") {
    const GridTable grid = panto::tabulate(thue_morse(), kUnit, 2, 1);
    CHECK(grid.value(2, 0) == Rational(0));
    CHECK(grid.value(2, 1) == Rational(5, 72));
    CHECK(grid.value(2, 2) == Rational(1, 2));
    CHECK(grid.value(2, 3) == Rational(67, 72));
    CHECK(grid.value(2, 4) == Rational(1));
}

TEST_CASE("step increments match the hand-derived values") {
    const GridTable grid = panto::tabulate(thue_morse(), kUnit, 2, 1);
    CHECK(panto::step_increment(grid, 0, 0) == Rational(1, 2));    // f(1/2) - f(0)
    CHECK(panto::step_increment(grid, 1, 0) == Rational(5, 72));   // f(1/4) - f(0)
    CHECK(panto::step_increment(grid, 1, 2) == Rational(31, 72));  // f(3/4) - f(1/2)
    CHECK_THROWS_AS(panto::step_increment(grid, 2, 0), std::out_of_range);
    CHECK_THROWS_AS(panto::step_increment(grid, 0, 4), std::out_of_range);
}

TEST_CASE("level 0 is the block partial-sum walk") {
    const GridTable grid = panto::tabulate(thue_morse(), kUnit, 0, 4);
    CHECK(grid.value(0, 0) == Rational(0));
    CHECK(grid.value(0, 1) == Rational(1));
    CHECK(grid.value(0, 2) == Rational(0));
    CHECK(grid.value(0, 3) == Rational(-1));
    CHECK(grid.value(0, 4) == Rational(0));
}

TEST_CASE("zero boundary produces the all-zero grid") {
    for (const Substitution* sub : {&thue_morse(), &quartic()}) {
        const GridTable grid = panto::tabulate(*sub, {Rational(0), Rational(0)}, 4, 1);
        for (int j = 0; j <= 4; ++j)
            for (std::int64_t n = 0; n <= grid.max_index(); ++n)
                CHECK(grid.value(j, n) == Rational(0));
    }
}

TEST_CASE("value lookup resolves equivalent representations") {
    const GridTable grid = panto::tabulate(thue_morse(), kUnit, 2, 1);
    CHECK(grid.value_at({1, 1}) == Rational(1, 2));
    CHECK(grid.value_at({2, 2}) == Rational(1, 2));
    CHECK(grid.value_at({3, 4}) == Rational(1, 2));  // finer alias of the same point
    CHECK(grid.value_at({0, 1}) == Rational(1));
    CHECK_THROWS_AS(grid.value_at({9, 1}), std::out_of_range);
    CHECK_THROWS_AS(grid.value_at({2, 5}), std::out_of_range);
    CHECK_THROWS_AS(grid.value_at({0, -1}), std::out_of_range);
}

TEST_CASE("grid coherence across levels, arbitrary boundary data") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    for (const Substitution* sub : {&thue_morse(), &quartic()}) {
        const int lambda = sub->lambda();
        for (int trial = 0; trial < 4; ++trial) {
            const BoundaryData boundary{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
            const GridTable grid = panto::tabulate(*sub, boundary, 3, 2);
            for (int j = 0; j < 3; ++j)
                for (std::int64_t n = 0; lambda * n <= grid.max_index(); ++n)
                    CHECK(grid.value(j, n) == grid.value(j + 1, lambda * n));
        }
    }
}

TEST_CASE("endpoint anchoring and block-boundary constancy") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    for (const Substitution* sub : {&thue_morse(), &quartic()}) {
        const BoundaryData boundary{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
        const int depth = 3;
        const GridTable grid = panto::tabulate(*sub, boundary, depth, 2);
        for (int j = 0; j <= depth; ++j) CHECK(grid.value(j, 0) == boundary.f0);
        // the value at the real point 1 on the finest level is f1
        std::int64_t one = 1;
        for (int j = 0; j < depth; ++j) one *= sub->lambda();
        CHECK(grid.value(depth, one) == boundary.f1);
        // integer multiples of lambda carry f0
        for (std::int64_t n = 0; sub->lambda() * n <= grid.max_index(); ++n)
            CHECK(grid.value(0, sub->lambda() * n) == boundary.f0);
    }
}

TEST_CASE("tabulation is linear in the boundary data") {
    const GridTable gp = panto::tabulate(thue_morse(), {Rational(0), Rational(1)}, 3, 1);
    const GridTable gq = panto::tabulate(thue_morse(), {Rational(1), Rational(0)}, 3, 1);
    const GridTable gc = panto::tabulate(thue_morse(), {Rational(2, 3), Rational(-1, 5)}, 3, 1);
    // (2/3, -1/5) = (2/3)*q + (-1/5)*p on the boundary, so everywhere
    const Rational c_p(-1, 5);
    const Rational c_q(2, 3);
    for (int j = 0; j <= 3; ++j)
        for (std::int64_t n = 0; n <= gc.max_index(); ++n)
            CHECK(gc.value(j, n) == c_p * gp.value(j, n) + c_q * gq.value(j, n));
}

TEST_CASE("resource cap") {
    TabulateOptions opt;
    opt.max_values = 100;
    CHECK_THROWS_AS(panto::tabulate(thue_morse(), kUnit, 10, 1, opt), panto::ResourceLimitError);
    opt.max_values = 10'000;
    CHECK_NOTHROW(panto::tabulate(thue_morse(), kUnit, 6, 1, opt));
}

TEST_CASE("thread count does not change the values") {
    TabulateOptions serial;
    serial.threads = 1;
    TabulateOptions parallel;
    parallel.threads = 4;
    const GridTable g1 = panto::tabulate(thue_morse(), kUnit, 7, 2, serial);
    const GridTable g4 = panto::tabulate(thue_morse(), kUnit, 7, 2, parallel);
    REQUIRE(g1.max_index() == g4.max_index());
    for (int j = 0; j <= 7; ++j)
        for (std::int64_t n = 0; n <= g1.max_index(); ++n)
            CHECK(g1.value(j, n) == g4.value(j, n));
}

TEST_CASE("word prefix covers the finest level") {
    const GridTable grid = panto::tabulate(quartic(), kUnit, 2, 3);
    CHECK(grid.word().size() == static_cast<std::size_t>(grid.max_index()));
    CHECK(grid.max_index() == 3 * 16);
}
