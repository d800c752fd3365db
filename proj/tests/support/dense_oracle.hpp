#pragma once

// Test-only oracle: solves the moment relations as one dense exact linear
// system, independently of the level-by-level engine. Unknowns are
// (mt_a^0..2, mt_b^0..2, s3) where s3 = lambda_a*mt_a^3 + lambda_b*mt_b^3 is
// the only way level 3 enters the assembled relations; equations are the two
// level-0 constraints plus the relation instances (0..2, a/b). Plain
// Gauss-Jordan elimination with exact pivots.

#include <array>
#include <optional>
#include <vector>

#include "panto/moments.hpp"
#include "panto/numerics.hpp"

namespace panto::testing {

struct DenseSolution {
    std::array<Rational, 3> mt_a;
    std::array<Rational, 3> mt_b;
    Rational level3_sum;
};

inline std::optional<DenseSolution> solve_dense(const Substitution& sub,
                                                const BoundaryData& boundary) {
    constexpr int kCols = 7;  // a0 a1 a2 b0 b1 b2 s3
    const int lambda = sub.lambda();
    std::vector<std::array<Rational, kCols + 1>> rows;

    {
        std::array<Rational, kCols + 1> row{};
        const int start_col = sub.start_letter() == Letter::a ? 0 : 3;
        row[static_cast<std::size_t>(start_col)] = Rational(1);
        row[kCols] = boundary.f1 - boundary.f0;
        rows.push_back(row);
    }
    {
        std::array<Rational, kCols + 1> row{};
        row[0] = Rational(sub.letter_count(Letter::a));
        row[3] = Rational(sub.letter_count(Letter::b));
        rows.push_back(row);
    }
    for (int ell = 0; ell <= 2; ++ell) {
        for (Letter alpha : {Letter::a, Letter::b}) {
            std::array<Rational, kCols + 1> row{};
            for (int q = 0; q <= ell + 1; ++q) {
                if (q <= 2) {
                    row[static_cast<std::size_t>(q)] += delta_level(sub, Letter::a, alpha, ell + 1 - q);
                    row[static_cast<std::size_t>(3 + q)] += delta_level(sub, Letter::b, alpha, ell + 1 - q);
                } else {
                    row[6] += Rational(1);  // the q=3 term is exactly s3
                }
            }
            const int diag = (alpha == Letter::a ? 0 : 3) + ell;
            row[static_cast<std::size_t>(diag)] -= pow_int(lambda, ell);
            row[kCols] = -(pow_int(lambda, ell + 1) / Rational(factorial(ell + 1))) * boundary.f0;
            rows.push_back(row);
        }
    }

    int pivot_row = 0;
    for (int col = 0; col < kCols && pivot_row < static_cast<int>(rows.size()); ++col) {
        int found = -1;
        for (int r = pivot_row; r < static_cast<int>(rows.size()); ++r) {
            if (!rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                found = r;
                break;
            }
        }
        if (found < 0) return std::nullopt;  // a free unknown: the system must pin all of them
        std::swap(rows[static_cast<std::size_t>(pivot_row)], rows[static_cast<std::size_t>(found)]);
        auto& prow = rows[static_cast<std::size_t>(pivot_row)];
        const Rational inv = prow[static_cast<std::size_t>(col)];
        for (auto& v : prow) v /= inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == pivot_row) continue;
            auto& row = rows[static_cast<std::size_t>(r)];
            const Rational f = row[static_cast<std::size_t>(col)];
            if (f.is_zero()) continue;
            for (int c = 0; c <= kCols; ++c)
                row[static_cast<std::size_t>(c)] -= f * prow[static_cast<std::size_t>(c)];
        }
        ++pivot_row;
    }

    DenseSolution s;
    for (int r = 0; r < pivot_row; ++r) {
        const auto& row = rows[static_cast<std::size_t>(r)];
        int lead = -1;
        for (int c = 0; c < kCols; ++c)
            if (!row[static_cast<std::size_t>(c)].is_zero()) {
                lead = c;
                break;
            }
        if (lead < 0) continue;
        const Rational& value = row[kCols];
        if (lead < 3)
            s.mt_a[static_cast<std::size_t>(lead)] = value;
        else if (lead < 6)
            s.mt_b[static_cast<std::size_t>(lead - 3)] = value;
        else
            s.level3_sum = value;
    }
    return s;
}

}  // namespace panto::testing
