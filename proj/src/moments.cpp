#include "panto/moments.hpp"

#include <stdexcept>
#include <utility>

#include "panto/numerics.hpp"

namespace panto {

MomentTable::MomentTable(Substitution sub, BoundaryData boundary, RelationForm form)
    : sub_(std::move(sub)), boundary_(std::move(boundary)), form_(form), deltas_(sub_, 1) {}

MomentTable MomentTable::init(const Substitution& sub, BoundaryData boundary, RelationForm form) {
    MomentTable t(sub, std::move(boundary), form);
    const Letter u0 = sub.start_letter();
    const Rational diff = t.boundary_.f1 - t.boundary_.f0;
    // mt at the fixed point's first letter is f(1) - f(0); the other letter is
    // pinned by lambda_a*mt_a + lambda_b*mt_b = 0.
    Rational mt_start = diff;
    Rational mt_other = -Rational(sub.letter_count(u0), sub.letter_count(other(u0))) * diff;
    std::array<Rational, 2> level0;
    level0[index_of(u0)] = std::move(mt_start);
    level0[index_of(other(u0))] = std::move(mt_other);
    t.levels_.push_back(std::move(level0));
    return t;
}

const Rational& MomentTable::normalized(int level, Letter alpha) const {
    if (level < 0 || level > max_level()) throw std::out_of_range("MomentTable: level not populated");
    return levels_[static_cast<std::size_t>(level)][index_of(alpha)];
}

Rational MomentTable::unnormalized(int level, Letter alpha) const {
    return unnormalize(level, normalized(level, alpha), sub_.lambda());
}

Rational unnormalize(int ell, const Rational& mt, int lambda) {
    return Rational(factorial(ell)) * pow_int(lambda, ell) * mt;
}

void MomentTable::extend(int level) {
    const int lambda = sub_.lambda();
    const Rational lambda_a(sub_.letter_count(Letter::a));
    const Rational lambda_b(sub_.letter_count(Letter::b));
    deltas_.ensure(level + 1);
    const auto delta_a_diff = [&](int k) {
        // coefficient of the difference recursion; zero at k = 0, one at k = 1
        return deltas_.delta(Letter::a, Letter::a, k) - deltas_.delta(Letter::a, Letter::b, k);
    };
    while (max_level() < level) {
        const int j = max_level() + 1;
        Rational diff_num;  // numerator of D(j)
        Rational sum;       // S(j)
        if (form_ == RelationForm::standard) {
            for (int q = 0; q < j; ++q)
                diff_num += delta_a_diff(j + 1 - q) * (levels_[q][0] - levels_[q][1]);
            const Rational diff = diff_num / (pow_int(lambda, j) - 1);
            sum = -(pow_int(lambda, j) / Rational(factorial(j))) * boundary_.f0 +
                  pow_int(lambda, j - 1) * levels_[static_cast<std::size_t>(j - 1)][0];
            for (int q = 0; q < j; ++q)
                sum -= deltas_.delta(Letter::a, Letter::a, j - q) * levels_[q][0] +
                       deltas_.delta(Letter::b, Letter::a, j - q) * levels_[q][1];
            std::array<Rational, 2> row{(sum + lambda_b * diff) / lambda,
                                        (sum - lambda_a * diff) / lambda};
            levels_.push_back(std::move(row));
            // the b-instance one index down is implied by the construction;
            // a nonzero residual here means the derivation itself is broken
            if (!relation_residual(j - 1, Letter::b).is_zero())
                throw std::logic_error("MomentTable: implied relation instance failed at level " +
                                       std::to_string(j));
        } else {
            // alternating diagnostic form: (-1)^q factors and the heavier RHS
            for (int q = 0; q < j; ++q) {
                const Rational term = delta_a_diff(j + 1 - q) * (levels_[q][0] - levels_[q][1]);
                diff_num += (q % 2 == 0) ? term : -term;
            }
            const Rational denom = pow_int(lambda, j + 1) - Rational(j % 2 == 0 ? 1 : -1);
            const Rational diff = diff_num / denom;
            Rational rhs = -(pow_int(lambda, j + 1) / Rational(factorial(j - 1))) * boundary_.f0 +
                           pow_int(lambda, j) * levels_[static_cast<std::size_t>(j - 1)][0];
            Rational lhs_known;
            for (int q = 0; q < j; ++q) {
                const Rational term = deltas_.delta(Letter::a, Letter::a, j - q) * levels_[q][0] +
                                      deltas_.delta(Letter::b, Letter::a, j - q) * levels_[q][1];
                lhs_known += (q % 2 == 0) ? term : -term;
            }
            Rational sum_signed = rhs - lhs_known;  // (-1)^j * (lambda_a mt_a + lambda_b mt_b)
            sum = (j % 2 == 0) ? sum_signed : -sum_signed;
            std::array<Rational, 2> row{(sum + lambda_b * diff) / lambda,
                                        (sum - lambda_a * diff) / lambda};
            levels_.push_back(std::move(row));
        }
    }
}

Rational MomentTable::relation_residual(int ell, Letter alpha) const {
    return relation_residual(ell, alpha, form_);
}

Rational MomentTable::relation_residual(int ell, Letter alpha, RelationForm form) const {
    if (ell < 0) throw std::invalid_argument("relation_residual: negative index");
    if (ell + 1 > max_level())
        throw std::out_of_range("relation_residual: levels 0.." + std::to_string(ell + 1) +
                                " must be populated");
    // extend(ell+1) has run (checked above), so deltas_ reaches ell+2 already
    const int lambda = sub_.lambda();
    Rational lhs;
    for (int q = 0; q <= ell + 1; ++q) {
        const Rational term =
            deltas_.delta(Letter::a, alpha, ell + 1 - q) * levels_[static_cast<std::size_t>(q)][0] +
            deltas_.delta(Letter::b, alpha, ell + 1 - q) * levels_[static_cast<std::size_t>(q)][1];
        if (form == RelationForm::alternating && q % 2 == 1)
            lhs -= term;
        else
            lhs += term;
    }
    Rational rhs;
    if (form == RelationForm::standard) {
        rhs = -(pow_int(lambda, ell + 1) / Rational(factorial(ell + 1))) * boundary_.f0 +
              pow_int(lambda, ell) * normalized(ell, alpha);
    } else {
        rhs = -(pow_int(lambda, ell + 2) / Rational(factorial(ell))) * boundary_.f0 +
              pow_int(lambda, ell + 1) * normalized(ell, alpha);
    }
    return lhs - rhs;
}

std::optional<MomentTable::Inconsistency> MomentTable::first_inconsistency(int max_ell) {
    extend(max_ell + 1);
    for (int ell = 0; ell <= max_ell; ++ell) {
        for (Letter alpha : {Letter::a, Letter::b}) {
            Rational r = relation_residual(ell, alpha);
            if (!r.is_zero()) return Inconsistency{ell, alpha, std::move(r)};
        }
    }
    return std::nullopt;
}

}  // namespace panto
