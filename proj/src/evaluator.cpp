#include "panto/evaluator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "panto/numerics.hpp"

namespace panto {

Rational vk_coefficient(int ell, int k, int lambda) {
    if (ell < 0 || k < 0 || k > ell) throw std::invalid_argument("vk_coefficient: need 0 <= k <= ell");
    // exponent (k+1)(k/2 - ell); twice it is (k+1)(k - 2 ell), always even
    const long long twice = static_cast<long long>(k + 1) * (k - 2LL * ell);
    if (twice % 2 != 0) throw std::logic_error("vk_coefficient: non-integer exponent");
    return pow_int(lambda, twice / 2) / Rational(factorial(k + 1));
}

StepCoefficients StepCoefficients::make(int ell, int lambda) {
    StepCoefficients c;
    c.target_level = ell + 1;
    c.v.reserve(static_cast<std::size_t>(ell) + 1);
    for (int k = 0; k <= ell; ++k) {
        Rational vk = vk_coefficient(ell, k, lambda);
        if (vk.sign() <= 0) throw std::logic_error("StepCoefficients: V_k must be positive");
        c.v.push_back(std::move(vk));
    }
    const long long twice = -static_cast<long long>(ell) * (ell + 1);
    if (twice % 2 != 0) throw std::logic_error("StepCoefficients: non-integer remainder exponent");
    c.remainder_weight = pow_int(lambda, twice / 2);
    return c;
}

const Rational& GridTable::value(int level, std::int64_t index) const {
    if (level < 0 || level > depth_)
        throw std::out_of_range("GridTable: level " + std::to_string(level) + " outside stored depth " +
                                std::to_string(depth_));
    if (index < 0 || index > max_index_)
        throw std::out_of_range("GridTable: index " + std::to_string(index) + " outside stored extent");
    return levels_[static_cast<std::size_t>(level)][static_cast<std::size_t>(index)];
}

const Rational& GridTable::value_at(GridPoint p) const {
    int level = p.level;
    std::int64_t index = p.index;
    if (level < 0) throw std::out_of_range("GridTable: negative level");
    const int lam = lambda();
    // reduce representations finer than the stored depth when possible
    while (level > depth_) {
        if (index % lam != 0)
            throw std::out_of_range("GridTable: point finer than stored depth");
        index /= lam;
        --level;
    }
    return value(level, index);
}

GridTable tabulate(const Substitution& sub, BoundaryData boundary, int depth, std::int64_t extent,
                   const TabulateOptions& options) {
    if (depth < 0) throw std::invalid_argument("tabulate: depth must be >= 0");
    if (extent < 1) throw std::invalid_argument("tabulate: extent must be >= 1");

    const int lambda = sub.lambda();
    const auto over_cap = [&]() {
        return ResourceLimitError("tabulate: depth " + std::to_string(depth) + ", extent " +
                                  std::to_string(extent) + " exceeds the cap of " +
                                  std::to_string(options.max_values) +
                                  " stored values (raise --max-values or lower depth/extent)");
    };
    std::int64_t n_points = extent;  // indices per level, extent * lambda^depth
    for (int j = 0; j < depth; ++j) {
        if (static_cast<std::uint64_t>(n_points) > options.max_values) throw over_cap();
        n_points *= lambda;
    }
    const std::uint64_t total =
        static_cast<std::uint64_t>(depth + 1) * (static_cast<std::uint64_t>(n_points) + 1);
    if (total > options.max_values) throw over_cap();

    MomentTable moments = MomentTable::init(sub, std::move(boundary), options.form);
    moments.extend(depth);
    Word word = fixed_point_prefix(sub, static_cast<std::size_t>(n_points));

    GridTable grid(std::move(moments), std::move(word), depth, extent);
    grid.max_index_ = n_points;
    grid.levels_.reserve(static_cast<std::size_t>(depth) + 1);
    const MomentTable& mt = grid.moments_;

    // level 0: partial sums of the level-0 block moments along the fixed point
    {
        std::vector<Rational> level0;
        level0.reserve(static_cast<std::size_t>(n_points) + 1);
        level0.push_back(mt.boundary().f0);
        for (std::int64_t n = 0; n < n_points; ++n)
            level0.push_back(level0.back() + mt.normalized(0, grid.word_[static_cast<std::size_t>(n)]));
        grid.levels_.push_back(std::move(level0));
    }

    const unsigned threads = options.threads == 0 ? 1 : options.threads;
    std::vector<Rational> steps(static_cast<std::size_t>(n_points));
    for (int j = 1; j <= depth; ++j) {
        const int ell = j - 1;
        const StepCoefficients coeff = StepCoefficients::make(ell, lambda);
        auto compute_range = [&](std::int64_t lo, std::int64_t hi) {
            for (std::int64_t n = lo; n < hi; ++n) {
                Rational s;
                for (int k = 0; k <= ell; ++k)
                    s += coeff.v[static_cast<std::size_t>(k)] *
                         grid.levels_[static_cast<std::size_t>(ell - k)][static_cast<std::size_t>(n)];
                s += coeff.remainder_weight *
                     mt.normalized(j, grid.word_[static_cast<std::size_t>(n)]);
                steps[static_cast<std::size_t>(n)] = std::move(s);
            }
        };
        if (threads <= 1 || n_points < 256) {
            compute_range(0, n_points);
        } else {
            // increments are independent; the later accumulation fixes the order
            std::vector<std::thread> pool;
            const std::int64_t chunk = (n_points + threads - 1) / threads;
            for (unsigned t = 0; t < threads; ++t) {
                const std::int64_t lo = static_cast<std::int64_t>(t) * chunk;
                const std::int64_t hi = std::min<std::int64_t>(n_points, lo + chunk);
                if (lo >= hi) break;
                pool.emplace_back(compute_range, lo, hi);
            }
            for (auto& th : pool) th.join();
        }
        std::vector<Rational> level;
        level.reserve(static_cast<std::size_t>(n_points) + 1);
        level.push_back(mt.boundary().f0);
        for (std::int64_t n = 0; n < n_points; ++n)
            level.push_back(level.back() + steps[static_cast<std::size_t>(n)]);
        grid.levels_.push_back(std::move(level));
    }
    return grid;
}

Rational step_increment(const GridTable& grid, int ell, std::int64_t n) {
    if (ell < 0 || ell + 1 > grid.depth())
        throw std::out_of_range("step_increment: target level outside grid depth");
    if (n < 0 || n >= grid.max_index())
        throw std::out_of_range("step_increment: index outside stored extent");
    if (static_cast<std::size_t>(n) >= grid.word().size())
        throw std::out_of_range("step_increment: index outside word prefix");
    const StepCoefficients coeff = StepCoefficients::make(ell, grid.lambda());
    Rational s;
    for (int k = 0; k <= ell; ++k) s += coeff.v[static_cast<std::size_t>(k)] * grid.value(ell - k, n);
    s += coeff.remainder_weight * grid.moments().normalized(ell + 1, grid.word()[static_cast<std::size_t>(n)]);
    return s;
}

}  // namespace panto
