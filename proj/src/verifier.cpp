#include "panto/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "json.hpp"
#include "panto/numerics.hpp"

namespace panto {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Rational rational_pow(Rational base, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

BigInt bigint_pow(BigInt base, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

/// Index of a grid point on the finest stored level; throws when the point is
/// not representable there or lies outside the stored extent.
std::int64_t finest_index(const GridTable& grid, GridPoint p) {
    if (p.level < 0) throw std::out_of_range("grid point: negative level");
    const int lam = grid.lambda();
    std::int64_t index = p.index;
    int level = p.level;
    while (level > grid.depth()) {
        if (index % lam != 0) throw std::out_of_range("grid point: not representable at stored depth");
        index /= lam;
        --level;
    }
    for (; level < grid.depth(); ++level) {
        index *= lam;
        if (index > grid.max_index()) throw std::out_of_range("grid point: outside stored extent");
    }
    if (index < 0 || index > grid.max_index())
        throw std::out_of_range("grid point: outside stored extent");
    return index;
}

}  // namespace

bool ResidualReport::all_pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const ResidualEntry& e) { return e.pass; });
}

void ResidualReport::merge(ResidualReport other) {
    for (auto& e : other.entries) entries.push_back(std::move(e));
}

std::string ResidualReport::to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json item;
        item["case"] = e.case_name;
        item["depth"] = e.depth;
        item["residual"] = e.residual;
        item["tolerance"] = e.tolerance;
        item["pass"] = e.pass;
        arr.push_back(std::move(item));
    }
    return arr.dump(2);
}

void SuiteConfig::validate() const {
    for (std::size_t i = 1; i < depths.size(); ++i)
        if (depths[i] <= depths[i - 1])
            throw std::invalid_argument("SuiteConfig: depths must be strictly increasing");
    if (!depths.empty() && depths.front() < 0)
        throw std::invalid_argument("SuiteConfig: depths must be non-negative");
    if (equation_tolerance <= 0 || moment_tolerance <= 0 || vk_relative_tolerance <= 0)
        throw std::invalid_argument("SuiteConfig: tolerances must be positive");
    if (vk_mesh < 1) throw std::invalid_argument("SuiteConfig: mesh must be positive");
}

std::vector<int> SuiteConfig::depth_sweep(int lambda) const {
    if (!depths.empty()) return depths;
    if (lambda == 2) return {6, 8, 10};
    int d = 1;
    std::int64_t points = lambda;
    while (points * lambda <= 1024) {
        points *= lambda;
        ++d;
    }
    std::vector<int> sweep{std::max(1, d - 2), std::max(1, d - 1), d};
    sweep.erase(std::unique(sweep.begin(), sweep.end()), sweep.end());
    return sweep;
}

Rational equation_residual_exact(const GridTable& grid, GridPoint x, GridPoint y) {
    const int lam = grid.lambda();
    const std::int64_t fx = finest_index(grid, x);
    const std::int64_t fy = finest_index(grid, y);
    std::int64_t lo = fy * lam;
    std::int64_t hi = fx * lam;
    if (hi > grid.max_index() || lo > grid.max_index())
        throw std::out_of_range("equation_residual: lambda*x or lambda*y outside grid extent");
    bool swapped = false;
    if (lo > hi) {
        std::swap(lo, hi);
        swapped = true;
    }
    const Rational h = pow_int(lam, -grid.depth());
    std::vector<Rational> samples;
    samples.reserve(static_cast<std::size_t>(hi - lo) + 1);
    for (std::int64_t i = lo; i <= hi; ++i) samples.push_back(grid.value(grid.depth(), i));
    Rational integral = trapezoid_exact(samples, h);
    if (swapped) integral = -integral;
    const Rational delta = grid.value(grid.depth(), fx) - grid.value(grid.depth(), fy);
    return abs(integral - delta);
}

double equation_residual(const GridTable& grid, GridPoint x, GridPoint y) {
    return equation_residual_exact(grid, x, y).to_double();
}

Rational moment_quadrature_exact(const GridTable& grid, const MomentTable& moments, int ell,
                                 Letter alpha) {
    if (ell < 0) throw std::invalid_argument("moment_quadrature: negative level");
    const int lam = grid.lambda();
    const Word& word = grid.word();
    std::int64_t block = -1;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] == alpha) {
            block = static_cast<std::int64_t>(i);
            break;
        }
    if (block < 0) throw std::out_of_range("moment_quadrature: letter not found in word prefix");
    const std::int64_t per_unit = [&] {
        std::int64_t p = 1;
        for (int j = 0; j < grid.depth(); ++j) p *= lam;
        return p;
    }();
    const std::int64_t start = block * lam * per_unit;
    const std::int64_t len = lam * per_unit;  // the block [lambda n0, lambda (n0+1)]
    if (start + len > grid.max_index())
        throw std::out_of_range("moment_quadrature: grid extent does not cover the block for letter " +
                                std::string(1, to_char(alpha)));
    const Rational h = pow_int(lam, -grid.depth());
    std::vector<Rational> samples;
    samples.reserve(static_cast<std::size_t>(len) + 1);
    for (std::int64_t i = 0; i <= len; ++i) {
        const Rational t = Rational(i) * h;
        samples.push_back(rational_pow(Rational(lam) - t, ell) * grid.value(grid.depth(), start + i));
    }
    const Rational estimate =
        trapezoid_exact(samples, h) / (Rational(factorial(ell)) * pow_int(lam, ell));
    return abs(estimate - moments.normalized(ell, alpha));
}

double moment_quadrature_check(const GridTable& grid, const MomentTable& moments, int ell,
                               Letter alpha) {
    return moment_quadrature_exact(grid, moments, ell, alpha).to_double();
}

namespace {

/// G_1(u) = u; G_{j+1}(u) = integral of G_j(lambda s) ds over [0, u], by
/// composite Simpson with `mesh` panels per layer.
double vk_nested(int layer, double upper, int lambda, int mesh) {
    if (layer == 1) return upper;
    const int n = 2 * mesh;
    const double h = upper / n;
    double acc = vk_nested(layer - 1, 0.0, lambda, mesh) +
                 vk_nested(layer - 1, lambda * upper, lambda, mesh);
    for (int i = 1; i < n; ++i)
        acc += (i % 2 ? 4.0 : 2.0) * vk_nested(layer - 1, lambda * (i * h), lambda, mesh);
    return acc * h / 3.0;
}

}  // namespace

double vk_oracle(int ell, int k, int lambda, int mesh, std::uint64_t cost_cap) {
    if (k < 0 || k > ell || ell > 4)
        throw std::invalid_argument("vk_oracle: need 0 <= k <= ell <= 4");
    if (mesh < 1) throw std::invalid_argument("vk_oracle: mesh must be positive");
    std::uint64_t cost = 1;
    for (int i = 0; i < k; ++i) cost *= 2u * static_cast<std::uint64_t>(mesh) + 1u;
    if (cost > cost_cap)
        throw CostCapError("vk_oracle: " + std::to_string(cost) + " evaluations exceed the cost cap of " +
                           std::to_string(cost_cap));
    const double exact = vk_coefficient(ell, k, lambda).to_double();
    const double numeric = vk_nested(k + 1, pow_int(lambda, -ell).to_double(), lambda, mesh);
    return std::fabs(numeric - exact);
}

double remainder_weight_oracle(int ell, int lambda, int mesh, std::uint64_t cost_cap) {
    if (ell < 0 || ell > 4) throw std::invalid_argument("remainder_weight_oracle: need 0 <= ell <= 4");
    if (mesh < 1) throw std::invalid_argument("remainder_weight_oracle: mesh must be positive");
    std::uint64_t cost = 1;
    for (int i = 0; i < ell + 1; ++i) cost *= 2u * static_cast<std::uint64_t>(mesh) + 1u;
    if (cost > cost_cap)
        throw CostCapError("remainder_weight_oracle: " + std::to_string(cost) +
                           " evaluations exceed the cost cap of " + std::to_string(cost_cap));
    // the ell+2-fold volume over a constant block: weight * block moment of 1
    const Rational weight = pow_int(lambda, -(ell * (ell + 1)) / 2);
    const Rational block_moment(BigInt(lambda), factorial(ell + 2));
    const double exact = (weight * block_moment).to_double();
    const double numeric = vk_nested(ell + 2, pow_int(lambda, -ell).to_double(), lambda, mesh);
    return std::fabs(numeric - exact);
}

bool expansion_check(int ell, int k, int lambda, bool alternating_signs) {
    if (ell < 0 || k < 0 || k >= lambda)
        throw std::invalid_argument("expansion_check: need 0 <= k < lambda, ell >= 0");
    // degree ell+1 identity <=> agreement at ell+2 distinct points
    for (int i = 0; i <= ell + 1; ++i) {
        const Rational x(i);
        const Rational lhs =
            rational_pow(Rational(static_cast<long long>(lambda) * lambda - static_cast<long long>(k) * lambda) - x,
                         ell + 1);
        Rational rhs;
        for (int q = 0; q <= ell + 1; ++q) {
            BigInt coeff = binomial(ell + 1, q) * bigint_pow(lambda, ell + 1 - q) *
                           bigint_pow(lambda - k - 1, ell + 1 - q);
            if (alternating_signs && q % 2 == 1) coeff = -coeff;
            rhs += Rational(coeff) * rational_pow(Rational(lambda) - x, q);
        }
        if (lhs != rhs) return false;
    }
    return true;
}

bool linearity_check(const Substitution& sub, const BoundaryData& p, const BoundaryData& q,
                     const Rational& c1, const Rational& c2, int depth, std::uint64_t max_values) {
    TabulateOptions opt;
    opt.max_values = max_values;
    const BoundaryData combined{c1 * p.f0 + c2 * q.f0, c1 * p.f1 + c2 * q.f1};
    const GridTable gp = tabulate(sub, p, depth, 1, opt);
    const GridTable gq = tabulate(sub, q, depth, 1, opt);
    const GridTable gc = tabulate(sub, combined, depth, 1, opt);
    for (int j = 0; j <= depth; ++j)
        for (std::int64_t n = 0; n <= gc.max_index(); ++n)
            if (gc.value(j, n) != c1 * gp.value(j, n) + c2 * gq.value(j, n)) return false;
    for (int l = 0; l <= depth; ++l)
        for (Letter alpha : {Letter::a, Letter::b})
            if (gc.moments().normalized(l, alpha) !=
                c1 * gp.moments().normalized(l, alpha) + c2 * gq.moments().normalized(l, alpha))
                return false;
    return true;
}

bool zero_solution_check(const Substitution& sub, int depth, int levels, std::uint64_t max_values) {
    MomentTable moments = MomentTable::init(sub, BoundaryData{Rational(0), Rational(0)});
    moments.extend(levels);
    for (int l = 0; l <= levels; ++l)
        for (Letter alpha : {Letter::a, Letter::b})
            if (!moments.normalized(l, alpha).is_zero()) return false;
    TabulateOptions opt;
    opt.max_values = max_values;
    const GridTable grid = tabulate(sub, BoundaryData{Rational(0), Rational(0)}, depth, 1, opt);
    for (int j = 0; j <= depth; ++j)
        for (std::int64_t n = 0; n <= grid.max_index(); ++n)
            if (!grid.value(j, n).is_zero()) return false;
    return true;
}

bool identity_suite(const Substitution& sub, int lmax) {
    const int lambda = sub.lambda();
    for (Letter beta : {Letter::a, Letter::b}) {
        if (Rational(delta1_via_prefixes(sub, beta)) != delta_level(sub, Letter::a, beta, 1))
            return false;
    }
    for (int ell = 0; ell <= lmax; ++ell) {
        BigInt weighted = 0;
        for (int k = 0; k < lambda; ++k) {
            const int w = lambda - k - 1;
            weighted += (ell == 0) ? BigInt(1) : bigint_pow(w, ell);
        }
        const Rational target(weighted, factorial(ell));
        for (Letter beta : {Letter::a, Letter::b}) {
            if (delta_level(sub, Letter::a, beta, ell) + delta_level(sub, Letter::b, beta, ell) !=
                target)
                return false;
        }
    }
    return delta_level(sub, Letter::a, Letter::a, 0) == Rational(sub.letter_count(Letter::a)) &&
           delta_level(sub, Letter::b, Letter::a, 0) == Rational(sub.letter_count(Letter::b)) &&
           delta_level(sub, Letter::a, Letter::b, 0) == Rational(sub.letter_count(Letter::a)) &&
           delta_level(sub, Letter::b, Letter::b, 0) == Rational(sub.letter_count(Letter::b));
}

std::vector<ValidationReport> enumerate_reports(int lambda) {
    if (lambda < 1 || lambda > 20) throw std::invalid_argument("enumerate_reports: lambda out of range");
    std::vector<ValidationReport> reports;
    const std::uint32_t limit = 1u << lambda;
    const auto word_of = [&](std::uint32_t mask) {
        Word w;
        w.reserve(static_cast<std::size_t>(lambda));
        for (int i = 0; i < lambda; ++i)
            w.push_back(((mask >> i) & 1u) ? Letter::b : Letter::a);
        return w;
    };
    for (std::uint32_t ma = 0; ma < limit; ++ma) {
        const Word image_a = word_of(ma);
        for (std::uint32_t mb = 0; mb < limit; ++mb)
            reports.push_back(validate(image_a, word_of(mb)));
    }
    return reports;
}

std::vector<Substitution> enumerate_valid(int lambda) {
    std::vector<Substitution> subs;
    for (const ValidationReport& r : enumerate_reports(lambda))
        if (r.accepted) subs.push_back(Substitution::from_images(r.image_a, r.image_b));
    return subs;
}

namespace {

std::string point_label(const GridPoint& p, int lambda) {
    if (p.level == 0) return std::to_string(p.index);
    return std::to_string(p.index) + "/" + std::to_string(lambda) + "^" + std::to_string(p.level);
}

/// Strictly decreasing while nonzero; identically-zero tails allowed. An
/// exactly converged residual cannot keep shrinking, so zero is terminal.
bool decreasing_or_exact(const std::vector<Rational>& residuals) {
    for (std::size_t i = 1; i < residuals.size(); ++i) {
        const bool both_zero = residuals[i - 1].is_zero() && residuals[i].is_zero();
        if (!both_zero && !(residuals[i] < residuals[i - 1])) return false;
    }
    return true;
}

}  // namespace

ResidualReport equation_suite(const Substitution& sub, const BoundaryData& boundary,
                              const SuiteConfig& config, RelationForm form) {
    config.validate();
    ResidualReport report;
    const int lambda = sub.lambda();
    const std::vector<int> depths = config.depth_sweep(lambda);
    std::vector<std::pair<GridPoint, GridPoint>> points;
    if (lambda == 2) {
        points = {{{0, 1}, {0, 0}}, {{2, 3}, {2, 1}}, {{1, 1}, {0, 0}}};
    } else {
        points = {{{0, 1}, {0, 0}}, {{1, lambda - 1}, {1, 1}}, {{1, 1}, {0, 0}}};
    }
    std::vector<std::vector<Rational>> residuals(points.size());
    std::vector<double> walls;
    for (int depth : depths) {
        const auto t0 = Clock::now();
        TabulateOptions opt;
        opt.max_values = config.max_values;
        opt.form = form;
        const GridTable grid = tabulate(sub, boundary, depth, lambda, opt);
        for (std::size_t i = 0; i < points.size(); ++i)
            residuals[i].push_back(equation_residual_exact(grid, points[i].first, points[i].second));
        walls.push_back(ms_since(t0));
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        const std::string label = "equation(x=" + point_label(points[i].first, lambda) +
                                  ",y=" + point_label(points[i].second, lambda) + ")";
        for (std::size_t d = 0; d < depths.size(); ++d) {
            // the tolerance binds at the deepest sweep level; coarser entries
            // document the sweep the trend entry judges
            const double r = residuals[i][d].to_double();
            const bool final_depth = d + 1 == depths.size();
            report.add({label, depths[d], r, config.equation_tolerance,
                        !final_depth || r < config.equation_tolerance, walls[d]});
        }
        report.add({label + " trend", depths.back(), residuals[i].back().to_double(),
                    config.equation_tolerance, decreasing_or_exact(residuals[i]), 0.0});
    }
    return report;
}

ResidualReport moment_suite(const Substitution& sub, const BoundaryData& boundary,
                            const SuiteConfig& config, RelationForm form) {
    config.validate();
    ResidualReport report;
    const int lambda = sub.lambda();
    const std::vector<int> depths = config.depth_sweep(lambda);
    // the first block carrying each letter sits within the first image
    std::int64_t max_block = 0;
    {
        const Word head = fixed_point_prefix(sub, static_cast<std::size_t>(lambda));
        for (Letter alpha : {Letter::a, Letter::b})
            for (std::size_t i = 0; i < head.size(); ++i)
                if (head[i] == alpha) {
                    max_block = std::max<std::int64_t>(max_block, static_cast<std::int64_t>(i));
                    break;
                }
    }
    const std::int64_t extent = lambda * (max_block + 1);
    constexpr int kMaxMomentLevel = 3;
    std::vector<std::vector<Rational>> residuals(2 * (kMaxMomentLevel + 1));
    std::vector<double> walls;
    for (int depth : depths) {
        const auto t0 = Clock::now();
        TabulateOptions opt;
        opt.max_values = config.max_values;
        opt.form = form;
        const GridTable grid = tabulate(sub, boundary, depth, extent, opt);
        MomentTable moments = MomentTable::init(sub, boundary, form);
        moments.extend(std::max(kMaxMomentLevel, depth));
        for (int ell = 0; ell <= kMaxMomentLevel; ++ell)
            for (Letter alpha : {Letter::a, Letter::b})
                residuals[static_cast<std::size_t>(2 * ell) + index_of(alpha)].push_back(
                    moment_quadrature_exact(grid, moments, ell, alpha));
        walls.push_back(ms_since(t0));
    }
    for (int ell = 0; ell <= kMaxMomentLevel; ++ell) {
        for (Letter alpha : {Letter::a, Letter::b}) {
            const auto& rs = residuals[static_cast<std::size_t>(2 * ell) + index_of(alpha)];
            const std::string label =
                "moment_quadrature(l=" + std::to_string(ell) + "," + to_char(alpha) + ")";
            for (std::size_t d = 0; d < depths.size(); ++d) {
                const double r = rs[d].to_double();
                const bool final_depth = d + 1 == depths.size();
                report.add({label, depths[d], r, config.moment_tolerance,
                            !final_depth || r < config.moment_tolerance, walls[d]});
            }
            report.add({label + " trend", depths.back(), rs.back().to_double(),
                        config.moment_tolerance, decreasing_or_exact(rs), 0.0});
        }
    }
    return report;
}

ResidualReport vk_suite(int lambda, const SuiteConfig& config) {
    config.validate();
    ResidualReport report;
    for (int ell = 0; ell <= config.vk_max_order; ++ell) {
        for (int k = 0; k <= ell; ++k) {
            const auto t0 = Clock::now();
            const double residual = vk_oracle(ell, k, lambda, config.vk_mesh);
            const double tol =
                config.vk_relative_tolerance * vk_coefficient(ell, k, lambda).to_double();
            report.add({"vk(l=" + std::to_string(ell) + ",k=" + std::to_string(k) +
                            ",lambda=" + std::to_string(lambda) + ")",
                        config.vk_mesh, residual, tol, residual < tol, ms_since(t0)});
        }
    }
    // the remainder weight gets the same treatment at a lighter mesh (its
    // nesting is one layer deeper)
    for (int ell = 0; ell <= std::min(2, config.vk_max_order); ++ell) {
        const int mesh = std::min(config.vk_mesh, 128);
        const auto t0 = Clock::now();
        const double residual = remainder_weight_oracle(ell, lambda, mesh);
        const Rational exact = pow_int(lambda, -(ell * (ell + 1)) / 2) *
                               Rational(BigInt(lambda), factorial(ell + 2));
        const double tol = config.vk_relative_tolerance * exact.to_double();
        report.add({"remainder_weight(l=" + std::to_string(ell) + ",lambda=" +
                        std::to_string(lambda) + ")",
                    mesh, residual, tol, residual < tol, ms_since(t0)});
    }
    return report;
}

ResidualReport expansion_suite(int lambda, const SuiteConfig& config) {
    config.validate();
    ResidualReport report;
    int failures = 0;
    for (int ell = 0; ell <= config.expansion_max_level; ++ell)
        for (int k = 0; k < lambda; ++k)
            if (!expansion_check(ell, k, lambda)) ++failures;
    report.add({"expansion(lambda=" + std::to_string(lambda) +
                    ",lmax=" + std::to_string(config.expansion_max_level) + ")",
                0, static_cast<double>(failures), 0.0, failures == 0, 0.0});
    return report;
}

ResidualReport linearity_suite(const Substitution& sub, const SuiteConfig& config) {
    config.validate();
    ResidualReport report;
    std::mt19937_64 rng(config.seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    const auto draw = [&] { return Rational(num(rng), den(rng)); };
    for (int i = 0; i < config.linearity_draws; ++i) {
        const BoundaryData p{draw(), draw()};
        const BoundaryData q{draw(), draw()};
        const Rational c1 = draw();
        const Rational c2 = draw();
        const auto t0 = Clock::now();
        const bool ok =
            linearity_check(sub, p, q, c1, c2, config.linearity_depth, config.max_values);
        report.add({"linearity(draw=" + std::to_string(i) + ",depth=" +
                        std::to_string(config.linearity_depth) + ")",
                    config.linearity_depth, ok ? 0.0 : 1.0, 0.0, ok, ms_since(t0)});
    }
    return report;
}

ResidualReport zero_suite(const Substitution& sub, const SuiteConfig& config) {
    config.validate();
    ResidualReport report;
    const int depth =
        config.zero_grid_depth >= 0 ? config.zero_grid_depth : (sub.lambda() <= 4 ? 6 : 4);
    const auto t0 = Clock::now();
    const bool ok = zero_solution_check(sub, depth, config.zero_moment_levels, config.max_values);
    report.add({"zero_solution(depth=" + std::to_string(depth) +
                    ",levels=" + std::to_string(config.zero_moment_levels) + ")",
                depth, ok ? 0.0 : 1.0, 0.0, ok, ms_since(t0)});
    return report;
}

ResidualReport identity_report(const Substitution& sub, const SuiteConfig& config) {
    config.validate();
    ResidualReport report;
    const auto t0 = Clock::now();
    const bool ok = identity_suite(sub, config.identity_max_level);
    report.add({"identities(lmax=" + std::to_string(config.identity_max_level) + ")",
                config.identity_max_level, ok ? 0.0 : 1.0, 0.0, ok, ms_since(t0)});
    return report;
}

ResidualReport relation_consistency_report(const Substitution& sub, const BoundaryData& boundary,
                                           const SuiteConfig& config, RelationForm form) {
    config.validate();
    ResidualReport report;
    MomentTable table = MomentTable::init(sub, boundary, form);
    const auto breakage = table.first_inconsistency(8);
    if (breakage) {
        report.add({"moment_relations first_break=(l=" + std::to_string(breakage->level) + "," +
                        to_char(breakage->alpha) + ")",
                    8, abs(breakage->residual).to_double(), 0.0, false, 0.0});
    } else {
        report.add({"moment_relations", 8, 0.0, 0.0, true, 0.0});
    }
    return report;
}

ResidualReport run_suites(const Substitution& sub, std::string_view selection,
                          const BoundaryData& boundary, const SuiteConfig& config,
                          RelationForm form) {
    config.validate();
    const bool all = selection == "all";
    ResidualReport report;
    bool matched = false;
    const auto want = [&](std::string_view name) {
        const bool w = all || selection == name;
        matched = matched || w;
        return w;
    };
    if (all) report.merge(relation_consistency_report(sub, boundary, config, form));
    if (want("equation")) report.merge(equation_suite(sub, boundary, config, form));
    if (want("moments")) report.merge(moment_suite(sub, boundary, config, form));
    if (want("vk")) report.merge(vk_suite(sub.lambda(), config));
    if (want("expansion")) report.merge(expansion_suite(sub.lambda(), config));
    if (want("linearity")) report.merge(linearity_suite(sub, config));
    if (want("zero")) report.merge(zero_suite(sub, config));
    if (want("identities")) report.merge(identity_report(sub, config));
    if (!matched)
        throw std::invalid_argument("unknown suite '" + std::string(selection) +
                                    "' (expected equation | moments | vk | expansion | linearity | "
                                    "zero | identities | all)");
    return report;
}

}  // namespace panto
