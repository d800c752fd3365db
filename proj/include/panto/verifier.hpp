#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "panto/evaluator.hpp"

namespace panto {

struct ResidualEntry {
    std::string case_name;
    int depth = 0;  // depth swept, or the mesh for the nested-integral oracle
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double wall_ms = 0.0;  // kept out of serialized output so runs stay byte-identical
};

struct ResidualReport {
    std::vector<ResidualEntry> entries;

    bool all_pass() const;
    void add(ResidualEntry e) { entries.push_back(std::move(e)); }
    void merge(ResidualReport other);

    /// Array of {case, depth, residual, tolerance, pass}.
    std::string to_json() const;
};

struct SuiteConfig {
    std::vector<int> depths;        // empty = pick per lambda (2 -> {6,8,10})
    double equation_tolerance = 1e-3;
    double moment_tolerance = 1e-4;
    double vk_relative_tolerance = 1e-9;
    int vk_mesh = 512;
    int vk_max_order = 3;           // sweep k <= ell <= this
    int expansion_max_level = 6;
    int identity_max_level = 12;
    int zero_moment_levels = 10;
    int zero_grid_depth = -1;       // -1 = 6 for lambda <= 4, else 4
    int linearity_depth = 5;
    int linearity_draws = 5;
    std::uint64_t seed = 12345;
    std::uint64_t max_values = 10'000'000;

    void validate() const;  // depths strictly increasing, tolerances positive
    std::vector<int> depth_sweep(int lambda) const;
};

struct CostCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// |trapezoid over [lambda*y, lambda*x] on finest-level samples - (f(x)-f(y))|,
/// computed exactly and only then rounded for reporting.
double equation_residual(const GridTable& grid, GridPoint x, GridPoint y);
Rational equation_residual_exact(const GridTable& grid, GridPoint x, GridPoint y);

/// |quadrature estimate of the normalized block moment - table value| for the
/// first block carrying f_alpha. The decisive cross-check between the moment
/// engine and the tabulated values.
double moment_quadrature_check(const GridTable& grid, const MomentTable& moments, int ell,
                               Letter alpha);
Rational moment_quadrature_exact(const GridTable& grid, const MomentTable& moments, int ell,
                                 Letter alpha);

/// |nested-integral quadrature of V_k - closed form|. Composite Simpson,
/// recursing through the k quadrature layers with the innermost integral
/// taken analytically; cost is (2*mesh+1)^k integrand evaluations.
double vk_oracle(int ell, int k, int lambda, int mesh, std::uint64_t cost_cap = 2'000'000'000);

/// Companion check on the step formula's remainder term: one extra quadrature
/// layer over a constant integrand must reproduce
/// lambda^(-ell(ell+1)/2) * lambda / (ell+2)!. Cost is (2*mesh+1)^(ell+1).
double remainder_weight_oracle(int ell, int lambda, int mesh,
                               std::uint64_t cost_cap = 2'000'000'000);

/// Polynomial identity behind the moment relation: (lambda^2 - x - k*lambda)^(ell+1)
/// expanded in the basis (lambda - x)^q with positive coefficients
/// C(ell+1, q) * lambda^(ell+1-q) * (lambda-k-1)^(ell+1-q). Verified exactly at
/// ell+2 distinct rational points. `alternating_signs` checks the (-1)^q
/// variant instead (it is expected to fail).
bool expansion_check(int ell, int k, int lambda, bool alternating_signs = false);

/// Grids and moment tables are exactly linear in the boundary data.
bool linearity_check(const Substitution& sub, const BoundaryData& p, const BoundaryData& q,
                     const Rational& c1, const Rational& c2, int depth,
                     std::uint64_t max_values = 10'000'000);

/// Zero boundary data must give exactly-zero moments and an exactly-zero grid.
bool zero_solution_check(const Substitution& sub, int depth, int levels,
                         std::uint64_t max_values = 10'000'000);

/// Exact combinatorial identities: prefix-count vs position-weighted level-1
/// values, the level-sum identity through lmax, and the level-0 convention.
bool identity_suite(const Substitution& sub, int lmax);

/// All validated image pairs of a given length.
std::vector<Substitution> enumerate_valid(int lambda);
/// Validation reports for every image pair of a given length (accepted or not).
std::vector<ValidationReport> enumerate_reports(int lambda);

/// Named suites: equation | moments | vk | expansion | linearity | zero |
/// identities | all. Unknown names throw std::invalid_argument. `boundary`
/// is the candidate the equation and moment suites run on (the zero suite
/// always uses zero boundary data).
ResidualReport run_suites(const Substitution& sub, std::string_view selection,
                          const BoundaryData& boundary, const SuiteConfig& config,
                          RelationForm form = RelationForm::standard);

ResidualReport equation_suite(const Substitution& sub, const BoundaryData& boundary,
                              const SuiteConfig& config, RelationForm form = RelationForm::standard);
ResidualReport moment_suite(const Substitution& sub, const BoundaryData& boundary,
                            const SuiteConfig& config, RelationForm form = RelationForm::standard);
ResidualReport vk_suite(int lambda, const SuiteConfig& config);
ResidualReport expansion_suite(int lambda, const SuiteConfig& config);
ResidualReport linearity_suite(const Substitution& sub, const SuiteConfig& config);
ResidualReport zero_suite(const Substitution& sub, const SuiteConfig& config);
ResidualReport identity_report(const Substitution& sub, const SuiteConfig& config);
ResidualReport relation_consistency_report(const Substitution& sub, const BoundaryData& boundary,
                                           const SuiteConfig& config, RelationForm form);

}  // namespace panto
