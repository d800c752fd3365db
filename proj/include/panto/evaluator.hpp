#pragma once

#include <cstdint>
#include <vector>

#include "panto/moments.hpp"

namespace panto {

/// The lambda-adic point index / lambda^level. Canonical form is not
/// required; equality is by represented value.
struct GridPoint {
    int level = 0;
    std::int64_t index = 0;
};

/// Coefficients of one refinement step: the difference
/// f((n+1)/lambda^(ell+1)) - f(n/lambda^(ell+1)) equals
/// sum_k v[k] * f(n/lambda^(ell-k)) plus remainder_weight times the
/// level-(ell+1) normalized moment of the block letter u_n.
struct StepCoefficients {
    int target_level = 0;             // ell + 1
    std::vector<Rational> v;          // v[k] = 1/(k+1)! * lambda^((k+1)(k/2-ell))
    Rational remainder_weight;        // lambda^(-ell(ell+1)/2)

    static StepCoefficients make(int ell, int lambda);
};

/// V_k for a single (ell, k). Throws on k outside [0, ell].
Rational vk_coefficient(int ell, int k, int lambda);

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TabulateOptions {
    std::uint64_t max_values = 10'000'000;  // cap on total stored grid values
    unsigned threads = 1;                   // per-level step computation; output is identical
    RelationForm form = RelationForm::standard;
};

/// Exact values of the candidate solution at lambda-adic points. Level j
/// stores f(n / lambda^j) for indices 0..extent*lambda^depth, i.e. the real
/// interval [0, extent*lambda^(depth-j)]; every level keeps the same index
/// count so each refinement step can read every coarser level at its own
/// index. Immutable once built.
class GridTable {
  public:
    int depth() const { return depth_; }
    std::int64_t extent() const { return extent_; }
    int lambda() const { return moments_.substitution().lambda(); }
    std::int64_t max_index() const { return max_index_; }

    const Rational& value(int level, std::int64_t index) const;

    /// Looks up by represented value: (j, n) with j > depth resolves to a
    /// coarser stored level when index is divisible by the right power.
    const Rational& value_at(GridPoint p) const;

    const Word& word() const { return word_; }
    const MomentTable& moments() const { return moments_; }

    friend GridTable tabulate(const Substitution& sub, BoundaryData boundary, int depth,
                              std::int64_t extent, const TabulateOptions& options);

  private:
    GridTable(MomentTable moments, Word word, int depth, std::int64_t extent)
        : moments_(std::move(moments)), word_(std::move(word)), depth_(depth), extent_(extent) {}

    MomentTable moments_;
    Word word_;
    int depth_;
    std::int64_t extent_;
    std::int64_t max_index_ = 0;
    std::vector<std::vector<Rational>> levels_;
};

/// Builds the grid: level 0 by cumulative block sums of the level-0 moments
/// along the fixed point, each finer level by cumulative refinement steps.
GridTable tabulate(const Substitution& sub, BoundaryData boundary, int depth, std::int64_t extent,
                   const TabulateOptions& options = {});

/// The refinement-step value at (ell, n), recomputed from a finished grid.
Rational step_increment(const GridTable& grid, int ell, std::int64_t n);

}  // namespace panto
