#pragma once

#include <array>
#include <optional>
#include <vector>

#include "panto/words.hpp"

namespace panto {

/// Boundary data (f(0), f(1)) that pins down a candidate solution. Any pair
/// is admissible input; whether a candidate is a genuine solution is for the
/// verifier to report on.
struct BoundaryData {
    Rational f0;
    Rational f1;
};

/// Which moment relation drives the level recursion. `standard` is the
/// self-consistent form validated by the quadrature oracles. `alternating`
/// carries (-1)^q factors and a different right-hand side; it is kept as a
/// diagnostic because it is internally inconsistent (the level engine records
/// where it first breaks instead of asserting).
enum class RelationForm {
    standard,
    alternating,
};

/// Level-by-level table of the normalized moments (mt_a, mt_b). Levels are
/// solved via the sum S = lambda_a*mt_a + lambda_b*mt_b (from the a-instance
/// of the relation one index down) and the difference D = mt_a - mt_b (from
/// subtracting the two instances at the current index, where the next level's
/// difference cancels). The level-0 difference is fixed by the boundary data;
/// that is what leaves exactly two degrees of freedom.
class MomentTable {
  public:
    static MomentTable init(const Substitution& sub, BoundaryData boundary,
                            RelationForm form = RelationForm::standard);

    /// Populates levels up through `level`. For the standard form the implied
    /// b-instance of the relation is asserted exactly at every new level.
    void extend(int level);

    int max_level() const { return static_cast<int>(levels_.size()) - 1; }
    const Rational& normalized(int level, Letter alpha) const;

    /// m^(ell) = ell! * lambda^ell * mt^(ell).
    Rational unnormalized(int level, Letter alpha) const;

    /// LHS - RHS of the relation instance (ell, alpha) in the table's own form.
    Rational relation_residual(int ell, Letter alpha) const;
    /// Same but for an explicitly chosen form.
    Rational relation_residual(int ell, Letter alpha, RelationForm form) const;

    struct Inconsistency {
        int level;
        Letter alpha;
        Rational residual;
    };
    /// First relation instance with nonzero residual in the table's own form,
    /// scanning levels 0..max_ell, alpha = a then b. Empty for the standard
    /// engine; locates the breakage of the alternating form.
    std::optional<Inconsistency> first_inconsistency(int max_ell);

    const Substitution& substitution() const { return sub_; }
    const BoundaryData& boundary() const { return boundary_; }
    RelationForm form() const { return form_; }

  private:
    MomentTable(Substitution sub, BoundaryData boundary, RelationForm form);

    Substitution sub_;
    BoundaryData boundary_;
    RelationForm form_;
    DeltaTable deltas_;
    std::vector<std::array<Rational, 2>> levels_;  // [mt_a, mt_b] per level
};

/// m^(ell) from its normalized value.
Rational unnormalize(int ell, const Rational& mt, int lambda);

}  // namespace panto
