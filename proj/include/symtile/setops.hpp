#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symtile/group.hpp"
#include "symtile/transform.hpp"

namespace symtile {

/// Why a pair predicate failed: a reason and the offending element(s), if any.
struct PairWitness {
    std::string reason;
    std::optional<GroupElement> element;
    std::optional<GroupElement> partner;
};

/// Outcome of a pair predicate. Every characterization listed in `checked_by`
/// was evaluated and agreed; a disagreement throws InternalDisagreement instead.
struct PairVerdict {
    bool holds = false;
    std::vector<std::string> checked_by;
    std::optional<PairWitness> witness;
    /// Divergences that are reported rather than treated as errors.
    std::vector<std::string> notes;

    explicit operator bool() const noexcept { return holds; }
};

/// {a - a' : a, a' in A, a != a'}.
PointSet difference_set(const PointSet& set);
CellMask difference_mask(const PointSet& set);

/// A (+) B = Z_n^2, decided three ways: cardinality with disjoint difference
/// sets, cardinality with covering zero sets, and direct convolution counting.
PairVerdict is_tiling_pair(const PointSet& a, const PointSet& b);

/// |A| = |S| and Delta S within Z(1_A); the dual Delta A within Z(1_S) is
/// evaluated as a cross-check.
PairVerdict is_spectral_pair(const PointSet& a, const PointSet& s, Form form);

/// Tiling of A against H, cross-checked against the subgroup criterion
/// |A||H| = n^2 and H^perp \ {0} within Z(1_A^sym).
PairVerdict complements_subgroup(const PointSet& a, const Subgroup& h);

} // namespace symtile
