#pragma once

// Predicates shared by the verification suites and witness replay.

#include <optional>
#include <vector>

#include "symtile/group.hpp"

namespace symtile::detail {

/// Everything needed to test the counting identity at one x of order p^m.
struct CountingProbe {
    GroupElement x;
    int p;
    int m;
    CellMask orth_x;  // <x>^perp
    CellMask orth_px; // <px>^perp
    Symplectomorphism normalize; // sends x to (0, n/p^m)
    std::vector<CellMask> slices; // V_0 .. V_{p-1}, in normalized coordinates
};

/// nullopt unless ord(x) is a prime power p^m with m >= 1.
std::optional<CountingProbe> make_counting_probe(const GroupElement& x);

/// Sizes of A meet <x>^perp and A meet <px>^perp.
std::pair<int, int> counting_sides(const CountingProbe& probe, const PointSet& a);
bool counting_identity_holds(const CountingProbe& probe, const PointSet& a);
/// |MA meet V_k| for k = 0..p-1.
std::vector<int> slice_counts(const CountingProbe& probe, const PointSet& a);
bool counting_refinement_holds(const CountingProbe& probe, const PointSet& a);

std::optional<GroupElement> first_common(const CellMask& lhs, const CellMask& rhs);

} // namespace symtile::detail
