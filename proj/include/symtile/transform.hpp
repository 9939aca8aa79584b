#pragma once

#include <string>

#include "symtile/cyclotomic.hpp"
#include "symtile/group.hpp"
#include "symtile/report.hpp"

namespace symtile {

/// Which pairing feeds the character: <a, xi> or <<a, xi>>.
enum class Form { euclidean, symplectic };

const char* to_string(Form form);
/// Accepts "sym", "symplectic", "euc", "euclidean".
Form parse_form(const std::string& text);

struct ZeroSet {
    Form form;
    PointSet points;

    friend bool operator==(const ZeroSet&, const ZeroSet&) = default;
};

/// The pairing <a, xi> or <<a, xi>> selected by `form`.
int pairing(const GroupElement& a, const GroupElement& xi, Form form);

/// Fourier transform of the indicator of `set` at `xi`, as an exact root-of-unity sum.
CycloSum ft_at(const PointSet& set, const GroupElement& xi, Form form);

/// All xi where the transform vanishes. Throws std::invalid_argument on an empty set.
ZeroSet zero_set(const PointSet& set, Form form);
/// Same scan, as a cell mask.
CellMask zero_mask(const PointSet& set, Form form);

/// (s1, s2) -> (-s2, s1).
GroupElement quarter_turn(const GroupElement& s);
PointSet quarter_turn(const PointSet& set);

/// Rotates a Euclidean zero set onto the symplectic one. Throws on a symplectic input.
ZeroSet rotate_euclidean_to_symplectic(const ZeroSet& z);

/// Checks the transform of a subgroup indicator is |H| on H^perp and 0 elsewhere.
VerificationReport subgroup_transform_identity(const Subgroup& h);

} // namespace symtile
