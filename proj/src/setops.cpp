#include "symtile/setops.hpp"

#include <stdexcept>

namespace symtile {

namespace {

void require_pair(const PointSet& a, const PointSet& b) {
    require_same_modulus(a.modulus(), b.modulus());
    if (a.empty() || b.empty()) throw std::invalid_argument("pair predicates need nonempty sets");
}

std::string cardinality_reason(std::size_t lhs, std::size_t rhs, const char* relation, std::size_t target) {
    return "cardinality " + std::to_string(lhs) + relation + std::to_string(rhs) + " != " + std::to_string(target);
}

// First set cell of `mask`, if any.
std::optional<GroupElement> first_cell(const CellMask& mask) {
    std::optional<GroupElement> out;
    mask.for_each([&](int idx) {
        if (!out) out = GroupElement::from_index(idx, mask.modulus());
    });
    return out;
}

// Some pair (x, y) in `set` with x - y == d.
std::pair<GroupElement, GroupElement> difference_source(const PointSet& set, const GroupElement& d) {
    for (const auto& x : set)
        for (const auto& y : set)
            if (x != y && x - y == d) return {x, y};
    throw std::logic_error("difference has no source pair");
}

struct Outcome {
    bool holds;
    std::optional<PairWitness> witness;
};

Outcome by_differences(const PointSet& a, const PointSet& b) {
    const auto n2 = static_cast<std::size_t>(a.modulus()) * a.modulus();
    if (a.size() * b.size() != n2) return {false, PairWitness{cardinality_reason(a.size(), b.size(), "*", n2), {}, {}}};
    CellMask common = difference_mask(a);
    common &= difference_mask(b);
    if (auto d = first_cell(common)) {
        const auto [x, y] = difference_source(a, *d);
        return {false, PairWitness{"translates overlap: difference shared by both sets", x, y}};
    }
    return {true, std::nullopt};
}

Outcome by_zero_sets(const PointSet& a, const PointSet& b) {
    const auto n2 = static_cast<std::size_t>(a.modulus()) * a.modulus();
    if (a.size() * b.size() != n2) return {false, PairWitness{cardinality_reason(a.size(), b.size(), "*", n2), {}, {}}};
    CellMask covered = zero_mask(a, Form::symplectic);
    covered |= zero_mask(b, Form::symplectic);
    covered.set(0);
    if (auto xi = first_cell(covered.complement()))
        return {false, PairWitness{"frequency outside both symplectic zero sets", *xi, {}}};
    return {true, std::nullopt};
}

Outcome by_convolution(const PointSet& a, const PointSet& b) {
    const int n = a.modulus();
    std::vector<int> hits(static_cast<std::size_t>(n) * n, 0);
    for (const auto& x : a)
        for (const auto& y : b) ++hits[static_cast<std::size_t>((x + y).index())];
    for (int i = 0; i < n * n; ++i)
        if (hits[static_cast<std::size_t>(i)] != 1)
            return {false, PairWitness{"element covered " + std::to_string(hits[static_cast<std::size_t>(i)]) + " times",
                                       GroupElement::from_index(i, n), {}}};
    return {true, std::nullopt};
}

Outcome by_spectrum(const PointSet& a, const PointSet& s, Form form) {
    if (a.size() != s.size())
        return {false, PairWitness{"cardinality " + std::to_string(a.size()) + " != " + std::to_string(s.size()), {}, {}}};
    CellMask outside = difference_mask(s);
    outside &= zero_mask(a, form).complement();
    if (auto d = first_cell(outside)) {
        const auto [x, y] = difference_source(s, *d);
        return {false, PairWitness{"spectrum difference outside the zero set", x, y}};
    }
    return {true, std::nullopt};
}

} // namespace

CellMask difference_mask(const PointSet& set) {
    CellMask out(set.modulus());
    for (const auto& x : set)
        for (const auto& y : set)
            if (x != y) out.set(x - y);
    return out;
}

PointSet difference_set(const PointSet& set) {
    return PointSet::from_mask(difference_mask(set));
}

PairVerdict is_tiling_pair(const PointSet& a, const PointSet& b) {
    require_pair(a, b);
    const Outcome diff = by_differences(a, b);
    const Outcome fourier = by_zero_sets(a, b);
    const Outcome conv = by_convolution(a, b);
    if (diff.holds != fourier.holds || diff.holds != conv.holds)
        throw InternalDisagreement("tiling characterizations disagree: differences=" + std::to_string(diff.holds) +
                                   " zero-sets=" + std::to_string(fourier.holds) +
                                   " convolution=" + std::to_string(conv.holds));
    PairVerdict v;
    v.holds = diff.holds;
    v.checked_by = {"differences", "zero-sets", "convolution"};
    v.witness = diff.witness;
    return v;
}

PairVerdict is_spectral_pair(const PointSet& a, const PointSet& s, Form form) {
    require_pair(a, s);
    const Outcome primary = by_spectrum(a, s, form);
    const Outcome dual = by_spectrum(s, a, form);
    if (primary.holds != dual.holds)
        throw InternalDisagreement("spectral characterizations disagree: primary=" + std::to_string(primary.holds) +
                                   " dual=" + std::to_string(dual.holds));
    PairVerdict v;
    v.holds = primary.holds;
    v.checked_by = {"spectrum-differences", "dual-differences"};
    v.witness = primary.witness;
    return v;
}

PairVerdict complements_subgroup(const PointSet& a, const Subgroup& h) {
    PairVerdict v = is_tiling_pair(a, h.carrier());

    const auto n2 = static_cast<std::size_t>(a.modulus()) * a.modulus();
    bool literal = a.size() * h.size() == n2;
    if (literal) {
        CellMask nonzero_orth = symplectic_orthogonal(h).carrier().mask();
        nonzero_orth.reset(0);
        literal = nonzero_orth.is_subset_of(zero_mask(a, Form::symplectic));
    }
    v.checked_by.emplace_back("subgroup-orthogonal");
    if (literal != v.holds)
        v.notes.push_back(std::string("subgroup-orthogonal criterion gives ") + (literal ? "true" : "false") +
                          " against tiling verdict " + (v.holds ? "true" : "false"));
    return v;
}

} // namespace symtile
