#include "symtile/group.hpp"

#include <algorithm>
#include <string>

namespace symtile {

namespace {

// Worklist saturation: repeatedly add generators to newly reached elements.
CellMask closure_mask(std::span<const GroupElement> gens, int n) {
    CellMask reached(n);
    std::vector<GroupElement> frontier{GroupElement::zero(n)};
    reached.set(frontier.front());
    while (!frontier.empty()) {
        const GroupElement g = frontier.back();
        frontier.pop_back();
        for (const auto& s : gens) {
            const GroupElement next = g + s;
            if (!reached.test(next)) {
                reached.set(next);
                frontier.push_back(next);
            }
        }
    }
    return reached;
}

std::vector<int> divisors(int n) {
    std::vector<int> out;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

void check_bound(int n, int bound) {
    if (n < 2) throw std::invalid_argument("modulus must be at least 2");
    if (n > bound)
        throw BoundExceeded("modulus " + std::to_string(n) + " exceeds enumeration bound " + std::to_string(bound));
}

} // namespace

Subgroup subgroup_generated(std::span<const GroupElement> gens, int n) {
    for (const auto& g : gens) require_same_modulus(n, g.modulus());
    return Subgroup(PointSet::from_mask(closure_mask(gens, n)), std::vector<GroupElement>(gens.begin(), gens.end()));
}

Subgroup Subgroup::from_carrier(PointSet carrier) {
    if (!is_subgroup(carrier)) throw std::invalid_argument("point set is not a subgroup");
    const int n = carrier.modulus();
    std::vector<GroupElement> gens;
    CellMask span = closure_mask(gens, n);
    for (const auto& e : carrier) {
        if (span.test(e)) continue;
        gens.push_back(e);
        span = closure_mask(gens, n);
    }
    return Subgroup(std::move(carrier), std::move(gens));
}

bool Subgroup::is_cyclic() const {
    return std::any_of(carrier_.begin(), carrier_.end(),
                       [&](const GroupElement& g) { return static_cast<std::size_t>(order_of(g)) == size(); });
}

bool is_subgroup(const PointSet& set) {
    const int n = set.modulus();
    if (!set.contains(GroupElement::zero(n))) return false;
    const CellMask m = set.mask();
    for (const auto& a : set)
        for (const auto& b : set)
            if (!m.test(a + b)) return false;
    return true;
}

bool is_coset(const PointSet& set) {
    if (set.empty()) return false;
    return is_subgroup(set.translated(-set[0]));
}

Subgroup symplectic_orthogonal(const Subgroup& h) {
    const int n = h.modulus();
    // Orthogonality to a generating set is orthogonality to the span (bilinearity).
    std::span<const GroupElement> probe = h.generators();
    if (probe.empty() && h.size() > 1) probe = h.carrier().elements();
    CellMask out(n);
    for (int i = 0; i < n * n; ++i) {
        const auto g = GroupElement::from_index(i, n);
        if (std::all_of(probe.begin(), probe.end(), [&](const GroupElement& x) { return symplectic_form(g, x) == 0; }))
            out.set(i);
    }
    return Subgroup::from_carrier(PointSet::from_mask(out));
}

bool is_lagrangian(const Subgroup& h) {
    const bool self_orthogonal = symplectic_orthogonal(h) == h;
    const bool order_n = h.size() == static_cast<std::size_t>(h.modulus());
    if (self_orthogonal != order_n)
        throw InternalDisagreement("Lagrangian tests disagree: H = H^perp is " + std::to_string(self_orthogonal) +
                                   ", |H| = n is " + std::to_string(order_n));
    return self_orthogonal;
}

// Subgroups of Z_n^2 are L / nZ^2 for lattices nZ^2 <= L <= Z^2. Each L has a
// unique Hermite basis (a, b), (0, d) with 0 <= b < d; containing nZ^2 means
// a | n, d | n and d | (n/a) * b. The subgroup has order n^2 / (a*d).
std::vector<Subgroup> enumerate_subgroups(int n, int bound) {
    check_bound(n, bound);
    std::vector<Subgroup> out;
    for (int a : divisors(n))
        for (int d : divisors(n))
            for (int b = 0; b < d; ++b) {
                if (((n / a) * b) % d != 0) continue;
                const GroupElement gens[] = {GroupElement(a, b, n), GroupElement(0, d, n)};
                out.push_back(subgroup_generated(gens, n));
            }
    std::sort(out.begin(), out.end(), [](const Subgroup& l, const Subgroup& r) { return l.carrier() < r.carrier(); });
    return out;
}

std::vector<Subgroup> enumerate_lagrangians(int n, int bound) {
    check_bound(n, bound);
    std::vector<Subgroup> out;
    for (int a : divisors(n)) {
        const int d = n / a;
        for (int b = 0; b < d; ++b) {
            const GroupElement gens[] = {GroupElement(a, b, n), GroupElement(0, d, n)};
            out.push_back(subgroup_generated(gens, n));
        }
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& l, const Subgroup& r) { return l.carrier() < r.carrier(); });
    return out;
}

Subgroup torsion_subgroup(int n, int p) {
    if (p < 1 || n % p != 0) throw std::invalid_argument("torsion order must divide n");
    return subgroup_generated({GroupElement(n / p, 0, n), GroupElement(0, n / p, n)}, n);
}

} // namespace symtile
