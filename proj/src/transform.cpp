#include "symtile/transform.hpp"

#include <chrono>
#include <stdexcept>

namespace symtile {

const char* to_string(Form form) {
    return form == Form::symplectic ? "symplectic" : "euclidean";
}

Form parse_form(const std::string& text) {
    if (text == "sym" || text == "symplectic") return Form::symplectic;
    if (text == "euc" || text == "euclidean") return Form::euclidean;
    throw std::invalid_argument("unknown form '" + text + "' (expected sym or euc)");
}

int pairing(const GroupElement& a, const GroupElement& xi, Form form) {
    return form == Form::symplectic ? symplectic_form(a, xi) : euclidean_inner(a, xi);
}

CycloSum ft_at(const PointSet& set, const GroupElement& xi, Form form) {
    require_same_modulus(set.modulus(), xi.modulus());
    CycloSum sum(set.modulus());
    for (const auto& a : set) sum.add_root(pairing(a, xi, form));
    return sum;
}

CellMask zero_mask(const PointSet& set, Form form) {
    if (set.empty()) throw std::invalid_argument("zero set of the empty set is undefined");
    const int n = set.modulus();
    CellMask out(n);
    for (int i = 1; i < n * n; ++i) // index 0 is the origin, where the transform is |A|
        if (is_zero(ft_at(set, GroupElement::from_index(i, n), form))) out.set(i);
    return out;
}

ZeroSet zero_set(const PointSet& set, Form form) {
    return ZeroSet{form, PointSet::from_mask(zero_mask(set, form))};
}

GroupElement quarter_turn(const GroupElement& s) {
    return GroupElement(-s.x2(), s.x1(), s.modulus());
}

PointSet quarter_turn(const PointSet& set) {
    std::vector<GroupElement> out;
    out.reserve(set.size());
    for (const auto& s : set) out.push_back(quarter_turn(s));
    return PointSet(set.modulus(), std::move(out));
}

ZeroSet rotate_euclidean_to_symplectic(const ZeroSet& z) {
    if (z.form != Form::euclidean) throw std::invalid_argument("rotation expects a Euclidean zero set");
    return ZeroSet{Form::symplectic, quarter_turn(z.points)};
}

VerificationReport subgroup_transform_identity(const Subgroup& h) {
    const auto start = std::chrono::steady_clock::now();
    const int n = h.modulus();
    const Subgroup orth = symplectic_orthogonal(h);
    std::vector<std::int64_t> peak_counts(static_cast<std::size_t>(n), 0);
    peak_counts[0] = static_cast<std::int64_t>(h.size());
    const CycloSum peak(n, std::move(peak_counts));

    VerificationReport report;
    report.suite = "subgroup-transform-identity";
    report.parameters = {{"n", std::to_string(n)}, {"order", std::to_string(h.size())}};

    const auto fail = [&](const GroupElement& xi, std::string detail) {
        report.failures.push_back(Witness{"subgroup-transform", n, {{"H", h.carrier()}}, xi, std::move(detail)});
    };

    CellMask zeros(n);
    for (int i = 0; i < n * n; ++i) {
        const auto xi = GroupElement::from_index(i, n);
        const CycloSum value = ft_at(h.carrier(), xi, Form::symplectic);
        const bool zero = is_zero(value);
        if (zero) zeros.set(i);
        if (orth.contains(xi)) {
            if (value != peak) fail(xi, "transform differs from |H| on H^perp");
        } else if (!zero) {
            fail(xi, "transform nonzero off H^perp");
        }
        ++report.instances_checked;
    }
    if (zeros != orth.carrier().mask().complement())
        fail(GroupElement::zero(n), "zero set differs from complement of H^perp");

    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

} // namespace symtile
