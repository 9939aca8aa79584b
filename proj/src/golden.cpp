#include "symtile/golden.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>

#include "symtile/search.hpp"
#include "symtile/setops.hpp"
#include "symtile/transform.hpp"

namespace symtile {

namespace {

PointSet cells_where(int n, const std::function<bool(int, int)>& keep) {
    std::vector<GroupElement> out;
    for (int x1 = 0; x1 < n; ++x1)
        for (int x2 = 0; x2 < n; ++x2)
            if (keep(x1, x2)) out.emplace_back(x1, x2, n);
    return PointSet(n, std::move(out));
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

GoldenCase axis_zero_sets() {
    const PointSet axis = cells_where(4, [](int, int x2) { return x2 == 0; });
    const auto euc = zero_set(axis, Form::euclidean);
    const auto sym = zero_set(axis, Form::symplectic);
    const bool euc_ok = euc.points == cells_where(4, [](int x1, int) { return x1 != 0; });
    const bool sym_ok = sym.points == cells_where(4, [](int, int x2) { return x2 != 0; });
    const bool rotation_ok = rotate_euclidean_to_symplectic(euc) == sym;
    return {"axis-zero-sets", "zero sets of Z_4 x {0}", euc_ok && sym_ok && rotation_ok,
            "euclidean=" + yes_no(euc_ok) + " symplectic=" + yes_no(sym_ok) + " rotation=" + yes_no(rotation_ok)};
}

GoldenCase cyclic_lagrangian_complement() {
    const PointSet a = PointSet::of(4, {{0, 0}, {1, 0}, {0, 2}, {1, 2}});
    const Subgroup h = subgroup_generated({GroupElement(1, 1, 4)}, 4);
    const auto z = zero_set(a, Form::symplectic);
    const bool z_ok = z.points == cells_where(4, [](int x1, int x2) { return x1 % 2 == 1 || x2 == 2; });
    const bool inside = difference_mask(a).is_subset_of(z.points.mask());
    const bool tiles = is_tiling_pair(a, h.carrier()).holds;
    const bool cyclic = h.is_cyclic() && is_lagrangian(h);
    return {"cyclic-lagrangian-complement", "cyclic Lagrangian breaks disjointness", z_ok && inside && tiles && cyclic,
            "zero-set=" + yes_no(z_ok) + " diff-inside-zero-set=" + yes_no(inside) + " tiles=" + yes_no(tiles) +
                " cyclic-lagrangian=" + yes_no(cyclic)};
}

GoldenCase noncyclic_complement() {
    const PointSet a = PointSet::of(4, {{0, 0}, {3, 0}, {0, 3}, {3, 3}});
    const PointSet b = PointSet::of(4, {{0, 0}, {1, 2}, {2, 0}, {3, 2}});
    const Subgroup h = subgroup_generated({GroupElement(2, 0, 4), GroupElement(0, 2, 4)}, 4);
    const auto with_h = is_tiling_pair(a, h.carrier());
    const auto with_b = is_tiling_pair(a, b);
    const auto spectral = is_spectral_pair(a, b, Form::symplectic);
    const bool noncyclic = is_lagrangian(h) && !h.is_cyclic();
    const bool three_ways = with_h.checked_by.size() == 3 && with_b.checked_by.size() == 3;
    const bool ok = with_h.holds && with_b.holds && spectral.holds && noncyclic && three_ways;
    return {"noncyclic-complement", "complement of the non-cyclic Lagrangian", ok,
            "tiles-H=" + yes_no(with_h.holds) + " tiles-B=" + yes_no(with_b.holds) +
                " spectral=" + yes_no(spectral.holds) + " characterizations=" + std::to_string(with_b.checked_by.size())};
}

GoldenCase subgroup_sweep() {
    std::int64_t subgroups = 0;
    std::int64_t failures = 0;
    for (int n = 2; n <= 12; ++n)
        for (const auto& h : enumerate_subgroups(n)) {
            ++subgroups;
            failures += static_cast<std::int64_t>(subgroup_transform_identity(h).failures.size());
        }
    return {"subgroup-transform", "subgroup transform = |H| 1_{H^perp}, n = 2..12", failures == 0,
            std::to_string(subgroups) + " subgroups, " + std::to_string(failures) + " failures"};
}

GoldenCase counting_suite(int workers) {
    std::int64_t instances = 0;
    std::int64_t pairs = 0;
    std::int64_t failures = 0;
    auto run = [&](int n, const SearchConfig& cfg) {
        const auto r = verify_counting_lemma(n, cfg);
        instances += r.instances_checked;
        failures += static_cast<std::int64_t>(r.failures.size());
        if (auto it = r.counters.find("hypothesis_pairs"); it != r.counters.end()) pairs += it->second;
    };
    SearchConfig exhaustive = SearchConfig::exhaustive();
    exhaustive.parallelism = workers;
    run(2, exhaustive);
    run(4, exhaustive);
    for (int n : {4, 8, 9, 12}) {
        SearchConfig sampled = SearchConfig::sampled(10'000, 42);
        sampled.parallelism = workers;
        run(n, sampled);
    }
    return {"counting-identity", "counting identity and slice refinement", failures == 0,
            std::to_string(instances) + " sets, " + std::to_string(pairs) + " hypothesis pairs, " +
                std::to_string(failures) + " failures (seed 42)"};
}

std::int64_t counter(const VerificationReport& r, const std::string& name) {
    const auto it = r.counters.find(name);
    return it == r.counters.end() ? 0 : it->second;
}

GoldenCase disjointness(int p, const SearchConfig& cfg) {
    const auto self = verify_lemma_self(p, cfg);
    const auto diff = verify_lemma_diff(p, cfg);
    // Unshifted hits must be exactly the complements holding a nonzero element of H.
    const std::int64_t unshifted = counter(self, "unshifted_meets_zero_set");
    const bool explained = unshifted == counter(self, "holds_nonzero_of_H");
    const bool ok = self.passed() && diff.passed() && explained;
    std::string detail = std::to_string(self.instances_checked) + " complements, shifted self failures " +
                         std::to_string(self.failures.size()) + ", diff failures " + std::to_string(diff.failures.size()) +
                         ", unshifted A meeting Z " + std::to_string(unshifted) + (explained ? " (all hold 0 != h in H)" : " (unexplained)");
    if (cfg.mode == SearchMode::sampled) detail += ", seed " + std::to_string(cfg.seed);
    return {"disjointness-p" + std::to_string(p), "A - a and Delta A miss Z(1_A^sym), p = " + std::to_string(p), ok, detail};
}

GoldenCase cyclic_search(int workers) {
    SearchConfig cfg = SearchConfig::exhaustive();
    cfg.parallelism = workers;
    const auto r = search_counterexamples_cyclic(4, cfg);
    return {"cyclic-search-n4", "cyclic counterexamples at n = 4 rediscovered", r.passed() && !r.findings.empty(),
            std::to_string(r.instances_checked) + " complements, " + std::to_string(r.findings.size()) + " hits"};
}

} // namespace

std::vector<GoldenCase> reproduce_paper(int workers) {
    std::vector<GoldenCase> out;
    out.push_back(axis_zero_sets());
    out.push_back(cyclic_lagrangian_complement());
    out.push_back(cyclic_search(workers));
    out.push_back(noncyclic_complement());
    out.push_back(subgroup_sweep());
    out.push_back(counting_suite(workers));
    SearchConfig exhaustive = SearchConfig::exhaustive();
    exhaustive.parallelism = workers;
    out.push_back(disjointness(2, exhaustive));
    SearchConfig sampled = SearchConfig::sampled(1000, 42);
    sampled.parallelism = workers;
    out.push_back(disjointness(3, sampled));
    return out;
}

std::string format_golden_table(const std::vector<GoldenCase>& cases) {
    std::ostringstream out;
    std::size_t id_width = 4;
    for (const auto& c : cases) id_width = std::max(id_width, c.id.size());
    out << std::left << std::setw(6) << "status" << "  " << std::setw(static_cast<int>(id_width)) << "case"
        << "  detail\n";
    std::size_t passed = 0;
    for (const auto& c : cases) {
        passed += c.passed;
        out << std::left << std::setw(6) << (c.passed ? "PASS" : "FAIL") << "  "
            << std::setw(static_cast<int>(id_width)) << c.id << "  " << c.title << ": " << c.detail << "\n";
    }
    out << passed << "/" << cases.size() << " cases passed\n";
    return out.str();
}

} // namespace symtile
