#include "symtile/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "checks.hpp"
#include "symtile/search.hpp"
#include "symtile/setops.hpp"
#include "symtile/transform.hpp"

namespace symtile {

const char* to_string(SearchMode mode) {
    return mode == SearchMode::sampled ? "sampled" : "exhaustive";
}

SearchMode parse_search_mode(const std::string& text) {
    if (text == "exhaustive") return SearchMode::exhaustive;
    if (text == "sampled") return SearchMode::sampled;
    throw std::invalid_argument("unknown mode '" + text + "' (expected exhaustive or sampled)");
}

void SearchConfig::validate() const {
    if (mode == SearchMode::sampled && sample_count < 1)
        throw std::invalid_argument("sampled mode needs a sample count of at least 1");
    if (parallelism < 1) throw std::invalid_argument("worker count must be at least 1");
    if (candidate_bound < 1) throw std::invalid_argument("candidate bound must be positive");
}

const PointSet& Witness::set(const std::string& name) const {
    for (const auto& [key, value] : sets)
        if (key == name) return value;
    throw std::out_of_range("witness has no set named " + name);
}

std::string VerificationReport::summary_line() const {
    std::ostringstream out;
    out << suite << ": " << instances_checked << " instances, " << failures.size() << " failures";
    if (!findings.empty()) out << ", " << findings.size() << " findings";
    out << ": " << (passed() ? "PASS" : "FAIL");
    return out.str();
}

namespace {

void write_witness(std::ostringstream& out, const char* label, std::size_t i, const Witness& w) {
    out << label << "[" << i << "]: kind=" << w.kind << " n=" << w.n;
    for (const auto& [name, set] : w.sets) out << " " << name << "=" << to_string(set);
    if (w.element) out << " element=" << to_string(*w.element);
    if (!w.detail.empty()) out << " detail=\"" << w.detail << "\"";
    out << "\n";
}

nlohmann::json element_json(const GroupElement& g) {
    return nlohmann::json::array({g.x1(), g.x2()});
}

nlohmann::json set_json(const PointSet& set) {
    auto arr = nlohmann::json::array();
    for (const auto& e : set) arr.push_back(element_json(e));
    return arr;
}

nlohmann::json witness_json(const Witness& w) {
    nlohmann::json j;
    j["kind"] = w.kind;
    j["n"] = w.n;
    nlohmann::json sets = nlohmann::json::object();
    for (const auto& [name, set] : w.sets) sets[name] = set_json(set);
    j["sets"] = sets;
    j["element"] = w.element ? element_json(*w.element) : nlohmann::json(nullptr);
    j["detail"] = w.detail;
    return j;
}

double elapsed_ms(const VerificationReport& r) {
    return std::chrono::duration<double, std::milli>(r.elapsed).count();
}

} // namespace

std::string to_text(const VerificationReport& r, bool include_elapsed) {
    std::ostringstream out;
    out << "suite: " << r.suite << "\n";
    out << "schema: 1\n";
    if (!r.parameters.empty()) {
        out << "parameters:";
        for (const auto& [k, v] : r.parameters) out << " " << k << "=" << v;
        out << "\n";
    }
    if (r.config)
        out << "config: mode=" << to_string(r.config->mode) << " samples=" << r.config->sample_count
            << " seed=" << r.config->seed << " bound=" << r.config->candidate_bound << "\n";
    for (const auto& note : r.notes) out << "note: " << note << "\n";
    out << "instances: " << r.instances_checked << "\n";
    for (const auto& [k, v] : r.counters) out << "counter " << k << ": " << v << "\n";
    out << "failures: " << r.failures.size() << "\n";
    for (std::size_t i = 0; i < r.failures.size(); ++i) write_witness(out, "failure", i, r.failures[i]);
    out << "findings: " << r.findings.size() << "\n";
    for (std::size_t i = 0; i < r.findings.size(); ++i) write_witness(out, "finding", i, r.findings[i]);
    out << "result: " << (r.passed() ? "PASS" : "FAIL") << "\n";
    if (include_elapsed) out << "elapsed_ms: " << std::fixed << std::setprecision(3) << elapsed_ms(r) << "\n";
    out << "summary: " << r.summary_line() << "\n";
    return out.str();
}

std::string to_json(const VerificationReport& r, bool include_elapsed) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["suite"] = r.suite;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["parameters"] = params;
    if (r.config)
        j["config"] = {{"mode", to_string(r.config->mode)},
                       {"samples", r.config->sample_count},
                       {"seed", r.config->seed},
                       {"bound", r.config->candidate_bound}};
    else
        j["config"] = nullptr;
    j["notes"] = r.notes;
    j["instances_checked"] = r.instances_checked;
    j["counters"] = r.counters;
    auto failures = nlohmann::json::array();
    for (const auto& w : r.failures) failures.push_back(witness_json(w));
    j["failures"] = failures;
    auto findings = nlohmann::json::array();
    for (const auto& w : r.findings) findings.push_back(witness_json(w));
    j["findings"] = findings;
    j["passed"] = r.passed();
    if (include_elapsed) j["elapsed_ms"] = elapsed_ms(r);
    j["summary"] = r.summary_line();
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Replay

namespace {

bool meets_zero_set(const PointSet& probe_points, const PointSet& a) {
    return probe_points.mask().intersects(zero_mask(a, Form::symplectic));
}

bool witness_contains(const std::vector<Witness>& list, const PointSet& a, const PointSet& h) {
    return std::any_of(list.begin(), list.end(), [&](const Witness& w) { return w.set("A") == a && w.set("H") == h; });
}

} // namespace

bool replay(const Witness& w) {
    const auto& k = w.kind;
    if (k == "counting" || k == "counting-refinement") {
        if (!w.element) return false;
        const auto probe = detail::make_counting_probe(*w.element);
        const PointSet& a = w.set("A");
        if (!probe || !is_zero(ft_at(a, *w.element, Form::symplectic))) return false;
        return k == "counting" ? !detail::counting_identity_holds(*probe, a)
                               : !detail::counting_refinement_holds(*probe, a);
    }
    if (k == "self-disjoint") return meets_zero_set(w.set("A"), w.set("A"));
    if (k == "diff-disjoint") return meets_zero_set(difference_set(w.set("A")), w.set("A"));
    if (k == "diff-meets-zero") {
        const PointSet& a = w.set("A");
        return is_tiling_pair(a, w.set("H")).holds && meets_zero_set(difference_set(a), a);
    }
    if (k == "not-a-complement") return !is_tiling_pair(w.set("A"), w.set("H")).holds;
    if (k == "theorem-spectrum") {
        const PointSet& a = w.set("A");
        const PointSet& b = w.set("B");
        return is_tiling_pair(a, b).holds && !is_spectral_pair(b, a, Form::symplectic).holds;
    }
    if (k == "theorem-tiling") {
        const PointSet& a = w.set("A");
        const PointSet& s = w.set("S");
        return is_spectral_pair(a, s, Form::symplectic).holds && !is_tiling_pair(a, s).holds;
    }
    if (k == "theorem-lists-differ") {
        const PointSet& a = w.set("A");
        return enumerate_tiling_complements(a) != enumerate_symplectic_spectra(a);
    }
    if (k == "good-group") {
        const PointSet& a = w.set("A");
        const PointSet& b = w.set("B");
        return is_tiling_pair(a, b).holds && !is_coset(a) && !is_coset(b);
    }
    if (k == "subgroup-transform") return !subgroup_transform_identity(Subgroup::from_carrier(w.set("H"))).passed();
    if (k == "expected-witness-missing") {
        const auto rerun = search_counterexamples_cyclic(w.n, SearchConfig::exhaustive());
        return !witness_contains(rerun.findings, w.set("A"), w.set("H"));
    }
    throw std::invalid_argument("cannot replay witness kind '" + k + "'");
}

} // namespace symtile
