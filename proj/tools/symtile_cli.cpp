#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symtile/golden.hpp"
#include "symtile/render.hpp"
#include "symtile/search.hpp"
#include "symtile/setfile.hpp"
#include "symtile/setops.hpp"
#include "symtile/transform.hpp"

using namespace symtile;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

ordered_json element_json(const GroupElement& g) { return ordered_json::array({g.x1(), g.x2()}); }

ordered_json set_json(const PointSet& set) {
    auto out = ordered_json::array();
    for (const auto& e : set) out.push_back(element_json(e));
    return out;
}

void print_json(ordered_json j) {
    j["schema"] = 1;
    std::cout << j.dump(2) << "\n";
}

ordered_json verdict_json(const PairVerdict& v) {
    ordered_json j;
    j["holds"] = v.holds;
    j["checked_by"] = v.checked_by;
    if (v.witness) {
        j["witness"] = {{"reason", v.witness->reason},
                        {"element", v.witness->element ? element_json(*v.witness->element) : ordered_json(nullptr)},
                        {"partner", v.witness->partner ? element_json(*v.witness->partner) : ordered_json(nullptr)}};
    } else {
        j["witness"] = nullptr;
    }
    j["notes"] = v.notes;
    return j;
}

void print_verdict(const std::string& label, const PairVerdict& v) {
    std::cout << label << ": " << (v.holds ? "yes" : "no") << "\n";
    std::cout << "checked-by:";
    for (const auto& c : v.checked_by) std::cout << " " << c;
    std::cout << "\n";
    if (v.witness) {
        std::cout << "witness: " << v.witness->reason;
        if (v.witness->element) std::cout << " element=" << to_string(*v.witness->element);
        if (v.witness->partner) std::cout << " partner=" << to_string(*v.witness->partner);
        std::cout << "\n";
    }
    for (const auto& note : v.notes) std::cout << "note: " << note << "\n";
}

struct VerifyOptions {
    std::string suite;
    std::optional<int> n;
    std::optional<int> p;
    std::string mode = "exhaustive";
    std::int64_t samples = 1000;
    std::uint64_t seed = 42;
    int workers = 1;
    std::int64_t bound = kDefaultCandidateBound;
    std::string kind = "cyclic";
    bool json = false;
    bool no_elapsed = false;
};

int require(const std::optional<int>& value, const char* flag, const std::string& suite) {
    if (!value) throw CLI::ValidationError(flag, "required by 'verify " + suite + "'");
    return *value;
}

VerificationReport run_suite(const VerifyOptions& o) {
    SearchConfig cfg;
    cfg.mode = parse_search_mode(o.mode);
    cfg.sample_count = o.samples;
    cfg.seed = o.seed;
    cfg.parallelism = o.workers;
    cfg.candidate_bound = o.bound;
    if (o.suite == "counting") return verify_counting_lemma(require(o.n, "--n", o.suite), cfg);
    if (o.suite == "self") return verify_lemma_self(require(o.p, "--p", o.suite), cfg);
    if (o.suite == "diff") return verify_lemma_diff(require(o.p, "--p", o.suite), cfg);
    if (o.suite == "main-i") return verify_theorem_main(TheoremCase::lagrangian, require(o.n, "--n", o.suite), cfg);
    if (o.suite == "main-ii") return verify_theorem_main(TheoremCase::prime, require(o.p, "--p", o.suite), cfg);
    if (o.suite == "main-iii")
        return verify_theorem_main(TheoremCase::prime_square, require(o.p, "--p", o.suite), cfg);
    const auto kind = o.kind == "noncyclic" ? LagrangianKind::noncyclic : LagrangianKind::cyclic;
    return search_counterexamples_cyclic(o.n.value_or(4), cfg, kind);
}

const char* kGridHelp =
    "Grids are printed with x1 increasing to the right and x2 increasing upward:\n"
    "the first printed row is x2 = n-1 and the origin sits at the bottom-left.\n"
    "Members are drawn as '█', other cells as '·'.\n\n"
    "Set files: '#' comments, a header line 'n <modulus>', then one 'x1 x2' per line.\n"
    "Exit codes: 0 all checks pass, 1 mathematical failure, 2 usage or I/O error.";

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tiling and spectral sets in Z_n x Z_n under the symplectic Fourier transform"};
    app.footer(kGridHelp);
    app.require_subcommand(1);

    std::string form_text = "sym";
    std::string in_path, a_path, b_path, s_path;
    bool render = false;
    bool json = false;
    int lag_n = 0;
    std::optional<std::size_t> limit;
    std::int64_t bound = kDefaultCandidateBound;
    int golden_workers = 1;
    VerifyOptions vo;

    auto* zeroset = app.add_subcommand("zeroset", "Zero set of the Fourier transform of a set's indicator");
    zeroset->add_option("--form", form_text, "sym|euc")->check(CLI::IsMember({"sym", "symplectic", "euc", "euclidean"}));
    zeroset->add_option("--in", in_path, "Set file")->required();
    zeroset->add_flag("--render", render, "Draw the zero set as a grid");
    zeroset->add_flag("--json", json, "JSON output");

    auto* diffset = app.add_subcommand("diffset", "Difference set {a - a' : a != a'}");
    diffset->add_option("--in", in_path, "Set file")->required();
    diffset->add_flag("--render", render, "Draw the difference set as a grid");
    diffset->add_flag("--json", json, "JSON output");

    auto* check = app.add_subcommand("check", "Pair predicates");
    check->require_subcommand(1);
    auto* tiling = check->add_subcommand("tiling", "Is A (+) B the whole group?");
    tiling->add_option("--a", a_path, "Set file for A")->required();
    tiling->add_option("--b", b_path, "Set file for B")->required();
    tiling->add_flag("--json", json, "JSON output");
    auto* spectral = check->add_subcommand("spectral", "Is S a spectrum of A?");
    spectral->add_option("--form", form_text, "sym|euc")->check(CLI::IsMember({"sym", "symplectic", "euc", "euclidean"}));
    spectral->add_option("--a", a_path, "Set file for A")->required();
    spectral->add_option("--s", s_path, "Set file for S")->required();
    spectral->add_flag("--json", json, "JSON output");

    auto* orth = app.add_subcommand("orth", "Symplectic orthogonal of a subgroup");
    orth->add_option("--in", in_path, "Set file holding a subgroup")->required();
    orth->add_flag("--json", json, "JSON output");

    auto* lagrangians = app.add_subcommand("lagrangians", "List the Lagrangian subgroups of Z_n x Z_n");
    lagrangians->add_option("--n", lag_n, "Modulus")->required()->check(CLI::Range(2, kMaxModulus));
    lagrangians->add_flag("--json", json, "JSON output");

    auto* enumerate = app.add_subcommand("enumerate", "List tiling complements or symplectic spectra");
    enumerate->require_subcommand(1);
    std::vector<CLI::App*> enum_kinds;
    for (const char* kind : {"complements", "spectra"}) {
        auto* sub = enumerate->add_subcommand(kind, std::string("All ") + kind + " of a set");
        sub->add_option("--in", in_path, "Set file")->required();
        sub->add_option("--limit", limit, "Print at most this many");
        sub->add_option("--bound", bound, "Candidate bound")->check(CLI::PositiveNumber);
        sub->add_flag("--json", json, "JSON output");
        enum_kinds.push_back(sub);
    }

    auto* verify = app.add_subcommand("verify", "Run a verification suite and print its report");
    verify->add_option("suite", vo.suite, "counting|self|diff|main-i|main-ii|main-iii|cyclic-counterexample")
        ->required()
        ->check(CLI::IsMember({"counting", "self", "diff", "main-i", "main-ii", "main-iii", "cyclic-counterexample"}));
    verify->add_option("--n", vo.n, "Modulus (counting, main-i, cyclic-counterexample)")->check(CLI::Range(2, kMaxModulus));
    verify->add_option("--p", vo.p, "Prime (self, diff, main-ii, main-iii)")->check(CLI::Range(2, kMaxModulus));
    verify->add_option("--mode", vo.mode, "exhaustive|sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
    verify->add_option("--samples", vo.samples, "Instances in sampled mode")->check(CLI::PositiveNumber);
    verify->add_option("--seed", vo.seed, "Seed in sampled mode");
    verify->add_option("--workers", vo.workers, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--bound", vo.bound, "Candidate bound")->check(CLI::PositiveNumber);
    verify->add_option("--kind", vo.kind, "Lagrangian kind for cyclic-counterexample")
        ->check(CLI::IsMember({"cyclic", "noncyclic"}));
    verify->add_flag("--json", vo.json, "JSON report");
    verify->add_flag("--no-elapsed", vo.no_elapsed, "Omit wall-clock time from the report");

    auto* golden = app.add_subcommand("reproduce-paper", "Run every worked example and lemma sweep, print a table");
    golden->add_option("--workers", golden_workers, "Worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*zeroset) {
            const auto a = read_set_file(in_path);
            const auto z = zero_set(a, parse_form(form_text));
            if (json) {
                print_json({{"command", "zeroset"},
                            {"n", a.modulus()},
                            {"form", to_string(z.form)},
                            {"set", set_json(a)},
                            {"zero_set", set_json(z.points)},
                            {"size", z.points.size()}});
            } else {
                std::cout << "form: " << to_string(z.form) << "\n";
                std::cout << "zero set (" << z.points.size() << "): " << to_string(z.points) << "\n";
                if (render) std::cout << render_grid(z);
            }
            return 0;
        }
        if (*diffset) {
            const auto a = read_set_file(in_path);
            const auto d = difference_set(a);
            if (json) {
                print_json({{"command", "diffset"}, {"n", a.modulus()}, {"difference_set", set_json(d)}, {"size", d.size()}});
            } else {
                std::cout << "difference set (" << d.size() << "): " << to_string(d) << "\n";
                if (render) std::cout << render_grid(d, "difference");
            }
            return 0;
        }
        if (*tiling) {
            const auto v = is_tiling_pair(read_set_file(a_path), read_set_file(b_path));
            if (json) {
                auto j = verdict_json(v);
                j["command"] = "check tiling";
                print_json(j);
            } else {
                print_verdict("tiling pair", v);
            }
            return v.holds ? 0 : kExitFailure;
        }
        if (*spectral) {
            const auto form = parse_form(form_text);
            const auto v = is_spectral_pair(read_set_file(a_path), read_set_file(s_path), form);
            if (json) {
                auto j = verdict_json(v);
                j["command"] = "check spectral";
                j["form"] = to_string(form);
                print_json(j);
            } else {
                print_verdict(std::string(to_string(form)) + " spectral pair", v);
            }
            return v.holds ? 0 : kExitFailure;
        }
        if (*orth) {
            const auto h = Subgroup::from_carrier(read_set_file(in_path));
            const auto perp = symplectic_orthogonal(h);
            const bool lag = is_lagrangian(h);
            if (json) {
                print_json({{"command", "orth"}, {"subgroup", set_json(h.carrier())}, {"orthogonal", set_json(perp.carrier())},
                            {"lagrangian", lag}});
            } else {
                std::cout << "orthogonal (" << perp.size() << "): " << to_string(perp.carrier()) << "\n";
                std::cout << "lagrangian: " << (lag ? "yes" : "no") << "\n";
            }
            return 0;
        }
        if (*lagrangians) {
            const auto all = enumerate_lagrangians(lag_n);
            if (json) {
                auto list = ordered_json::array();
                for (const auto& l : all) list.push_back({{"cyclic", l.is_cyclic()}, {"carrier", set_json(l.carrier())}});
                print_json({{"command", "lagrangians"}, {"n", lag_n}, {"count", all.size()}, {"lagrangians", list}});
            } else {
                std::cout << all.size() << " lagrangians of Z_" << lag_n << " x Z_" << lag_n << "\n";
                for (const auto& l : all)
                    std::cout << (l.is_cyclic() ? "cyclic     " : "non-cyclic ") << to_string(l.carrier()) << "\n";
            }
            return 0;
        }
        for (auto* sub : enum_kinds) {
            if (!*sub) continue;
            const bool complements = sub->get_name() == "complements";
            const auto a = read_set_file(in_path);
            const auto found = complements ? enumerate_tiling_complements(a, bound) : enumerate_symplectic_spectra(a, bound);
            const std::size_t shown = std::min(found.size(), limit.value_or(found.size()));
            if (json) {
                auto list = ordered_json::array();
                for (std::size_t i = 0; i < shown; ++i) list.push_back(set_json(found[i]));
                print_json({{"command", "enumerate " + sub->get_name()}, {"count", found.size()}, {"shown", shown}, {"sets", list}});
            } else {
                std::cout << found.size() << " " << sub->get_name() << "\n";
                for (std::size_t i = 0; i < shown; ++i) std::cout << to_string(found[i]) << "\n";
            }
            return 0;
        }
        if (*verify) {
            const auto report = run_suite(vo);
            std::cout << (vo.json ? to_json(report, !vo.no_elapsed) : to_text(report, !vo.no_elapsed));
            return report.passed() ? 0 : kExitFailure;
        }
        if (*golden) {
            const auto cases = reproduce_paper(golden_workers);
            std::cout << format_golden_table(cases);
            for (const auto& c : cases)
                if (!c.passed) return kExitFailure;
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    } catch (const InternalDisagreement& e) {
        std::cerr << "internal disagreement: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
