#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symtile/group.hpp"

namespace symtile {

enum class SearchMode { exhaustive, sampled };

const char* to_string(SearchMode mode);
SearchMode parse_search_mode(const std::string& text);

struct SearchConfig {
    SearchMode mode = SearchMode::exhaustive;
    std::int64_t sample_count = 0;
    std::uint64_t seed = 0;
    int parallelism = 1;
    /// Enumerations estimated (or observed) above this many candidates abort.
    std::int64_t candidate_bound = 10'000'000;

    static SearchConfig exhaustive() { return {}; }
    static SearchConfig sampled(std::int64_t count, std::uint64_t seed) {
        SearchConfig c;
        c.mode = SearchMode::sampled;
        c.sample_count = count;
        c.seed = seed;
        return c;
    }

    /// Throws std::invalid_argument on sampled mode with sample_count < 1 or parallelism < 1.
    void validate() const;
};

/// A replayable problem instance that violated (or, for exploratory searches, exhibited) a property.
struct Witness {
    std::string kind;
    int n = 0;
    std::vector<std::pair<std::string, PointSet>> sets;
    std::optional<GroupElement> element;
    std::string detail;

    const PointSet& set(const std::string& name) const;
};

struct VerificationReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::optional<SearchConfig> config;
    std::vector<std::string> notes;
    std::int64_t instances_checked = 0;
    std::map<std::string, std::int64_t> counters;
    std::vector<Witness> failures;
    /// Exploratory hits (counterexample searches); never affect passed().
    std::vector<Witness> findings;
    std::chrono::nanoseconds elapsed{0};

    bool passed() const noexcept { return failures.empty(); }
    std::string summary_line() const;
};

/// Human-readable report. Everything except the elapsed line is deterministic.
std::string to_text(const VerificationReport& report, bool include_elapsed = true);
/// JSON report (schema 1).
std::string to_json(const VerificationReport& report, bool include_elapsed = true);

/// Re-runs the predicate named by witness.kind. True when the witnessed
/// violation (or finding) is reproduced.
bool replay(const Witness& witness);

} // namespace symtile
