#pragma once

#include <string>
#include <vector>

namespace symtile {

/// One fixed reproduction case with a deterministic one-line outcome.
struct GoldenCase {
    std::string id;
    std::string title;
    bool passed = false;
    std::string detail;
};

/// Axis zero sets, the worked complements in Z_4^2, the subgroup transform
/// sweep, the counting suite and the disjointness sweeps at p = 2 and p = 3.
std::vector<GoldenCase> reproduce_paper(int workers = 1);

/// Fixed-width table, one row per case, then a totals line. No timings.
std::string format_golden_table(const std::vector<GoldenCase>& cases);

} // namespace symtile
