#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "symtile/group.hpp"
#include "symtile/report.hpp"

namespace symtile {

inline constexpr std::int64_t kDefaultCandidateBound = 10'000'000;

/// Cosets of `h`, each sorted, ordered by least element.
std::vector<PointSet> cosets_of(const Subgroup& h);

/// Every B with A (+) B = Z_n^2, in canonical order.
///
/// Subgroups are handled by iterating coset transversals directly (the
/// estimate |A|^(n^2/|A|) is checked against `bound` up front); other sets go
/// through an exact-cover backtrack whose visited-node count is bounded.
/// Throws std::invalid_argument when |A| does not divide n^2 and BoundExceeded
/// when the search is too large.
std::vector<PointSet> enumerate_tiling_complements(const PointSet& a, std::int64_t bound = kDefaultCandidateBound);

/// Every S with |S| = |A| and Delta S within Z(1_A^sym): the cliques of size
/// |A| in the graph u ~ v iff u - v is a zero. Canonical order.
std::vector<PointSet> enumerate_symplectic_spectra(const PointSet& a, std::int64_t bound = kDefaultCandidateBound);

/// One uniformly chosen element from each coset.
PointSet random_transversal(const std::vector<PointSet>& cosets, std::mt19937_64& rng);
/// A tiling complement found by randomized backtracking, if any is reachable within `bound` nodes.
std::optional<PointSet> random_tiling_complement(const PointSet& a, std::mt19937_64& rng,
                                                 std::int64_t bound = kDefaultCandidateBound);
/// A symplectic spectrum found by randomized backtracking, if any is reachable within `bound` nodes.
std::optional<PointSet> random_symplectic_spectrum(const PointSet& a, std::mt19937_64& rng,
                                                   std::int64_t bound = kDefaultCandidateBound);

/// Deterministic per-instance generator: depends only on (seed, index).
std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index);

/// Cases of the tiling/spectrum theorem: A a Lagrangian of Z_n^2; A a tile of
/// Z_p^2; A a complement of the non-cyclic Lagrangian of Z_{p^2}^2.
enum class TheoremCase { lagrangian, prime, prime_square };

const char* to_string(TheoremCase c);
/// Accepts "i", "ii", "iii".
TheoremCase parse_theorem_case(const std::string& text);

enum class LagrangianKind { cyclic, noncyclic };

/// |A meet <px>^perp| = p |A meet <x>^perp| whenever x in Z(1_A^sym) has order
/// p^m, plus the equal-count refinement over the slices V_0..V_{p-1}.
/// Exhaustive over all nonempty A for n <= 4.
VerificationReport verify_counting_lemma(int n, const SearchConfig& config);

/// A meet Z(1_A^sym) is empty for complements A of the non-cyclic Lagrangian of Z_{p^2}^2.
VerificationReport verify_lemma_self(int p, const SearchConfig& config);

/// Delta A meet Z(1_A^sym) is empty for the same family.
VerificationReport verify_lemma_diff(int p, const SearchConfig& config);

/// A is a symplectic spectrum of each of its tiling complements and a tiling
/// complement of each of its symplectic spectra.
VerificationReport verify_theorem_main(TheoremCase which, int n_or_p, const SearchConfig& config);

/// Complements A of Lagrangians of the given kind with Delta A meeting Z(1_A^sym).
/// At n = 4 (cyclic) the known witness {0,1}x{0,2} against <(1,1)> must be found.
VerificationReport search_counterexamples_cyclic(int n, const SearchConfig& config,
                                                 LagrangianKind kind = LagrangianKind::cyclic);

} // namespace symtile
