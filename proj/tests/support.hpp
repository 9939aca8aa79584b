#pragma once

// Random generators and brute-force oracles shared by the unit tests, the
// property suites and the acceptance runner. The oracles deliberately avoid
// the library's own predicates.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "symtile/group.hpp"
#include "symtile/transform.hpp"

namespace symtile::testing {

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Nonempty subset of Z_n^2 with a random density.
PointSet random_set(int n, std::mt19937_64& rng);
/// Uniform subset of exactly k cells.
PointSet random_set_of_size(int n, int k, std::mt19937_64& rng);
GroupElement random_element(int n, std::mt19937_64& rng);
/// Uniform over SL2(Z_n) by rejection.
Symplectomorphism random_symplectomorphism(int n, std::mt19937_64& rng);

/// Transform value in double precision, straight from the exponential sum.
std::complex<double> float_transform(const PointSet& a, const GroupElement& xi, Form form);
/// Zero set by floating evaluation with a fixed 1e-9 threshold.
CellMask float_zero_mask(const PointSet& a, Form form);

/// Every g hit exactly once by a + b.
bool brute_tiles(const PointSet& a, const PointSet& b);
/// Characters indexed by S restricted to A are pairwise orthogonal (Gram matrix diagonal).
bool gram_orthogonal(const PointSet& a, const PointSet& s, Form form);

/// Additive closure of `gens` by breadth-first saturation on cell indices.
std::vector<int> closure_indices(int n, const std::vector<GroupElement>& gens);

/// All k-subsets of Z_n^2 in lexicographic index order.
std::vector<PointSet> all_subsets_of_size(int n, int k);

int totient(int n);
int divisor_sum(int n);

} // namespace symtile::testing
