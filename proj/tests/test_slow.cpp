// Gram-matrix cross-checks of the spectral predicate. Slower than the unit
// suites, so registered under the "slow" ctest label.

#include <gtest/gtest.h>

#include "support.hpp"
#include "symtile/search.hpp"
#include "symtile/setops.hpp"

using namespace symtile;
using namespace symtile::testing;

TEST(GramOracle, SpectraOfNonCyclicComplements) {
    const auto h = torsion_subgroup(4, 2);
    std::int64_t checked = 0;
    for (const auto& a : enumerate_tiling_complements(h.carrier()))
        for (const auto& s : enumerate_symplectic_spectra(a)) {
            ASSERT_TRUE(gram_orthogonal(a, s, Form::symplectic)) << to_string(a) << " " << to_string(s);
            ++checked;
        }
    EXPECT_GT(checked, 256);
}

TEST(GramOracle, AgreesWithPredicateOnRandomPairs) {
    std::mt19937_64 rng(61);
    int spectral = 0;
    for (int i = 0; i < 5000; ++i) {
        const int n = uniform(rng, 2, 9);
        PointSet a(n), s(n);
        if (i % 2 == 0) {
            const auto lags = enumerate_lagrangians(n);
            const auto& h = lags[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(lags.size()) - 1))];
            a = random_transversal(cosets_of(h), rng);
            s = i % 4 == 0 ? h.carrier() : random_transversal(cosets_of(h), rng);
        } else {
            const int k = uniform(rng, 1, std::min(n * n, 9));
            a = random_set_of_size(n, k, rng);
            s = random_set_of_size(n, k, rng);
        }
        for (Form f : {Form::symplectic, Form::euclidean}) {
            const bool predicate = is_spectral_pair(a, s, f).holds;
            ASSERT_EQ(predicate, gram_orthogonal(a, s, f)) << to_string(a) << " " << to_string(s);
            spectral += predicate;
        }
    }
    EXPECT_GT(spectral, 500);
}
