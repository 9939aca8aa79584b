#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "symtile/group.hpp"
#include "symtile/setops.hpp"

using namespace symtile;
using namespace symtile::testing;

namespace {

GroupElement e4(int x1, int x2) { return GroupElement(x1, x2, 4); }

} // namespace

TEST(GroupElement, ReducesCoordinates) {
    const GroupElement g(-1, 9, 4);
    EXPECT_EQ(g.x1(), 3);
    EXPECT_EQ(g.x2(), 1);
    EXPECT_EQ(g.index(), 13);
    EXPECT_EQ(GroupElement::from_index(13, 4), g);
    EXPECT_THROW(GroupElement(0, 0, 1), std::invalid_argument);
}

TEST(GroupElement, MixedModuliThrow) {
    EXPECT_THROW(GroupElement(1, 0, 4) + GroupElement(1, 0, 5), ModulusMismatch);
    EXPECT_THROW(symplectic_form(GroupElement(1, 0, 4), GroupElement(1, 0, 5)), ModulusMismatch);
    EXPECT_THROW(PointSet(4, {GroupElement(1, 0, 5)}), ModulusMismatch);
}

TEST(PointSet, SortsAndDedupes) {
    const PointSet s(4, {e4(3, 3), e4(0, 1), e4(3, 3), e4(0, 0)});
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[0], e4(0, 0));
    EXPECT_EQ(s[2], e4(3, 3));
    EXPECT_TRUE(s.contains(e4(0, 1)));
    EXPECT_FALSE(s.contains(e4(1, 0)));
    EXPECT_EQ(PointSet::from_mask(s.mask()), s);
}

TEST(SymplecticForm, Examples) {
    EXPECT_EQ(symplectic_form(e4(1, 0), e4(0, 1)), 1);
    EXPECT_EQ(symplectic_form(e4(2, 3), e4(2, 3)), 0);
    for (int i = 0; i < 16; ++i) {
        const auto xi = GroupElement::from_index(i, 4);
        EXPECT_EQ(symplectic_form(e4(1, 0), xi), xi.x2());
    }
}

TEST(EuclideanInner, Examples) {
    EXPECT_EQ(euclidean_inner(e4(1, 0), e4(0, 1)), 0);
    EXPECT_EQ(euclidean_inner(e4(1, 2), e4(3, 1)), 1);
    for (int i = 0; i < 16; ++i) EXPECT_EQ(euclidean_inner(e4(0, 0), GroupElement::from_index(i, 4)), 0);
}

TEST(OrderOf, Examples) {
    EXPECT_EQ(order_of(e4(0, 1)), 4);
    EXPECT_EQ(order_of(e4(2, 2)), 2);
    EXPECT_EQ(order_of(e4(0, 0)), 1);
}

TEST(OrderOf, MatchesRepeatedAddition) {
    for (int n = 2; n <= 12; ++n)
        for (int i = 0; i < n * n; ++i) {
            const auto x = GroupElement::from_index(i, n);
            int k = 1;
            for (auto acc = x; !acc.is_zero(); acc = acc + x) ++k;
            EXPECT_EQ(order_of(x), k) << to_string(x) << " n=" << n;
        }
}

TEST(SubgroupGenerated, Examples) {
    EXPECT_EQ(subgroup_generated({e4(1, 1)}, 4).carrier(), PointSet::of(4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}}));
    EXPECT_EQ(subgroup_generated({e4(2, 0), e4(0, 2)}, 4).carrier(), PointSet::of(4, {{0, 0}, {2, 0}, {0, 2}, {2, 2}}));
    const auto trivial = subgroup_generated({}, 4);
    EXPECT_EQ(trivial.carrier(), PointSet::of(4, {{0, 0}}));
    EXPECT_TRUE(trivial.generators().empty());
}

TEST(SubgroupGenerated, CyclicSizeIsOrder) {
    for (int n = 2; n <= 12; ++n)
        for (int i = 0; i < n * n; ++i) {
            const auto x = GroupElement::from_index(i, n);
            EXPECT_EQ(subgroup_generated({x}, n).size(), static_cast<std::size_t>(order_of(x)));
        }
}

TEST(Subgroup, FromCarrierValidates) {
    EXPECT_THROW(Subgroup::from_carrier(PointSet::of(4, {{0, 0}, {1, 0}})), std::invalid_argument);
    const auto h = Subgroup::from_carrier(PointSet::of(4, {{0, 0}, {2, 0}, {0, 2}, {2, 2}}));
    EXPECT_EQ(subgroup_generated(h.generators(), 4), h);
    EXPECT_FALSE(h.is_cyclic());
    EXPECT_TRUE(subgroup_generated({e4(1, 1)}, 4).is_cyclic());
}

TEST(SymplecticOrthogonal, Examples) {
    const auto h1 = symplectic_orthogonal(subgroup_generated({e4(2, 0)}, 4));
    EXPECT_EQ(h1, subgroup_generated({e4(1, 0), e4(0, 2)}, 4));
    EXPECT_EQ(h1.size(), 8u);
    const auto axis = subgroup_generated({e4(0, 1)}, 4);
    EXPECT_EQ(symplectic_orthogonal(axis), axis);
    EXPECT_EQ(symplectic_orthogonal(subgroup_generated({}, 4)).carrier(), PointSet::whole_group(4));
}

TEST(IsLagrangian, Examples) {
    EXPECT_TRUE(is_lagrangian(subgroup_generated({e4(2, 0), e4(0, 2)}, 4)));
    EXPECT_TRUE(is_lagrangian(subgroup_generated({e4(1, 0)}, 4)));
    EXPECT_FALSE(is_lagrangian(subgroup_generated({e4(2, 2)}, 4)));
}

// Brute force: every subset closed under addition that contains 0.
TEST(EnumerateSubgroups, MatchesClosedSubsetScan) {
    for (int n = 2; n <= 4; ++n) {
        const int cells = n * n;
        std::set<PointSet> brute;
        for (std::uint32_t bits = 1; bits < (1u << cells); bits += 2) {  // bit 0 is the origin
            bool closed = true;
            for (int i = 0; i < cells && closed; ++i)
                for (int j = 0; j < cells && closed; ++j)
                    if ((bits >> i & 1u) && (bits >> j & 1u)) {
                        const int s = ((i / n + j / n) % n) * n + (i % n + j % n) % n;
                        closed = bits >> s & 1u;
                    }
            if (!closed) continue;
            std::vector<GroupElement> elems;
            for (int i = 0; i < cells; ++i)
                if (bits >> i & 1u) elems.push_back(GroupElement::from_index(i, n));
            brute.emplace(n, std::move(elems));
        }
        std::set<PointSet> got;
        for (const auto& h : enumerate_subgroups(n)) got.insert(h.carrier());
        EXPECT_EQ(got, brute) << "n=" << n;
        EXPECT_EQ(enumerate_subgroups(n).size(), brute.size());
    }
}

// Every subgroup of Z_n^2 is generated by two elements.
TEST(EnumerateSubgroups, MatchesTwoGeneratorSweep) {
    for (int n = 5; n <= 8; ++n) {
        std::set<std::vector<int>> brute;
        for (int i = 0; i < n * n; ++i)
            for (int j = i; j < n * n; ++j)
                brute.insert(closure_indices(n, {GroupElement::from_index(i, n), GroupElement::from_index(j, n)}));
        std::set<std::vector<int>> got;
        for (const auto& h : enumerate_subgroups(n)) {
            std::vector<int> idx;
            for (const auto& e : h.carrier()) idx.push_back(e.index());
            got.insert(idx);
        }
        EXPECT_EQ(got, brute) << "n=" << n;
    }
}

TEST(EnumerateLagrangians, SmallCases) {
    const auto two = enumerate_lagrangians(2);
    ASSERT_EQ(two.size(), 3u);
    std::set<PointSet> carriers;
    for (const auto& h : two) carriers.insert(h.carrier());
    EXPECT_TRUE(carriers.count(PointSet::of(2, {{0, 0}, {1, 0}})));
    EXPECT_TRUE(carriers.count(PointSet::of(2, {{0, 0}, {0, 1}})));
    EXPECT_TRUE(carriers.count(PointSet::of(2, {{0, 0}, {1, 1}})));

    const auto four = enumerate_lagrangians(4);
    const auto has = [&](const Subgroup& h) { return std::find(four.begin(), four.end(), h) != four.end(); };
    EXPECT_TRUE(has(subgroup_generated({e4(1, 1)}, 4)));
    EXPECT_TRUE(has(subgroup_generated({e4(2, 0), e4(0, 2)}, 4)));
}

TEST(EnumerateLagrangians, PrimeCountIsLinesThroughOrigin) {
    for (int p : {2, 3, 5}) EXPECT_EQ(enumerate_lagrangians(p).size(), static_cast<std::size_t>(p + 1)) << p;
}

TEST(EnumerateLagrangians, AreTheOrderNSubgroups) {
    for (int n = 2; n <= 12; ++n) {
        std::vector<Subgroup> order_n;
        for (const auto& h : enumerate_subgroups(n))
            if (h.size() == static_cast<std::size_t>(n)) order_n.push_back(h);
        EXPECT_EQ(enumerate_lagrangians(n), order_n) << n;
        EXPECT_EQ(order_n.size(), static_cast<std::size_t>(divisor_sum(n))) << n;
    }
}

TEST(EnumerateLagrangians, CanonicalOrderWithoutDuplicates) {
    const auto lags = enumerate_lagrangians(12);
    for (std::size_t i = 1; i < lags.size(); ++i) EXPECT_LT(lags[i - 1].carrier(), lags[i].carrier());
}

TEST(EnumerateLagrangians, BoundExceeded) {
    EXPECT_THROW(enumerate_lagrangians(12, 8), BoundExceeded);
    EXPECT_THROW(enumerate_subgroups(65), BoundExceeded);
}

TEST(Symplectomorphism, RejectsWrongDeterminant) {
    EXPECT_THROW(Symplectomorphism(2, 0, 0, 1, 4), std::invalid_argument);
    EXPECT_NO_THROW(Symplectomorphism(0, 1, -1, 0, 4));
}

TEST(ApplySymplectomorphism, Examples) {
    const auto a = PointSet::of(4, {{0, 0}, {1, 2}, {3, 3}});
    EXPECT_EQ(apply_symplectomorphism(Symplectomorphism::identity(4), a), a);
    EXPECT_EQ(apply_symplectomorphism(Symplectomorphism(1, 0, 1, 1, 4), PointSet::of(4, {{1, 0}})),
              PointSet::of(4, {{1, 1}}));
    EXPECT_EQ(apply_symplectomorphism(Symplectomorphism(0, 1, -1, 0, 4), PointSet::of(4, {{0, 0}, {1, 0}, {2, 0}, {3, 0}})),
              PointSet::of(4, {{0, 0}, {0, 1}, {0, 2}, {0, 3}}));
}

TEST(Symplectomorphism, GroupLaws) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const int n = uniform(rng, 2, 12);
        const auto m = random_symplectomorphism(n, rng);
        EXPECT_EQ(m * m.inverse(), Symplectomorphism::identity(n));
        const auto x = random_element(n, rng);
        const auto l = random_symplectomorphism(n, rng);
        EXPECT_EQ((l * m)(x), l(m(x)));
    }
}

TEST(Symplectomorphism, NormalizingSendsToAxis) {
    for (int n = 2; n <= 12; ++n)
        for (int i = 1; i < n * n; ++i) {
            const auto x = GroupElement::from_index(i, n);
            EXPECT_EQ(Symplectomorphism::normalizing(x)(x), GroupElement(0, n / order_of(x), n)) << to_string(x);
        }
}

TEST(FindSymplecticBasisPartner, Examples) {
    const auto vertical = subgroup_generated({e4(0, 1)}, 4);
    EXPECT_EQ(find_symplectic_basis_partner(e4(1, 0), vertical), e4(0, 1));
    EXPECT_EQ(find_symplectic_basis_partner(e4(1, 1), vertical), e4(0, 1));
    EXPECT_EQ(find_symplectic_basis_partner(e4(2, 0), vertical), std::nullopt);
}

TEST(FindSymplecticBasisPartner, LexicographicallyLeast) {
    const auto all = subgroup_generated({e4(1, 0), e4(0, 1)}, 4);
    EXPECT_EQ(find_symplectic_basis_partner(e4(1, 0), all), e4(0, 1));
    EXPECT_EQ(find_symplectic_basis_partner(e4(0, 1), all), e4(3, 0));
}

TEST(IsCoset, Cases) {
    EXPECT_TRUE(is_coset(PointSet::of(4, {{1, 1}, {3, 1}, {1, 3}, {3, 3}})));
    EXPECT_FALSE(is_coset(PointSet::of(4, {{0, 0}, {1, 0}, {0, 2}, {1, 2}})));
    EXPECT_TRUE(is_subgroup(PointSet::of(4, {{0, 0}, {2, 2}})));
    EXPECT_FALSE(is_subgroup(PointSet::of(4, {{1, 1}, {3, 3}})));
}

TEST(TorsionSubgroup, IsTheNonCyclicLagrangian) {
    for (int p : {2, 3, 5, 7}) {
        const auto h = torsion_subgroup(p * p, p);
        EXPECT_TRUE(is_lagrangian(h));
        EXPECT_FALSE(h.is_cyclic());
        int noncyclic = 0;
        for (const auto& l : enumerate_lagrangians(p * p)) noncyclic += !l.is_cyclic();
        EXPECT_EQ(noncyclic, 1);
    }
}

TEST(PrimePower, Cases) {
    EXPECT_EQ(prime_power(8), (std::pair{2, 3}));
    EXPECT_EQ(prime_power(9), (std::pair{3, 2}));
    EXPECT_EQ(prime_power(12), std::nullopt);
    EXPECT_EQ(prime_power(1), std::nullopt);
    EXPECT_TRUE(is_prime(13));
    EXPECT_FALSE(is_prime(1));
}

// ---------------------------------------------------------------------------
// Properties

TEST(GroupProperties, AntisymmetryAndBilinearity) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        const int n = uniform(rng, 2, 24);
        const auto x = random_element(n, rng), x2 = random_element(n, rng), y = random_element(n, rng);
        EXPECT_EQ(mod(symplectic_form(x, y) + symplectic_form(y, x), n), 0);
        EXPECT_EQ(symplectic_form(x + x2, y), mod(symplectic_form(x, y) + symplectic_form(x2, y), n));
    }
}

TEST(GroupProperties, OrthogonalDualityAndLagrangianClassification) {
    for (int n = 2; n <= 12; ++n)
        for (const auto& h : enumerate_subgroups(n)) {
            const auto perp = symplectic_orthogonal(h);
            EXPECT_EQ(symplectic_orthogonal(perp), h);
            EXPECT_EQ(h.size() * perp.size(), static_cast<std::size_t>(n * n));
            EXPECT_EQ(perp == h, h.size() == static_cast<std::size_t>(n));
            EXPECT_EQ(is_lagrangian(h), h.size() == static_cast<std::size_t>(n));
        }
}

TEST(GroupProperties, SymplectomorphismsPreserveTheForm) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        const int n = uniform(rng, 2, 24);
        const auto m = random_symplectomorphism(n, rng);
        const auto x = random_element(n, rng), y = random_element(n, rng);
        EXPECT_EQ(symplectic_form(m(x), m(y)), symplectic_form(x, y));
    }
}

// Complementary Lagrangians: every generator of a cyclic H finds a partner in H'.
TEST(GroupProperties, ComplementaryLagrangiansGiveSymplecticBases) {
    std::int64_t checked = 0;
    for (int n = 2; n <= 12; ++n) {
        const auto lags = enumerate_lagrangians(n);
        for (const auto& h : lags)
            for (const auto& h2 : lags) {
                if (!is_tiling_pair(h.carrier(), h2.carrier()).holds) continue;
                for (const auto& g : h.carrier()) {
                    if (order_of(g) != n) continue;
                    ++checked;
                    const auto partner = find_symplectic_basis_partner(g, h2);
                    ASSERT_TRUE(partner.has_value()) << to_string(g) << " n=" << n;
                    EXPECT_EQ(symplectic_form(g, *partner), 1 % n);
                }
            }
    }
    EXPECT_GT(checked, 0);
}
