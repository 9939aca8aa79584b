#include "support.hpp"

#include <algorithm>
#include <deque>
#include <numbers>
#include <numeric>

namespace symtile::testing {

PointSet random_set(int n, std::mt19937_64& rng) {
    const double density = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
    std::bernoulli_distribution keep(density);
    std::vector<GroupElement> out;
    for (int i = 0; i < n * n; ++i)
        if (keep(rng)) out.push_back(GroupElement::from_index(i, n));
    if (out.empty()) out.push_back(random_element(n, rng));
    return PointSet(n, std::move(out));
}

PointSet random_set_of_size(int n, int k, std::mt19937_64& rng) {
    std::vector<int> cells(static_cast<std::size_t>(n * n));
    std::iota(cells.begin(), cells.end(), 0);
    std::shuffle(cells.begin(), cells.end(), rng);
    std::vector<GroupElement> out;
    for (int i = 0; i < k; ++i) out.push_back(GroupElement::from_index(cells[static_cast<std::size_t>(i)], n));
    return PointSet(n, std::move(out));
}

GroupElement random_element(int n, std::mt19937_64& rng) {
    return GroupElement::from_index(uniform(rng, 0, n * n - 1), n);
}

Symplectomorphism random_symplectomorphism(int n, std::mt19937_64& rng) {
    for (;;) {
        const int a = uniform(rng, 0, n - 1), b = uniform(rng, 0, n - 1);
        const int c = uniform(rng, 0, n - 1), d = uniform(rng, 0, n - 1);
        if (mod(static_cast<std::int64_t>(a) * d - static_cast<std::int64_t>(b) * c, n) == 1) return {a, b, c, d, n};
    }
}

std::complex<double> float_transform(const PointSet& a, const GroupElement& xi, Form form) {
    const int n = a.modulus();
    std::complex<double> sum = 0;
    for (const auto& e : a) {
        const long long k = form == Form::symplectic
                                ? static_cast<long long>(e.x1()) * xi.x2() - static_cast<long long>(e.x2()) * xi.x1()
                                : static_cast<long long>(e.x1()) * xi.x1() + static_cast<long long>(e.x2()) * xi.x2();
        sum += std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / n);
    }
    return sum;
}

CellMask float_zero_mask(const PointSet& a, Form form) {
    const int n = a.modulus();
    CellMask out(n);
    for (int i = 0; i < n * n; ++i)
        if (std::abs(float_transform(a, GroupElement::from_index(i, n), form)) < 1e-9) out.set(i);
    return out;
}

bool brute_tiles(const PointSet& a, const PointSet& b) {
    const int n = a.modulus();
    std::vector<int> hits(static_cast<std::size_t>(n * n), 0);
    for (const auto& x : a)
        for (const auto& y : b) ++hits[static_cast<std::size_t>(((x.x1() + y.x1()) % n) * n + (x.x2() + y.x2()) % n)];
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

bool gram_orthogonal(const PointSet& a, const PointSet& s, Form form) {
    if (a.size() != s.size()) return false;
    const int n = a.modulus();
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            // <chi_si, chi_sj> on A is the transform of 1_A at si - sj.
            const GroupElement d(s[i].x1() - s[j].x1(), s[i].x2() - s[j].x2(), n);
            if (std::abs(float_transform(a, d, form)) > 1e-9) return false;
        }
    return true;
}

std::vector<int> closure_indices(int n, const std::vector<GroupElement>& gens) {
    std::vector<bool> seen(static_cast<std::size_t>(n * n), false);
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        const int cur = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            const int next = ((cur / n + g.x1()) % n) * n + (cur % n + g.x2()) % n;
            if (!seen[static_cast<std::size_t>(next)]) {
                seen[static_cast<std::size_t>(next)] = true;
                queue.push_back(next);
            }
        }
    }
    std::vector<int> out;
    for (int i = 0; i < n * n; ++i)
        if (seen[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

std::vector<PointSet> all_subsets_of_size(int n, int k) {
    std::vector<PointSet> out;
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    const int cells = n * n;
    for (;;) {
        std::vector<GroupElement> elems;
        for (int c : pick) elems.push_back(GroupElement::from_index(c, n));
        out.emplace_back(n, std::move(elems));
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == cells - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

int totient(int n) {
    int count = 0;
    for (int k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    return count;
}

int divisor_sum(int n) {
    int s = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) s += d;
    return s;
}

} // namespace symtile::testing
