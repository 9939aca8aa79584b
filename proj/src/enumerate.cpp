#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "symtile/search.hpp"
#include "symtile/setops.hpp"
#include "symtile/transform.hpp"

namespace symtile {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

[[noreturn]] void node_budget_exhausted(const char* what, std::int64_t bound) {
    throw BoundExceeded(std::string(what) + " visited more than " + std::to_string(bound) + " search nodes");
}

// Exact cover of Z_n^2 by translates of A: the least uncovered cell picks the
// translate covering it, so every complement is reached exactly once.
class CoverSearch {
public:
    CoverSearch(const PointSet& a, std::int64_t bound) : n_(a.modulus()), bound_(bound), covered_(n_) {
        const int cells = n_ * n_;
        translates_.reserve(static_cast<std::size_t>(cells));
        for (int t = 0; t < cells; ++t) translates_.push_back(a.translated(GroupElement::from_index(t, n_)).mask());
        offsets_.assign(a.begin(), a.end());
    }

    std::vector<PointSet> all() {
        chosen_.clear();
        stop_at_first_ = false;
        recurse(nullptr);
        return std::move(found_);
    }

    std::optional<PointSet> first(std::mt19937_64& rng) {
        chosen_.clear();
        stop_at_first_ = true;
        try {
            recurse(&rng);
        } catch (const BoundExceeded&) {
            return std::nullopt;
        }
        if (found_.empty()) return std::nullopt;
        return std::move(found_.front());
    }

private:
    bool recurse(std::mt19937_64* rng) {
        if (++nodes_ > bound_) node_budget_exhausted("complement search", bound_);
        int target = -1;
        for (int i = 0; i < n_ * n_; ++i)
            if (!covered_.test(i)) {
                target = i;
                break;
            }
        if (target < 0) {
            found_.emplace_back(n_, chosen_);
            return true;
        }
        const auto g = GroupElement::from_index(target, n_);
        std::vector<GroupElement> order = offsets_;
        if (rng) std::shuffle(order.begin(), order.end(), *rng);
        for (const auto& a : order) {
            const GroupElement b = g - a;
            const CellMask& piece = translates_[static_cast<std::size_t>(b.index())];
            if (piece.intersects(covered_)) continue;
            covered_ |= piece;
            chosen_.push_back(b);
            const bool done = recurse(rng) && stop_at_first_;
            chosen_.pop_back();
            piece.for_each([&](int idx) { covered_.reset(idx); });
            if (done) return true;
        }
        return false;
    }

    int n_;
    std::int64_t bound_;
    std::int64_t nodes_ = 0;
    bool stop_at_first_ = false;
    CellMask covered_;
    std::vector<CellMask> translates_;
    std::vector<GroupElement> offsets_;
    std::vector<GroupElement> chosen_;
    std::vector<PointSet> found_;
};

// Cliques of a fixed size in the graph u ~ v iff u - v lies in `zeros`.
class CliqueSearch {
public:
    CliqueSearch(const CellMask& zeros, int size, std::int64_t bound)
        : n_(zeros.modulus()), size_(size), bound_(bound) {
        const int cells = n_ * n_;
        adjacency_.reserve(static_cast<std::size_t>(cells));
        for (int v = 0; v < cells; ++v) {
            CellMask row(n_);
            const auto gv = GroupElement::from_index(v, n_);
            zeros.for_each([&](int z) { row.set(gv + GroupElement::from_index(z, n_)); });
            adjacency_.push_back(std::move(row));
        }
    }

    std::vector<PointSet> all() {
        CellMask everything = CellMask(n_).complement();
        stop_at_first_ = false;
        recurse(everything, nullptr);
        return std::move(found_);
    }

    std::optional<PointSet> first(std::mt19937_64& rng) {
        CellMask everything = CellMask(n_).complement();
        stop_at_first_ = true;
        try {
            recurse(everything, &rng);
        } catch (const BoundExceeded&) {
            return std::nullopt;
        }
        if (found_.empty()) return std::nullopt;
        return std::move(found_.front());
    }

private:
    // Each clique is reached once: after v is tried it leaves the candidate pool.
    bool recurse(CellMask& candidates, std::mt19937_64* rng) {
        if (++nodes_ > bound_) node_budget_exhausted("spectrum search", bound_);
        if (static_cast<int>(chosen_.size()) == size_) {
            found_.emplace_back(n_, chosen_);
            return true;
        }
        const int need = size_ - static_cast<int>(chosen_.size());
        if (candidates.count() < need) return false;

        std::vector<int> order;
        candidates.for_each([&](int v) { order.push_back(v); });
        if (rng) std::shuffle(order.begin(), order.end(), *rng);

        CellMask remaining = candidates;
        for (int v : order) {
            if (remaining.count() < need) break;
            remaining.reset(v);
            CellMask next = remaining;
            next &= adjacency_[static_cast<std::size_t>(v)];
            chosen_.push_back(GroupElement::from_index(v, n_));
            const bool done = recurse(next, rng) && stop_at_first_;
            chosen_.pop_back();
            if (done) return true;
        }
        return false;
    }

    int n_;
    int size_;
    std::int64_t bound_;
    std::int64_t nodes_ = 0;
    bool stop_at_first_ = false;
    std::vector<CellMask> adjacency_;
    std::vector<GroupElement> chosen_;
    std::vector<PointSet> found_;
};

std::int64_t saturating_pow(std::int64_t base, std::int64_t exp, std::int64_t cap) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        if (r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

} // namespace

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(index)));
}

std::vector<PointSet> cosets_of(const Subgroup& h) {
    const int n = h.modulus();
    CellMask seen(n);
    std::vector<PointSet> out;
    for (int i = 0; i < n * n; ++i) {
        if (seen.test(i)) continue;
        PointSet coset = h.carrier().translated(GroupElement::from_index(i, n));
        for (const auto& e : coset) seen.set(e);
        out.push_back(std::move(coset));
    }
    return out;
}

std::vector<PointSet> enumerate_tiling_complements(const PointSet& a, std::int64_t bound) {
    if (a.empty()) throw std::invalid_argument("complements of the empty set are undefined");
    const auto cells = static_cast<std::int64_t>(a.modulus()) * a.modulus();
    if (cells % static_cast<std::int64_t>(a.size()) != 0)
        throw std::invalid_argument("|A| = " + std::to_string(a.size()) + " does not divide n^2");

    std::vector<PointSet> out;
    if (is_subgroup(a)) {
        const auto cosets = cosets_of(Subgroup::from_carrier(a));
        const auto k = static_cast<std::int64_t>(a.size());
        const std::int64_t total = saturating_pow(k, static_cast<std::int64_t>(cosets.size()), bound);
        if (total > bound)
            throw BoundExceeded("transversal count " + std::to_string(k) + "^" + std::to_string(cosets.size()) +
                                " exceeds bound " + std::to_string(bound));
        out.reserve(static_cast<std::size_t>(total));
        std::vector<std::size_t> digit(cosets.size(), 0);
        std::vector<GroupElement> pick;
        for (std::int64_t t = 0; t < total; ++t) {
            pick.clear();
            for (std::size_t c = 0; c < cosets.size(); ++c) pick.push_back(cosets[c][digit[c]]);
            out.emplace_back(a.modulus(), pick);
            for (std::size_t c = cosets.size(); c-- > 0;) {
                if (++digit[c] < static_cast<std::size_t>(k)) break;
                digit[c] = 0;
            }
        }
    } else {
        out = CoverSearch(a, bound).all();
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PointSet> enumerate_symplectic_spectra(const PointSet& a, std::int64_t bound) {
    auto out = CliqueSearch(zero_mask(a, Form::symplectic), static_cast<int>(a.size()), bound).all();
    std::sort(out.begin(), out.end());
    return out;
}

PointSet random_transversal(const std::vector<PointSet>& cosets, std::mt19937_64& rng) {
    if (cosets.empty()) throw std::invalid_argument("no cosets");
    std::vector<GroupElement> pick;
    pick.reserve(cosets.size());
    for (const auto& c : cosets) {
        std::uniform_int_distribution<std::size_t> dist(0, c.size() - 1);
        pick.push_back(c[dist(rng)]);
    }
    return PointSet(cosets.front().modulus(), std::move(pick));
}

std::optional<PointSet> random_tiling_complement(const PointSet& a, std::mt19937_64& rng, std::int64_t bound) {
    const auto cells = static_cast<std::size_t>(a.modulus()) * a.modulus();
    if (a.empty() || cells % a.size() != 0) return std::nullopt;
    return CoverSearch(a, bound).first(rng);
}

std::optional<PointSet> random_symplectic_spectrum(const PointSet& a, std::mt19937_64& rng, std::int64_t bound) {
    return CliqueSearch(zero_mask(a, Form::symplectic), static_cast<int>(a.size()), bound).first(rng);
}

} // namespace symtile
