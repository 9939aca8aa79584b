#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symtile/errors.hpp"

namespace symtile {

/// Upper bound on n for the enumeration routines (lagrangians, subgroups).
inline constexpr int kMaxModulus = 64;

/// Non-negative residue of `a` modulo `n`.
constexpr int mod(std::int64_t a, int n) {
    const auto r = static_cast<int>(a % n);
    return r < 0 ? r + n : r;
}

/// An element (x1, x2) of Z_n x Z_n. Coordinates are reduced on construction.
///
/// Ordering is lexicographic on (x1, x2), which coincides with the order of
/// `index()`. Mixing moduli in arithmetic throws ModulusMismatch.
class GroupElement {
public:
    GroupElement(std::int64_t x1, std::int64_t x2, int n);

    static GroupElement zero(int n) { return GroupElement(0, 0, n); }
    static GroupElement from_index(int index, int n) { return GroupElement(index / n, index % n, n); }

    int x1() const noexcept { return x1_; }
    int x2() const noexcept { return x2_; }
    int modulus() const noexcept { return n_; }
    int index() const noexcept { return x1_ * n_ + x2_; }
    bool is_zero() const noexcept { return x1_ == 0 && x2_ == 0; }

    GroupElement operator-() const { return GroupElement(-x1_, -x2_, n_); }
    friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
    friend GroupElement operator-(const GroupElement& a, const GroupElement& b);
    friend GroupElement operator*(std::int64_t k, const GroupElement& a) {
        return GroupElement(k * a.x1_, k * a.x2_, a.n_);
    }

    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

private:
    int x1_;
    int x2_;
    int n_;
};

/// Dense bit mask over the n^2 cells of Z_n x Z_n, addressed by GroupElement::index().
class CellMask {
public:
    explicit CellMask(int n);

    int modulus() const noexcept { return n_; }
    int cells() const noexcept { return n_ * n_; }

    void set(int index) { words_[index >> 6] |= std::uint64_t{1} << (index & 63); }
    void reset(int index) { words_[index >> 6] &= ~(std::uint64_t{1} << (index & 63)); }
    bool test(int index) const { return (words_[index >> 6] >> (index & 63)) & 1U; }
    void set(const GroupElement& g) { set(g.index()); }
    bool test(const GroupElement& g) const { return test(g.index()); }

    int count() const;
    bool none() const;
    bool intersects(const CellMask& other) const;
    bool is_subset_of(const CellMask& other) const;

    CellMask& operator&=(const CellMask& other);
    CellMask& operator|=(const CellMask& other);
    CellMask complement() const;

    /// Calls f(index) for every set cell in increasing order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = __builtin_ctzll(bits);
                f(static_cast<int>(w * 64) + b);
                bits &= bits - 1;
            }
        }
    }

    friend bool operator==(const CellMask&, const CellMask&) = default;

private:
    int n_;
    std::vector<std::uint64_t> words_;
};

/// A finite subset of Z_n x Z_n, kept strictly sorted (lexicographic).
class PointSet {
public:
    explicit PointSet(int n);
    /// Sorts and removes duplicates. Throws ModulusMismatch on foreign elements.
    PointSet(int n, std::vector<GroupElement> elements);

    static PointSet of(int n, std::initializer_list<std::pair<int, int>> coords);
    static PointSet from_mask(const CellMask& mask);
    static PointSet whole_group(int n);

    int modulus() const noexcept { return n_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    bool contains(const GroupElement& g) const;

    const std::vector<GroupElement>& elements() const noexcept { return elements_; }
    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }
    const GroupElement& operator[](std::size_t i) const { return elements_[i]; }

    CellMask mask() const;
    PointSet translated(const GroupElement& t) const;

    friend bool operator==(const PointSet&, const PointSet&) = default;
    friend auto operator<=>(const PointSet& a, const PointSet& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.elements_ <=> b.elements_;
    }

private:
    int n_;
    std::vector<GroupElement> elements_;
};

/// A subgroup of Z_n x Z_n: its full carrier plus a generating list.
class Subgroup {
public:
    /// Validates closure; throws std::invalid_argument if `carrier` is not a subgroup.
    static Subgroup from_carrier(PointSet carrier);

    const PointSet& carrier() const noexcept { return carrier_; }
    const std::vector<GroupElement>& generators() const noexcept { return generators_; }
    int modulus() const noexcept { return carrier_.modulus(); }
    std::size_t size() const noexcept { return carrier_.size(); }
    bool contains(const GroupElement& g) const { return carrier_.contains(g); }
    bool is_cyclic() const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.carrier_ == b.carrier_; }

private:
    Subgroup(PointSet carrier, std::vector<GroupElement> generators)
        : carrier_(std::move(carrier)), generators_(std::move(generators)) {}

    friend Subgroup subgroup_generated(std::span<const GroupElement> gens, int n);

    PointSet carrier_;
    std::vector<GroupElement> generators_;
};

/// A 2x2 matrix ((a b) (c d)) over Z_n with a*d - b*c = 1 (mod n).
class Symplectomorphism {
public:
    /// Throws std::invalid_argument unless the determinant is 1 mod n.
    Symplectomorphism(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, int n);

    static Symplectomorphism identity(int n) { return {1, 0, 0, 1, n}; }
    /// Some M with M*x = (0, n / ord(x)).
    static Symplectomorphism normalizing(const GroupElement& x);

    int a() const noexcept { return a_; }
    int b() const noexcept { return b_; }
    int c() const noexcept { return c_; }
    int d() const noexcept { return d_; }
    int modulus() const noexcept { return n_; }

    GroupElement operator()(const GroupElement& x) const;
    Symplectomorphism inverse() const { return {d_, -b_, -c_, a_, n_}; }
    friend Symplectomorphism operator*(const Symplectomorphism& lhs, const Symplectomorphism& rhs);
    friend bool operator==(const Symplectomorphism&, const Symplectomorphism&) = default;

private:
    int a_, b_, c_, d_, n_;
};

int symplectic_form(const GroupElement& x, const GroupElement& y);
int euclidean_inner(const GroupElement& x, const GroupElement& y);
int order_of(const GroupElement& x);

Subgroup subgroup_generated(std::span<const GroupElement> gens, int n);
inline Subgroup subgroup_generated(std::initializer_list<GroupElement> gens, int n) {
    return subgroup_generated(std::span<const GroupElement>(gens.begin(), gens.size()), n);
}

Subgroup symplectic_orthogonal(const Subgroup& h);
bool is_lagrangian(const Subgroup& h);

/// True when `set` is closed under addition and contains zero.
bool is_subgroup(const PointSet& set);
/// True when `set` is t + L for a subgroup L (any t in `set` works).
bool is_coset(const PointSet& set);

/// Every subgroup of Z_n x Z_n in canonical (carrier) order.
std::vector<Subgroup> enumerate_subgroups(int n, int bound = kMaxModulus);
/// Every order-n subgroup of Z_n x Z_n in canonical (carrier) order.
std::vector<Subgroup> enumerate_lagrangians(int n, int bound = kMaxModulus);
/// The subgroup of all elements killed by p, i.e. pZ_{p^2} x pZ_{p^2} when n = p^2.
Subgroup torsion_subgroup(int n, int p);

PointSet apply_symplectomorphism(const Symplectomorphism& m, const PointSet& set);

/// Lexicographically least h' in `partner_group` with <<h, h'>> = 1.
std::optional<GroupElement> find_symplectic_basis_partner(const GroupElement& h, const Subgroup& partner_group);

/// "(x1,x2)" and "{(x1,x2),...}".
std::string to_string(const GroupElement& g);
std::string to_string(const PointSet& set);

bool is_prime(int v);
/// If v = p^m with p prime and m >= 1, returns {p, m}.
std::optional<std::pair<int, int>> prime_power(int v);

} // namespace symtile
