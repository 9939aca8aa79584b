#include "symtile/group.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace symtile {

GroupElement::GroupElement(std::int64_t x1, std::int64_t x2, int n) : x1_(0), x2_(0), n_(n) {
    if (n < 2) throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(n));
    x1_ = mod(x1, n);
    x2_ = mod(x2, n);
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
    require_same_modulus(a.n_, b.n_);
    return GroupElement(a.x1_ + b.x1_, a.x2_ + b.x2_, a.n_);
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) {
    require_same_modulus(a.n_, b.n_);
    return GroupElement(a.x1_ - b.x1_, a.x2_ - b.x2_, a.n_);
}

// ---------------------------------------------------------------------------
// CellMask

CellMask::CellMask(int n) : n_(n), words_((static_cast<std::size_t>(n) * n + 63) / 64, 0) {}

int CellMask::count() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
}

bool CellMask::none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool CellMask::intersects(const CellMask& other) const {
    require_same_modulus(n_, other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

bool CellMask::is_subset_of(const CellMask& other) const {
    require_same_modulus(n_, other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

CellMask& CellMask::operator&=(const CellMask& other) {
    require_same_modulus(n_, other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

CellMask& CellMask::operator|=(const CellMask& other) {
    require_same_modulus(n_, other.n_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

CellMask CellMask::complement() const {
    CellMask out(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    // clear padding past n^2
    const int tail = cells() % 64;
    if (tail != 0) out.words_.back() &= (std::uint64_t{1} << tail) - 1;
    return out;
}

// ---------------------------------------------------------------------------
// PointSet

PointSet::PointSet(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(n));
}

PointSet::PointSet(int n, std::vector<GroupElement> elements) : PointSet(n) {
    for (const auto& e : elements) require_same_modulus(n, e.modulus());
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    elements_ = std::move(elements);
}

PointSet PointSet::of(int n, std::initializer_list<std::pair<int, int>> coords) {
    std::vector<GroupElement> elems;
    elems.reserve(coords.size());
    for (auto [x1, x2] : coords) elems.emplace_back(x1, x2, n);
    return PointSet(n, std::move(elems));
}

PointSet PointSet::from_mask(const CellMask& mask) {
    PointSet out(mask.modulus());
    out.elements_.reserve(static_cast<std::size_t>(mask.count()));
    mask.for_each([&](int idx) { out.elements_.push_back(GroupElement::from_index(idx, mask.modulus())); });
    return out;
}

PointSet PointSet::whole_group(int n) {
    PointSet out(n);
    out.elements_.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n * n; ++i) out.elements_.push_back(GroupElement::from_index(i, n));
    return out;
}

bool PointSet::contains(const GroupElement& g) const {
    return g.modulus() == n_ && std::binary_search(elements_.begin(), elements_.end(), g);
}

CellMask PointSet::mask() const {
    CellMask m(n_);
    for (const auto& e : elements_) m.set(e);
    return m;
}

PointSet PointSet::translated(const GroupElement& t) const {
    std::vector<GroupElement> moved;
    moved.reserve(elements_.size());
    for (const auto& e : elements_) moved.push_back(e + t);
    return PointSet(n_, std::move(moved));
}

// ---------------------------------------------------------------------------
// Symplectomorphism

Symplectomorphism::Symplectomorphism(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, int n)
    : a_(mod(a, n)), b_(mod(b, n)), c_(mod(c, n)), d_(mod(d, n)), n_(n) {
    const int det = mod(static_cast<std::int64_t>(a_) * d_ - static_cast<std::int64_t>(b_) * c_, n);
    if (det != 1 % n)
        throw std::invalid_argument("symplectomorphism needs determinant 1 mod " + std::to_string(n) +
                                    ", got " + std::to_string(det));
}

GroupElement Symplectomorphism::operator()(const GroupElement& x) const {
    require_same_modulus(n_, x.modulus());
    return GroupElement(static_cast<std::int64_t>(a_) * x.x1() + static_cast<std::int64_t>(b_) * x.x2(),
                        static_cast<std::int64_t>(c_) * x.x1() + static_cast<std::int64_t>(d_) * x.x2(), n_);
}

Symplectomorphism operator*(const Symplectomorphism& l, const Symplectomorphism& r) {
    require_same_modulus(l.n_, r.n_);
    using I = std::int64_t;
    return Symplectomorphism(I{l.a_} * r.a_ + I{l.b_} * r.c_, I{l.a_} * r.b_ + I{l.b_} * r.d_,
                             I{l.c_} * r.a_ + I{l.d_} * r.c_, I{l.c_} * r.b_ + I{l.d_} * r.d_, l.n_);
}

Symplectomorphism Symplectomorphism::normalizing(const GroupElement& x) {
    const int n = x.modulus();
    const int scale = n / order_of(x);
    // Lift x = scale * u with u primitive, then complete u to a symplectic basis (v, u).
    for (int i = 0; i < n * n; ++i) {
        const auto u = GroupElement::from_index(i, n);
        if (std::gcd(std::gcd(u.x1(), u.x2()), n) != 1 || scale * u != x) continue;
        for (int j = 0; j < n * n; ++j) {
            const auto v = GroupElement::from_index(j, n);
            if (symplectic_form(v, u) == 1 % n) return Symplectomorphism(u.x2(), -u.x1(), -v.x2(), v.x1(), n);
        }
    }
    throw std::logic_error("no normalizing symplectomorphism found");
}

// ---------------------------------------------------------------------------
// Free functions

int symplectic_form(const GroupElement& x, const GroupElement& y) {
    require_same_modulus(x.modulus(), y.modulus());
    return mod(static_cast<std::int64_t>(x.x1()) * y.x2() - static_cast<std::int64_t>(x.x2()) * y.x1(), x.modulus());
}

int euclidean_inner(const GroupElement& x, const GroupElement& y) {
    require_same_modulus(x.modulus(), y.modulus());
    return mod(static_cast<std::int64_t>(x.x1()) * y.x1() + static_cast<std::int64_t>(x.x2()) * y.x2(), x.modulus());
}

int order_of(const GroupElement& x) {
    return x.modulus() / std::gcd(x.modulus(), std::gcd(x.x1(), x.x2()));
}

PointSet apply_symplectomorphism(const Symplectomorphism& m, const PointSet& set) {
    require_same_modulus(m.modulus(), set.modulus());
    std::vector<GroupElement> image;
    image.reserve(set.size());
    for (const auto& e : set) image.push_back(m(e));
    return PointSet(set.modulus(), std::move(image));
}

std::optional<GroupElement> find_symplectic_basis_partner(const GroupElement& h, const Subgroup& partner_group) {
    require_same_modulus(h.modulus(), partner_group.modulus());
    for (const auto& candidate : partner_group.carrier())
        if (symplectic_form(h, candidate) == 1) return candidate;
    return std::nullopt;
}

std::string to_string(const GroupElement& g) {
    return "(" + std::to_string(g.x1()) + "," + std::to_string(g.x2()) + ")";
}

std::string to_string(const PointSet& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ",";
        out += to_string(set[i]);
    }
    return out + "}";
}

bool is_prime(int v) {
    if (v < 2) return false;
    for (int q = 2; q * q <= v; ++q)
        if (v % q == 0) return false;
    return true;
}

std::optional<std::pair<int, int>> prime_power(int v) {
    if (v < 2) return std::nullopt;
    int p = 2;
    while (v % p != 0) ++p;
    int m = 0;
    while (v % p == 0) {
        v /= p;
        ++m;
    }
    if (v != 1) return std::nullopt;
    return std::pair{p, m};
}

} // namespace symtile
