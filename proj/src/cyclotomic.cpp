#include "symtile/cyclotomic.hpp"

#include <array>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include "symtile/errors.hpp"

namespace symtile {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic arithmetic overflow");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("cyclotomic arithmetic overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic arithmetic overflow");
    return r;
}

// In-place division of `rem` by the monic `divisor`; returns the quotient and
// leaves the remainder in the low `deg(divisor)` entries.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t>& rem, const std::vector<std::int64_t>& divisor) {
    const int dd = static_cast<int>(divisor.size()) - 1;
    const int dr = static_cast<int>(rem.size()) - 1;
    std::vector<std::int64_t> quotient(static_cast<std::size_t>(std::max(dr - dd + 1, 0)), 0);
    for (int top = dr; top >= dd; --top) {
        const std::int64_t c = rem[static_cast<std::size_t>(top)];
        if (c == 0) continue;
        quotient[static_cast<std::size_t>(top - dd)] = c;
        for (int i = 0; i <= dd; ++i) {
            auto& slot = rem[static_cast<std::size_t>(top - dd + i)];
            slot = checked_sub(slot, checked_mul(c, divisor[static_cast<std::size_t>(i)]));
        }
    }
    return quotient;
}

CycloPolynomial compute_cyclotomic(int n) {
    // x^n - 1 = prod_{d | n} Phi_d(x)
    std::vector<std::int64_t> poly(static_cast<std::size_t>(n) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& phi = cyclotomic_polynomial(d).coefficients;
        auto q = divide_monic(poly, phi);
        for (std::size_t i = 0; i + 1 < phi.size(); ++i)
            if (poly[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
        poly = std::move(q);
    }
    return CycloPolynomial{std::move(poly)};
}

struct Cache {
    std::shared_mutex lock;
    std::array<std::unique_ptr<const CycloPolynomial>, kMaxCyclotomicOrder + 1> slots;
};

Cache& cache() {
    static Cache instance;
    return instance;
}

void check_order(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
    if (n > kMaxCyclotomicOrder)
        throw BoundExceeded("cyclotomic order " + std::to_string(n) + " exceeds bound " +
                            std::to_string(kMaxCyclotomicOrder));
}

} // namespace

const CycloPolynomial& cyclotomic_polynomial(int n) {
    check_order(n);
    auto& c = cache();
    {
        std::shared_lock read(c.lock);
        if (const auto* p = c.slots[static_cast<std::size_t>(n)].get()) return *p;
    }
    // Computed outside the lock (recursion takes it again); identical values make the race benign.
    auto computed = std::make_unique<const CycloPolynomial>(compute_cyclotomic(n));
    std::unique_lock write(c.lock);
    auto& slot = c.slots[static_cast<std::size_t>(n)];
    if (!slot) slot = std::move(computed);
    return *slot;
}

CycloSum::CycloSum(int n) : n_(n), counts_(static_cast<std::size_t>(n > 0 ? n : 0), 0) {
    check_order(n);
}

CycloSum::CycloSum(int n, std::vector<std::int64_t> counts) : n_(n), counts_(std::move(counts)) {
    check_order(n);
    if (counts_.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("CycloSum needs exactly n counts");
}

CycloSum& CycloSum::add_root(std::int64_t j) {
    auto& slot = counts_[static_cast<std::size_t>(((j % n_) + n_) % n_)];
    slot = checked_add(slot, 1);
    return *this;
}

CycloSum add(const CycloSum& s, const CycloSum& t) {
    require_same_modulus(s.n_, t.n_);
    CycloSum out(s.n_);
    for (std::size_t j = 0; j < out.counts_.size(); ++j) out.counts_[j] = checked_add(s.counts_[j], t.counts_[j]);
    return out;
}

CycloSum negate(const CycloSum& s) {
    CycloSum out(s.n_);
    for (std::size_t j = 0; j < out.counts_.size(); ++j) out.counts_[j] = checked_sub(0, s.counts_[j]);
    return out;
}

bool is_zero(const CycloSum& s) {
    const auto& phi = cyclotomic_polynomial(s.modulus()).coefficients;
    std::vector<std::int64_t> rem = s.counts();
    if (rem.size() < phi.size()) rem.resize(phi.size(), 0);
    divide_monic(rem, phi);
    for (std::size_t i = 0; i + 1 < phi.size(); ++i)
        if (rem[i] != 0) return false;
    return true;
}

std::complex<double> approx_complex(const CycloSum& s) {
    std::complex<double> total{0.0, 0.0};
    const double step = 2.0 * std::numbers::pi / s.modulus();
    for (int j = 0; j < s.modulus(); ++j) {
        const auto c = s[j];
        if (c != 0) total += static_cast<double>(c) * std::polar(1.0, step * j);
    }
    return total;
}

} // namespace symtile
