#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

namespace symtile {

/// Largest order accepted by cyclotomic_polynomial / is_zero.
inline constexpr int kMaxCyclotomicOrder = 1024;

/// Dense integer polynomial, constant term first.
struct CycloPolynomial {
    std::vector<std::int64_t> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    friend bool operator==(const CycloPolynomial&, const CycloPolynomial&) = default;
};

/// The n-th cyclotomic polynomial, memoized. Throws BoundExceeded above kMaxCyclotomicOrder.
const CycloPolynomial& cyclotomic_polynomial(int n);

/// Sum_j counts[j] * w^j with w = exp(2 pi i / n), held exactly as exponent counts.
class CycloSum {
public:
    explicit CycloSum(int n);
    CycloSum(int n, std::vector<std::int64_t> counts);

    int modulus() const noexcept { return n_; }
    const std::vector<std::int64_t>& counts() const noexcept { return counts_; }
    std::int64_t operator[](int j) const { return counts_[static_cast<std::size_t>(j)]; }

    /// Increments the coefficient of w^(j mod n).
    CycloSum& add_root(std::int64_t j);

    friend CycloSum add(const CycloSum& s, const CycloSum& t);
    friend CycloSum negate(const CycloSum& s);
    friend bool operator==(const CycloSum&, const CycloSum&) = default;

private:
    int n_;
    std::vector<std::int64_t> counts_;
};

CycloSum add(const CycloSum& s, const CycloSum& t);
CycloSum negate(const CycloSum& s);
inline CycloSum add_root(CycloSum s, std::int64_t j) { return std::move(s.add_root(j)); }

/// Exact test: the count polynomial reduces to 0 modulo Phi_n.
bool is_zero(const CycloSum& s);

/// Double-precision evaluation, used only to cross-check is_zero.
std::complex<double> approx_complex(const CycloSum& s);

} // namespace symtile
