#pragma once

#include <stdexcept>
#include <string>

namespace symtile {

/// Two operands live in Z_n x Z_n for different n.
class ModulusMismatch : public std::invalid_argument {
public:
    ModulusMismatch(int lhs, int rhs)
        : std::invalid_argument("modulus mismatch: " + std::to_string(lhs) +
                                " vs " + std::to_string(rhs)) {}
};

/// An enumeration or table would exceed its configured size limit.
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two characterizations of the same property disagreed. Always a bug.
class InternalDisagreement : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void require_same_modulus(int lhs, int rhs) {
    if (lhs != rhs) throw ModulusMismatch(lhs, rhs);
}

} // namespace symtile
