// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mdsc/error.hpp"

namespace mdsc {

/// Element of GF(2^r): bit i holds the coefficient of x^i, so addition is XOR.
using Elem = std::uint32_t;

inline constexpr unsigned kMinDegree = 2;
inline constexpr unsigned kMaxDegree = 16;

namespace gf2poly {

/// Degree of a nonzero polynomial over GF(2); -1 for the zero polynomial.
int degree(std::uint64_t p) noexcept;

/// Remainder of a divided by b over GF(2). b must be nonzero.
std::uint64_t mod(std::uint64_t a, std::uint64_t b) noexcept;

/// Degree of the smallest nontrivial factor found by trial division, or
/// nullopt when p is irreducible. p must have degree >= 1.
std::optional<int> smallest_factor_degree(std::uint64_t p) noexcept;

inline bool is_irreducible(std::uint64_t p) noexcept { return degree(p) >= 1 && !smallest_factor_degree(p); }

} // namespace gf2poly

/// Smallest irreducible polynomial of degree r (as an integer), e.g. 0x13 for r = 4.
std::uint32_t default_polynomial(unsigned r);

std::string to_hex(std::uint64_t v);

/// Binary field GF(2^r) with exp/log tables over a primitive element.
/// Immutable after construction; share it through FieldPtr.
class Field {
public:
    Field(unsigned r, std::uint32_t poly);

    unsigned degree() const noexcept { return r_; }
    std::uint32_t poly() const noexcept { return poly_; }
    /// Number of elements, 2^r.
    std::uint32_t size() const noexcept { return q_; }
    /// Order of the multiplicative group, 2^r - 1.
    std::uint32_t group_order() const noexcept { return q_ - 1; }
    Elem generator() const noexcept { return generator_; }

    bool contains(Elem x) const noexcept { return x < q_; }
    bool same_as(const Field& other) const noexcept { return r_ == other.r_ && poly_ == other.poly_; }

    static Elem add(Elem x, Elem y) noexcept { return x ^ y; }

    Elem mul(Elem x, Elem y) const noexcept {
        if (x == 0 || y == 0)
            return 0;
        return exp_[log_[x] + log_[y]];
    }

    Elem square(Elem x) const noexcept { return mul(x, x); }

    /// Throws Errc::zero_inverse for x = 0.
    Elem inv(Elem x) const;

    /// x / y; throws for y = 0.
    Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }

    /// pow(0, 0) is 1 by convention.
    Elem pow(Elem x, std::uint64_t e) const noexcept;

    /// The unique y with y^2 = x, i.e. x^(2^(r-1)).
    Elem sqrt(Elem x) const noexcept;

    /// Discrete log to the stored generator; x must be nonzero.
    std::uint32_t log(Elem x) const noexcept { return log_[x]; }

    /// All x with x^3 = 1, ascending.
    std::vector<Elem> cube_roots_of_unity() const;

private:
    unsigned r_;
    std::uint32_t poly_;
    std::uint32_t q_;
    Elem generator_ = 0;
    std::vector<Elem> exp_;          // length 2(q-1) so log sums need no reduction
    std::vector<std::uint32_t> log_; // log_[0] is unused
};

using FieldPtr = std::shared_ptr<const Field>;

/// Validates (r, poly) and builds the tables. Without poly the default
/// polynomial for r is used.
FieldPtr make_field(unsigned r, std::optional<std::uint32_t> poly = std::nullopt);

} // namespace mdsc
