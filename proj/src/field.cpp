// SPDX-License-Identifier: Apache-2.0
#include "mdsc/field.hpp"

#include <bit>
#include <sstream>

namespace mdsc {

namespace gf2poly {

int degree(std::uint64_t p) noexcept { return static_cast<int>(std::bit_width(p)) - 1; }

std::uint64_t mod(std::uint64_t a, std::uint64_t b) noexcept {
    const int db = degree(b);
    for (int da = degree(a); da >= db; da = degree(a))
        a ^= b << (da - db);
    return a;
}

std::optional<int> smallest_factor_degree(std::uint64_t p) noexcept {
    const int n = degree(p);
    for (int d = 1; 2 * d <= n; ++d) {
        for (std::uint64_t f = std::uint64_t{1} << d; f < (std::uint64_t{2} << d); ++f) {
            if (mod(p, f) == 0)
                return d;
        }
    }
    return std::nullopt;
}

} // namespace gf2poly

namespace {

// Shift-and-add product reduced on the fly; only used while building tables.
Elem slow_mul(Elem x, Elem y, std::uint32_t poly, unsigned r) noexcept {
    const Elem top = Elem{1} << r;
    Elem acc = 0;
    while (y != 0) {
        if (y & 1)
            acc ^= x;
        y >>= 1;
        x <<= 1;
        if (x & top)
            x ^= poly;
    }
    return acc;
}

Elem slow_pow(Elem x, std::uint64_t e, std::uint32_t poly, unsigned r) noexcept {
    Elem acc = 1;
    while (e != 0) {
        if (e & 1)
            acc = slow_mul(acc, x, poly, r);
        x = slow_mul(x, x, poly, r);
        e >>= 1;
    }
    return acc;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0)
                n /= p;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

void validate(unsigned r, std::uint32_t poly) {
    if (r < kMinDegree || r > kMaxDegree)
        throw Error(Errc::invalid_degree, "extension degree " + std::to_string(r) + " outside [2, 16]");
    if (gf2poly::degree(poly) != static_cast<int>(r))
        throw Error(Errc::degree_mismatch, "polynomial " + to_hex(poly) + " does not have degree " + std::to_string(r));
    if (auto d = gf2poly::smallest_factor_degree(poly))
        throw Error(Errc::reducible_polynomial,
                    "polynomial " + to_hex(poly) + " is reducible: it has a factor of degree " + std::to_string(*d));
}

} // namespace

std::uint32_t default_polynomial(unsigned r) {
    if (r < kMinDegree || r > kMaxDegree)
        throw Error(Errc::invalid_degree, "extension degree " + std::to_string(r) + " outside [2, 16]");
    std::uint32_t p = (std::uint32_t{1} << r) | 1;
    while (!gf2poly::is_irreducible(p))
        ++p;
    return p;
}

std::string to_hex(std::uint64_t v) {
    std::ostringstream os;
    os << "0x" << std::uppercase << std::hex << v;
    return os.str();
}

Field::Field(unsigned r, std::uint32_t poly) : r_(r), poly_(poly), q_(0) {
    validate(r, poly);
    q_ = std::uint32_t{1} << r;
    const std::uint32_t order = q_ - 1;

    const auto primes = prime_factors(order);
    for (Elem g = 2; g < q_ && generator_ == 0; ++g) {
        bool primitive = true;
        for (auto p : primes) {
            if (slow_pow(g, order / p, poly_, r_) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive)
            generator_ = g;
    }

    exp_.resize(2 * std::size_t{order});
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
        exp_[i] = x;
        exp_[i + order] = x;
        log_[x] = i;
        x = slow_mul(x, generator_, poly_, r_);
    }
}

Elem Field::inv(Elem x) const {
    if (x == 0)
        throw Error(Errc::zero_inverse, "zero has no multiplicative inverse");
    return exp_[group_order() - log_[x]];
}

Elem Field::pow(Elem x, std::uint64_t e) const noexcept {
    if (e == 0)
        return 1;
    if (x == 0)
        return 0;
    const std::uint64_t order = group_order();
    return exp_[static_cast<std::size_t>((log_[x] * (e % order)) % order)];
}

Elem Field::sqrt(Elem x) const noexcept {
    if (x == 0)
        return 0;
    // x^(2^(r-1)); the exponent is reduced modulo the group order.
    std::uint64_t e = 1;
    for (unsigned i = 1; i < r_; ++i)
        e = (e * 2) % group_order();
    return pow(x, e);
}

std::vector<Elem> Field::cube_roots_of_unity() const {
    std::vector<Elem> roots;
    for (Elem x = 1; x < q_; ++x) {
        if (mul(x, mul(x, x)) == 1)
            roots.push_back(x);
    }
    return roots;
}

FieldPtr make_field(unsigned r, std::optional<std::uint32_t> poly) {
    return std::make_shared<const Field>(r, poly ? *poly : default_polynomial(r));
}

} // namespace mdsc
