// SPDX-License-Identifier: Apache-2.0
#include "mdsc/predicates.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>

namespace mdsc {

namespace {

using Mask = std::uint32_t;

// k-subsets of {0..n-1} as bitmasks, in lexicographic order of their sorted
// index lists.
class SubsetTable {
public:
    SubsetTable() {
        for (std::size_t n = 0; n <= kMinorTableMaxOrder; ++n) {
            by_order_[n].resize(n + 1);
            for (std::size_t k = 0; k <= n; ++k) {
                std::vector<std::size_t> idx(k);
                std::iota(idx.begin(), idx.end(), 0);
                auto& out = by_order_[n][k];
                while (true) {
                    Mask m = 0;
                    for (auto i : idx)
                        m |= Mask{1} << i;
                    out.push_back(m);
                    // Next combination in lexicographic order.
                    std::size_t pos = k;
                    while (pos > 0 && idx[pos - 1] == n - k + pos - 1)
                        --pos;
                    if (pos == 0)
                        break;
                    ++idx[pos - 1];
                    for (std::size_t t = pos; t < k; ++t)
                        idx[t] = idx[t - 1] + 1;
                }
            }
        }
    }

    const std::vector<Mask>& get(std::size_t n, std::size_t k) const { return by_order_[n][k]; }

private:
    std::array<std::vector<std::vector<Mask>>, kMinorTableMaxOrder + 1> by_order_;
};

const SubsetTable& subsets() {
    static const SubsetTable table;
    return table;
}

std::vector<std::size_t> mask_indices(Mask m) {
    std::vector<std::size_t> out;
    while (m) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

// All minors of a square matrix indexed by (row mask, column mask), filled
// level by level with sign-free Laplace expansion (characteristic 2) along
// the first selected row.
class MinorTable {
public:
    MinorTable(const Field& f, std::size_t n, std::span<const Elem> data) : f_(f), n_(n), data_(data) {
        // Every entry read at level k was written at level k - 1, so the
        // buffer is reused without clearing.
        auto& buf = buffer();
        if (buf.size() < (std::size_t{1} << (2 * n)))
            buf.resize(std::size_t{1} << (2 * n));
        at(0, 0) = 1;
    }

    Elem get(Mask rows, Mask cols) const { return buffer()[(std::size_t{rows} << n_) | cols]; }

    // Fills level k. With stop_at_zero, returns at the first vanishing minor
    // (lexicographic order); otherwise reports whether any minor vanished.
    std::optional<std::pair<Mask, Mask>> fill(std::size_t k, bool stop_at_zero, bool* any_zero = nullptr) {
        const auto& sets = subsets().get(n_, k);
        std::optional<std::pair<Mask, Mask>> first_zero;
        for (Mask r : sets) {
            const std::size_t top = static_cast<std::size_t>(std::countr_zero(r));
            const Mask rest = r & (r - 1);
            const Elem* row = data_.data() + top * n_;
            for (Mask c : sets) {
                Elem acc = 0;
                for (Mask cm = c; cm; cm &= cm - 1) {
                    const unsigned j = static_cast<unsigned>(std::countr_zero(cm));
                    const Elem x = row[j];
                    if (x != 0)
                        acc ^= f_.mul(x, get(rest, c & ~(Mask{1} << j)));
                }
                at(r, c) = acc;
                if (acc == 0) {
                    if (any_zero)
                        *any_zero = true;
                    if (!first_zero)
                        first_zero = std::make_pair(r, c);
                    if (stop_at_zero)
                        return first_zero;
                }
            }
        }
        return first_zero;
    }

private:
    static std::vector<Elem>& buffer() {
        thread_local std::vector<Elem> buf;
        return buf;
    }

    Elem& at(Mask rows, Mask cols) { return buffer()[(std::size_t{rows} << n_) | cols]; }

    const Field& f_;
    std::size_t n_;
    std::span<const Elem> data_;
};

std::optional<Witness> mds_witness_table(const Field& f, std::size_t n, std::span<const Elem> data) {
    MinorTable table(f, n, data);
    for (std::size_t k = 1; k <= n; ++k) {
        if (auto z = table.fill(k, true))
            return Witness{mask_indices(z->first), mask_indices(z->second), {}};
    }
    return std::nullopt;
}

// nullopt when NMDS holds.
std::optional<Witness> nmds_witness_table(const Field& f, std::size_t n, std::span<const Elem> data) {
    MinorTable table(f, n, data);
    const auto& all = subsets();
    bool any_zero = false;
    for (std::size_t g = 1; g < n; ++g) {
        table.fill(g, false, &any_zero);
        // g x (g+1): some g x g minor obtained by dropping one column is nonzero.
        for (Mask r : all.get(n, g)) {
            for (Mask c : all.get(n, g + 1)) {
                bool full = false;
                for (Mask cm = c; cm && !full; cm &= cm - 1)
                    full = table.get(r, c & ~(cm & (~cm + 1))) != 0;
                if (!full)
                    return Witness{mask_indices(r), mask_indices(c), "rank_deficient"};
            }
        }
        // (g+1) x g: drop one row instead.
        for (Mask r : all.get(n, g + 1)) {
            for (Mask c : all.get(n, g)) {
                bool full = false;
                for (Mask rm = r; rm && !full; rm &= rm - 1)
                    full = table.get(r & ~(rm & (~rm + 1)), c) != 0;
                if (!full)
                    return Witness{mask_indices(r), mask_indices(c), "rank_deficient"};
            }
        }
    }
    table.fill(n, false, &any_zero);
    if (!any_zero) {
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        return Witness{idx, idx, "matrix_is_mds"};
    }
    return std::nullopt;
}

// Lexicographic k-subsets of {0..n-1} as index lists (elimination route).
template <class Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        if (!fn(idx))
            return false;
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1)
            --pos;
        if (pos == 0)
            return true;
        ++idx[pos - 1];
        for (std::size_t t = pos; t < k; ++t)
            idx[t] = idx[t - 1] + 1;
    }
}

void require_square(const Matrix& m, const char* op) {
    if (!m.is_square())
        throw Error(Errc::non_square, std::string(op) + " needs a square matrix");
}

void require_nmds_order(const Matrix& m) {
    require_square(m, "is_nmds");
    if (m.rows() < 2)
        throw Error(Errc::invalid_argument, "NMDS is defined for order >= 2");
}

} // namespace

const char* property_name(Property p) noexcept {
    switch (p) {
    case Property::mds: return "mds";
    case Property::nmds: return "nmds";
    case Property::involutory: return "involutory";
    case Property::orthogonal: return "orthogonal";
    case Property::nonsingular: return "nonsingular";
    }
    return "unknown";
}

Property parse_property(const std::string& name) {
    for (auto p : {Property::mds, Property::nmds, Property::involutory, Property::orthogonal, Property::nonsingular})
        if (name == property_name(p))
            return p;
    throw Error(Errc::parse_error, "unknown property '" + name + "'");
}

PredicateReport is_mds(const Matrix& m) {
    require_square(m, "is_mds");
    if (m.rows() > kMinorTableMaxOrder)
        return is_mds_by_elimination(m);
    auto w = mds_witness_table(m.field(), m.rows(), m.data());
    return {Property::mds, !w.has_value(), std::move(w)};
}

PredicateReport is_nmds(const Matrix& m) {
    require_nmds_order(m);
    if (m.rows() > kMinorTableMaxOrder)
        return is_nmds_by_rank(m);
    auto w = nmds_witness_table(m.field(), m.rows(), m.data());
    return {Property::nmds, !w.has_value(), std::move(w)};
}

PredicateReport is_mds_by_elimination(const Matrix& m) {
    require_square(m, "is_mds");
    const std::size_t n = m.rows();
    std::optional<Witness> witness;
    for (std::size_t k = 1; k <= n && !witness; ++k) {
        for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
            return for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
                if (det(submatrix(m, rows, cols)) != 0)
                    return true;
                witness = Witness{rows, cols, {}};
                return false;
            });
        });
    }
    return {Property::mds, !witness.has_value(), std::move(witness)};
}

PredicateReport is_nmds_by_rank(const Matrix& m) {
    require_nmds_order(m);
    const std::size_t n = m.rows();
    std::optional<Witness> witness;
    auto scan = [&](std::size_t nr, std::size_t nc, std::size_t g) {
        for_each_subset(n, nr, [&](const std::vector<std::size_t>& rows) {
            return for_each_subset(n, nc, [&](const std::vector<std::size_t>& cols) {
                if (rank(submatrix(m, rows, cols)) >= g)
                    return true;
                witness = Witness{rows, cols, "rank_deficient"};
                return false;
            });
        });
    };
    for (std::size_t g = 1; g < n && !witness; ++g) {
        scan(g, g + 1, g);
        if (!witness)
            scan(g + 1, g, g);
    }
    if (!witness && is_mds_by_elimination(m).holds) {
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        witness = Witness{idx, idx, "matrix_is_mds"};
    }
    return {Property::nmds, !witness.has_value(), std::move(witness)};
}

bool is_involutory(const Matrix& m) {
    require_square(m, "is_involutory");
    return matmul(m, m).is_identity();
}

bool is_orthogonal(const Matrix& m) {
    require_square(m, "is_orthogonal");
    return matmul(m, m.transpose()).is_identity();
}

PredicateReport check(const Matrix& m, Property p) {
    switch (p) {
    case Property::mds: return is_mds(m);
    case Property::nmds: return is_nmds(m);
    case Property::involutory: return {p, is_involutory(m), std::nullopt};
    case Property::orthogonal: return {p, is_orthogonal(m), std::nullopt};
    case Property::nonsingular: {
        if (!m.is_square())
            throw Error(Errc::non_square, "nonsingular needs a square matrix");
        PredicateReport rep{p, det(m) != 0, std::nullopt};
        if (!rep.holds) {
            std::vector<std::size_t> idx(m.rows());
            std::iota(idx.begin(), idx.end(), 0);
            rep.witness = Witness{idx, idx, {}};
        }
        return rep;
    }
    }
    throw Error(Errc::invalid_argument, "unknown property");
}

bool is_mds_square(const Field& f, std::size_t n, std::span<const Elem> data) {
    return !mds_witness_table(f, n, data).has_value();
}

bool is_nmds_square(const Field& f, std::size_t n, std::span<const Elem> data) {
    return !nmds_witness_table(f, n, data).has_value();
}

bool fast_hadamard4_mds(const Field& f, Elem a, Elem b, Elem c, Elem d) noexcept {
    if (a == 0 || b == 0 || c == 0 || d == 0)
        return false;
    if ((a ^ b) == 0 || (c ^ d) == 0 || (a ^ c) == 0 || (b ^ d) == 0 || (a ^ d) == 0 || (b ^ c) == 0 ||
        (a ^ b ^ c ^ d) == 0)
        return false;
    return (f.mul(b, c) ^ f.mul(a, d)) != 0 && (f.mul(a, c) ^ f.mul(b, d)) != 0 && (f.mul(a, b) ^ f.mul(c, d)) != 0;
}

bool hadamard4_mds_conditions(const Field& f, Elem a, Elem b, Elem c, Elem d) noexcept {
    if (a == 0 || b == 0 || c == 0 || d == 0)
        return false;
    if (a == b || a == c || a == d || b == c || b == d || c == d)
        return false;
    const Elem ia = f.inv(a), ib = f.inv(b), ic = f.inv(c);
    return d != f.mul(f.mul(ia, b), c) && d != f.mul(f.mul(a, ib), c) && d != f.mul(f.mul(a, b), ic) &&
           d != (a ^ b ^ c);
}

bool fast_circulant4_mds(const Field& f, Elem a, Elem b, Elem c, Elem d) noexcept {
    if (a == 0 || b == 0 || c == 0 || d == 0)
        return false;
    if ((a ^ c) == 0 || (b ^ d) == 0 || (a ^ b ^ c ^ d) == 0)
        return false;
    const Elem a2 = f.mul(a, a), b2 = f.mul(b, b), c2 = f.mul(c, c), d2 = f.mul(d, d);
    const Elem ac = f.mul(a, c), bd = f.mul(b, d);
    if ((f.mul(a, b) ^ f.mul(c, d)) == 0 || (b2 ^ ac) == 0 || (c2 ^ bd) == 0 || (f.mul(b, c) ^ f.mul(a, d)) == 0 ||
        (a2 ^ bd) == 0 || (ac ^ d2) == 0)
        return false;
    // a^2 b + b c^2 + b^2 d + d^3
    if ((f.mul(a2, b) ^ f.mul(b, c2) ^ f.mul(b2, d) ^ f.mul(d2, d)) == 0)
        return false;
    // a^3 + b^2 c + a c^2 + c d^2
    if ((f.mul(a2, a) ^ f.mul(b2, c) ^ f.mul(a, c2) ^ f.mul(c, d2)) == 0)
        return false;
    // a b^2 + a^2 c + c^3 + a d^2
    if ((f.mul(a, b2) ^ f.mul(a2, c) ^ f.mul(c2, c) ^ f.mul(a, d2)) == 0)
        return false;
    // b^3 + a^2 d + c^2 d + b d^2
    return (f.mul(b2, b) ^ f.mul(a2, d) ^ f.mul(c2, d) ^ f.mul(b, d2)) != 0;
}

bool hadamard_mds_distinctness(std::span<const Elem> first_row) {
    std::vector<Elem> sorted(first_row.begin(), first_row.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

} // namespace mdsc
