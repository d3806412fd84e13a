// SPDX-License-Identifier: Apache-2.0
// Reference implementations that share no code with the library: schoolbook
// carryless multiplication with long-division reduction, Laplace expansion
// for determinants, and brute-force submatrix scans.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Elem = std::uint32_t;
using Mat = std::vector<std::vector<Elem>>;

inline int poly_degree(std::uint64_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out = 0;
    for (int i = 0; i < 32; ++i)
        if ((b >> i) & 1)
            out ^= a << i;
    return out;
}

inline std::uint64_t poly_rem(std::uint64_t a, std::uint64_t m) {
    const int dm = poly_degree(m);
    for (int da = poly_degree(a); da >= dm; da = poly_degree(a))
        a ^= m << (da - dm);
    return a;
}

/// Reducible iff it is a product of two polynomials of degree >= 1.
inline bool irreducible_by_products(std::uint64_t p) {
    const int d = poly_degree(p);
    if (d < 1)
        return false;
    for (std::uint64_t f = 2; poly_degree(f) <= d / 2; ++f)
        for (std::uint64_t g = std::uint64_t{1} << (d - poly_degree(f)); poly_degree(g) == d - poly_degree(f); ++g)
            if (clmul(f, g) == p)
                return false;
    return true;
}

struct Gf {
    unsigned r;
    std::uint32_t poly;

    std::uint32_t q() const { return 1u << r; }
    Elem mul(Elem a, Elem b) const { return static_cast<Elem>(poly_rem(clmul(a, b), poly)); }
    Elem pow(Elem a, std::uint64_t e) const {
        Elem out = 1;
        for (std::uint64_t k = 0; k < e; ++k)
            out = mul(out, a);
        return out;
    }
    /// Inverse by search.
    Elem inv(Elem a) const {
        for (Elem y = 1; y < q(); ++y)
            if (mul(a, y) == 1)
                return y;
        return 0;
    }
};

inline Elem laplace_det(const Gf& f, const Mat& m) {
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    Elem acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0)
            continue;
        Mat sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Elem> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j)
                    row.push_back(m[i][k]);
            sub.push_back(row);
        }
        acc ^= f.mul(m[0][j], laplace_det(f, sub));
    }
    return acc;
}

inline Mat pick(const Mat& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    Mat out;
    for (auto i : rows) {
        std::vector<Elem> row;
        for (auto j : cols)
            row.push_back(m[i][j]);
        out.push_back(row);
    }
    return out;
}

/// All k-subsets of {0..n-1}, each ascending, in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline bool is_mds(const Gf& f, const Mat& m) {
    const std::size_t n = m.size();
    for (std::size_t g = 1; g <= n; ++g)
        for (const auto& rs : subsets(n, g))
            for (const auto& cs : subsets(n, g))
                if (laplace_det(f, pick(m, rs, cs)) == 0)
                    return false;
    return true;
}

/// Some g x g minor of the g x (g+1) or (g+1) x g block is nonzero.
inline bool full_rank_rect(const Gf& f, const Mat& s) {
    const std::size_t rows = s.size(), cols = s[0].size(), g = std::min(rows, cols);
    for (const auto& rs : subsets(rows, g))
        for (const auto& cs : subsets(cols, g))
            if (laplace_det(f, pick(s, rs, cs)) != 0)
                return true;
    return false;
}

inline bool is_nmds(const Gf& f, const Mat& m) {
    const std::size_t n = m.size();
    if (is_mds(f, m))
        return false;
    for (std::size_t g = 1; g < n; ++g) {
        for (const auto& rs : subsets(n, g))
            for (const auto& cs : subsets(n, g + 1))
                if (!full_rank_rect(f, pick(m, rs, cs)))
                    return false;
        for (const auto& rs : subsets(n, g + 1))
            for (const auto& cs : subsets(n, g))
                if (!full_rank_rect(f, pick(m, rs, cs)))
                    return false;
    }
    return true;
}

inline Mat matmul(const Gf& f, const Mat& a, const Mat& b) {
    Mat out(a.size(), std::vector<Elem>(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b[0].size(); ++j)
            for (std::size_t k = 0; k < b.size(); ++k)
                out[i][j] ^= f.mul(a[i][k], b[k][j]);
    return out;
}

inline Mat hadamard(const std::vector<Elem>& row) {
    Mat m(row.size(), std::vector<Elem>(row.size()));
    for (std::size_t i = 0; i < row.size(); ++i)
        for (std::size_t j = 0; j < row.size(); ++j)
            m[i][j] = row[i ^ j];
    return m;
}

inline Mat circulant(const std::vector<Elem>& row) {
    const std::size_t n = row.size();
    Mat m(n, std::vector<Elem>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = row[(j + n - i) % n];
    return m;
}

/// Seeded generator for property tests.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    Elem below(std::uint32_t bound) { return std::uniform_int_distribution<Elem>(0, bound - 1)(eng); }
};

} // namespace oracle
