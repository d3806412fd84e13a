// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdsc/matrix.hpp"

namespace mdsc {

enum class Property { mds, nmds, involutory, orthogonal, nonsingular };

const char* property_name(Property p) noexcept;
Property parse_property(const std::string& name);

/// Row and column index sets of a falsifying submatrix.
struct Witness {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    /// Empty for MDS witnesses; for NMDS either "rank_deficient" or "matrix_is_mds".
    std::string reason;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct PredicateReport {
    Property property;
    bool holds = false;
    std::optional<Witness> witness;
};

/// Largest order handled by the bitmask minor table; larger matrices fall
/// back to per-submatrix elimination.
inline constexpr std::size_t kMinorTableMaxOrder = 8;

/// Every square submatrix nonsingular. Sizes are scanned in ascending order and
/// index sets lexicographically, so the witness is the smallest singular one.
PredicateReport is_mds(const Matrix& m);

/// Non-MDS and every g x (g+1) and (g+1) x g submatrix has rank g, 1 <= g < n.
/// Requires order >= 2.
PredicateReport is_nmds(const Matrix& m);

/// Same decisions as is_mds / is_nmds, computed submatrix by submatrix with
/// Gaussian elimination (det for squares, rank for rectangles).
PredicateReport is_mds_by_elimination(const Matrix& m);
PredicateReport is_nmds_by_rank(const Matrix& m);

bool is_involutory(const Matrix& m);
bool is_orthogonal(const Matrix& m);

/// Uniform entry point used by the CLI.
PredicateReport check(const Matrix& m, Property p);

/// Allocation-light variants over a row-major n x n buffer for enumeration
/// loops (n <= kMinorTableMaxOrder).
bool is_mds_square(const Field& f, std::size_t n, std::span<const Elem> data);
bool is_nmds_square(const Field& f, std::size_t n, std::span<const Elem> data);

/// Had(a, b, c, d) is MDS iff none of its 14 minor factors vanishes.
bool fast_hadamard4_mds(const Field& f, Elem a, Elem b, Elem c, Elem d) noexcept;

/// The equivalent element-wise conditions: all nonzero, pairwise distinct,
/// d outside {a^-1 bc, a b^-1 c, a b c^-1, a + b + c}.
bool hadamard4_mds_conditions(const Field& f, Elem a, Elem b, Elem c, Elem d) noexcept;

/// Circ(a, b, c, d) is MDS iff none of its 17 minor factors vanishes.
bool fast_circulant4_mds(const Field& f, Elem a, Elem b, Elem c, Elem d) noexcept;

/// Pairwise distinct entries; necessary for a Hadamard MDS first row.
bool hadamard_mds_distinctness(std::span<const Elem> first_row);

} // namespace mdsc
