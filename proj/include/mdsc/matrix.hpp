// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mdsc/field.hpp"

namespace mdsc {

/// Dense row-major matrix over one binary field.
class Matrix {
public:
    /// Zero matrix.
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> data);

    static Matrix identity(FieldPtr field, std::size_t n);
    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }

    Elem operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    Elem& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }

    std::span<const Elem> data() const noexcept { return data_; }
    std::span<const Elem> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }

    Matrix transpose() const;
    Matrix scaled(Elem s) const;
    bool is_identity() const noexcept;
    bool is_zero() const noexcept;

    /// Equal shape, equal field and equal entries.
    friend bool operator==(const Matrix& a, const Matrix& b) noexcept;

private:
    FieldPtr field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return matmul(a, b); }
inline Matrix operator+(const Matrix& a, const Matrix& b) { return add(a, b); }

/// Determinant by Gaussian elimination (first nonzero pivot in each column).
Elem det(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Gauss-Jordan inverse; throws Errc::singular_matrix.
Matrix inverse(const Matrix& m);

/// Rows and columns must be nonempty, strictly increasing and in range.
Matrix submatrix(const Matrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols);

/// Same matrix with row i and column j removed (no index-set validation).
Matrix minor_matrix(const Matrix& m, std::size_t i, std::size_t j);

/// [[a, b], [c, d]] from four equally sized blocks.
Matrix block(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

// Structured constructions.

/// Entry (i, j) = row[(j - i) mod n].
Matrix circulant(FieldPtr field, std::span<const Elem> first_row);
/// Entry (i, j) = row[i xor j]; length must be a power of two.
Matrix hadamard(FieldPtr field, std::span<const Elem> first_row);
Matrix diagonal(FieldPtr field, std::span<const Elem> entries);
/// Row i of the result is row perm[i] of the identity.
Matrix permutation(FieldPtr field, std::span<const std::size_t> perm);

enum class Type1Domain {
    /// a and the free inner entries must avoid {0, 1}.
    strict,
    /// any field values.
    relaxed,
};

/// [[a, 1...1], [1...1^T, Circ(inner_row)]] where inner_row starts with 1.
Matrix type1(FieldPtr field, Elem a, std::span<const Elem> inner_row, Type1Domain domain = Type1Domain::strict);

/// [[A, A^-1], [A^3 + A, A]] with A = Circ(inner_row); throws Errc::singular_generator.
Matrix type2(FieldPtr field, std::span<const Elem> inner_row);

enum class StructureKind { hadamard, circulant, type1, type2, diagonal, generic };

const char* structure_kind_name(StructureKind kind) noexcept;
StructureKind parse_structure_kind(const std::string& name);

struct StructuredSpec {
    StructureKind kind = StructureKind::generic;
    Elem a = 0;             // type1 corner
    std::vector<Elem> row;  // first row / inner row / diagonal
    Type1Domain domain = Type1Domain::strict;
};

/// Builds any structured kind except generic.
Matrix build(FieldPtr field, const StructuredSpec& spec);

std::string to_string(const Matrix& m);

} // namespace mdsc
