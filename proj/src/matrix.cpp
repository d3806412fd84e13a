// SPDX-License-Identifier: Apache-2.0
#include "mdsc/matrix.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace mdsc {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
    if (!a.field().same_as(b.field()))
        throw Error(Errc::field_mismatch, "matrices are defined over different fields");
}

void require_square(const Matrix& m, const char* op) {
    if (!m.is_square())
        throw Error(Errc::non_square, std::string(op) + " needs a square matrix");
}

void require_entries(const Field& f, std::span<const Elem> xs) {
    for (auto x : xs) {
        if (!f.contains(x))
            throw Error(Errc::invalid_argument, "entry " + to_hex(x) + " is not an element of GF(2^" +
                                                    std::to_string(f.degree()) + ")");
    }
}

// Forward elimination in place on a rows x cols buffer. Returns the rank and
// accumulates the product of pivots into *pivot_product when given.
std::size_t eliminate(const Field& f, std::vector<Elem>& a, std::size_t rows, std::size_t cols, Elem* pivot_product) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p * cols + c] == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != rank) {
            for (std::size_t k = 0; k < cols; ++k)
                std::swap(a[p * cols + k], a[rank * cols + k]);
        }
        const Elem piv = a[rank * cols + c];
        if (pivot_product)
            *pivot_product = f.mul(*pivot_product, piv);
        const Elem piv_inv = f.inv(piv);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const Elem factor = f.mul(a[i * cols + c], piv_inv);
            if (factor == 0)
                continue;
            for (std::size_t k = c; k < cols; ++k)
                a[i * cols + k] ^= f.mul(factor, a[rank * cols + k]);
        }
        ++rank;
    }
    return rank;
}

void check_index_set(std::span<const std::size_t> idx, std::size_t bound, const char* what) {
    if (idx.empty())
        throw Error(Errc::invalid_argument, std::string(what) + " index set is empty");
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= bound)
            throw Error(Errc::index_out_of_range, std::string(what) + " index " + std::to_string(idx[k]) +
                                                      " out of range");
        if (k > 0 && idx[k] == idx[k - 1])
            throw Error(Errc::duplicate_index, std::string(what) + " index " + std::to_string(idx[k]) + " repeated");
        if (k > 0 && idx[k] < idx[k - 1]) {
            // An unsorted set may still repeat an earlier index.
            if (std::find(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx[k]) !=
                idx.begin() + static_cast<std::ptrdiff_t>(k))
                throw Error(Errc::duplicate_index, std::string(what) + " index " + std::to_string(idx[k]) +
                                                       " repeated");
            throw Error(Errc::invalid_argument, std::string(what) + " indices must be strictly increasing");
        }
    }
}

} // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (rows_ == 0 || cols_ == 0)
        throw Error(Errc::dimension_mismatch, "matrix dimensions must be positive");
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows_ == 0 || cols_ == 0)
        throw Error(Errc::dimension_mismatch, "matrix dimensions must be positive");
    if (data_.size() != rows_ * cols_)
        throw Error(Errc::dimension_mismatch, "data length does not match dimensions");
    require_entries(*field_, data_);
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw Error(Errc::dimension_mismatch, "matrix needs at least one row and one column");
    const std::size_t cols = rows.front().size();
    std::vector<Elem> data;
    data.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols)
            throw Error(Errc::dimension_mismatch, "ragged rows");
        data.insert(data.end(), r.begin(), r.end());
    }
    return Matrix(std::move(field), rows.size(), cols, std::move(data));
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::scaled(Elem s) const {
    Matrix out = *this;
    for (auto& x : out.data_)
        x = field_->mul(x, s);
    return out;
}

bool Matrix::is_identity() const noexcept {
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1u : 0u))
                return false;
    return true;
}

bool Matrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_->same_as(*b.field_) && a.data_ == b.data_;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.cols() != b.rows())
        throw Error(Errc::dimension_mismatch, "inner dimensions differ");
    const Field& f = a.field();
    Matrix out(a.field_ptr(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Elem x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) ^= f.mul(x, b(k, j));
        }
    }
    return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(Errc::dimension_mismatch, "shapes differ");
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) ^= b(i, j);
    return out;
}

Elem det(const Matrix& m) {
    require_square(m, "det");
    std::vector<Elem> a(m.data().begin(), m.data().end());
    Elem product = 1;
    if (eliminate(m.field(), a, m.rows(), m.cols(), &product) < m.rows())
        return 0;
    return product;
}

std::size_t rank(const Matrix& m) {
    std::vector<Elem> a(m.data().begin(), m.data().end());
    return eliminate(m.field(), a, m.rows(), m.cols(), nullptr);
}

Matrix inverse(const Matrix& m) {
    require_square(m, "inverse");
    const Field& f = m.field();
    const std::size_t n = m.rows();
    const std::size_t w = 2 * n;
    std::vector<Elem> a(n * w, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i * w + j] = m(i, j);
        a[i * w + n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p * w + c] == 0)
            ++p;
        if (p == n)
            throw Error(Errc::singular_matrix, "matrix is singular");
        if (p != c)
            for (std::size_t k = 0; k < w; ++k)
                std::swap(a[p * w + k], a[c * w + k]);
        const Elem piv_inv = f.inv(a[c * w + c]);
        for (std::size_t k = 0; k < w; ++k)
            a[c * w + k] = f.mul(a[c * w + k], piv_inv);
        for (std::size_t i = 0; i < n; ++i) {
            const Elem factor = a[i * w + c];
            if (i == c || factor == 0)
                continue;
            for (std::size_t k = 0; k < w; ++k)
                a[i * w + k] ^= f.mul(factor, a[c * w + k]);
        }
    }
    Matrix out(m.field_ptr(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = a[i * w + n + j];
    return out;
}

Matrix submatrix(const Matrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
    check_index_set(rows, m.rows(), "row");
    check_index_set(cols, m.cols(), "column");
    Matrix out(m.field_ptr(), rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(i, j) = m(rows[i], cols[j]);
    return out;
}

Matrix minor_matrix(const Matrix& m, std::size_t i, std::size_t j) {
    if (m.rows() < 2 || m.cols() < 2)
        throw Error(Errc::dimension_mismatch, "minor of a matrix with a single row or column");
    Matrix out(m.field_ptr(), m.rows() - 1, m.cols() - 1);
    for (std::size_t a = 0, oa = 0; a < m.rows(); ++a) {
        if (a == i)
            continue;
        for (std::size_t b = 0, ob = 0; b < m.cols(); ++b) {
            if (b == j)
                continue;
            out(oa, ob++) = m(a, b);
        }
        ++oa;
    }
    return out;
}

Matrix block(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
    require_same_field(a, b);
    require_same_field(a, c);
    require_same_field(a, d);
    if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols())
        throw Error(Errc::dimension_mismatch, "blocks do not tile");
    Matrix out(a.field_ptr(), a.rows() + c.rows(), a.cols() + b.cols());
    auto put = [&out](const Matrix& src, std::size_t r0, std::size_t c0) {
        for (std::size_t i = 0; i < src.rows(); ++i)
            for (std::size_t j = 0; j < src.cols(); ++j)
                out(r0 + i, c0 + j) = src(i, j);
    };
    put(a, 0, 0);
    put(b, 0, a.cols());
    put(c, a.rows(), 0);
    put(d, a.rows(), a.cols());
    return out;
}

Matrix circulant(FieldPtr field, std::span<const Elem> first_row) {
    if (first_row.empty())
        throw Error(Errc::empty_row, "circulant needs a nonempty first row");
    require_entries(*field, first_row);
    const std::size_t n = first_row.size();
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = first_row[(j + n - i) % n];
    return m;
}

Matrix hadamard(FieldPtr field, std::span<const Elem> first_row) {
    if (first_row.empty())
        throw Error(Errc::empty_row, "Hadamard first row is empty");
    if (!std::has_single_bit(first_row.size()))
        throw Error(Errc::not_power_of_two, "Hadamard first row length " + std::to_string(first_row.size()) +
                                                " is not a power of two");
    require_entries(*field, first_row);
    const std::size_t n = first_row.size();
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = first_row[i ^ j];
    return m;
}

Matrix diagonal(FieldPtr field, std::span<const Elem> entries) {
    if (entries.empty())
        throw Error(Errc::empty_row, "diagonal needs at least one entry");
    require_entries(*field, entries);
    Matrix m(std::move(field), entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, i) = entries[i];
    return m;
}

Matrix permutation(FieldPtr field, std::span<const std::size_t> perm) {
    const std::size_t n = perm.size();
    if (n == 0)
        throw Error(Errc::empty_row, "empty permutation");
    std::vector<bool> seen(n, false);
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (perm[i] >= n || seen[perm[i]])
            throw Error(Errc::invalid_argument, "not a permutation");
        seen[perm[i]] = true;
        m(i, perm[i]) = 1;
    }
    return m;
}

Matrix type1(FieldPtr field, Elem a, std::span<const Elem> inner_row, Type1Domain domain) {
    if (inner_row.empty() || inner_row.front() != 1)
        throw Error(Errc::type1_inner_row, "Type-I inner circulant row must start with 1");
    require_entries(*field, inner_row);
    if (!field->contains(a))
        throw Error(Errc::invalid_argument, "corner entry is not a field element");
    if (domain == Type1Domain::strict) {
        if (a <= 1)
            throw Error(Errc::parameter_domain, "Type-I corner must be outside {0, 1}");
        for (std::size_t k = 1; k < inner_row.size(); ++k)
            if (inner_row[k] <= 1)
                throw Error(Errc::parameter_domain, "Type-I inner entries after the leading 1 must be outside {0, 1}");
    }
    const std::size_t n = inner_row.size() + 1;
    const Matrix inner = circulant(field, inner_row);
    Matrix m(std::move(field), n, n);
    m(0, 0) = a;
    for (std::size_t k = 1; k < n; ++k) {
        m(0, k) = 1;
        m(k, 0) = 1;
    }
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            m(i, j) = inner(i - 1, j - 1);
    return m;
}

Matrix type2(FieldPtr field, std::span<const Elem> inner_row) {
    const Matrix a = circulant(std::move(field), inner_row);
    if (det(a) == 0)
        throw Error(Errc::singular_generator, "Type-II generating circulant is singular");
    const Matrix a_inv = inverse(a);
    const Matrix a3_plus_a = add(matmul(a, matmul(a, a)), a);
    return block(a, a_inv, a3_plus_a, a);
}

const char* structure_kind_name(StructureKind kind) noexcept {
    switch (kind) {
    case StructureKind::hadamard: return "hadamard";
    case StructureKind::circulant: return "circulant";
    case StructureKind::type1: return "type1";
    case StructureKind::type2: return "type2";
    case StructureKind::diagonal: return "diagonal";
    case StructureKind::generic: return "generic";
    }
    return "generic";
}

StructureKind parse_structure_kind(const std::string& name) {
    for (auto k : {StructureKind::hadamard, StructureKind::circulant, StructureKind::type1, StructureKind::type2,
                   StructureKind::diagonal, StructureKind::generic}) {
        if (name == structure_kind_name(k))
            return k;
    }
    throw Error(Errc::parse_error, "unknown matrix kind '" + name + "'");
}

Matrix build(FieldPtr field, const StructuredSpec& spec) {
    switch (spec.kind) {
    case StructureKind::hadamard: return hadamard(std::move(field), spec.row);
    case StructureKind::circulant: return circulant(std::move(field), spec.row);
    case StructureKind::type1: return type1(std::move(field), spec.a, spec.row, spec.domain);
    case StructureKind::type2: return type2(std::move(field), spec.row);
    case StructureKind::diagonal: return diagonal(std::move(field), spec.row);
    case StructureKind::generic: break;
    }
    throw Error(Errc::invalid_argument, "generic matrices need explicit rows");
}

std::string to_string(const Matrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << '[';
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << to_hex(m(i, j));
        os << "]\n";
    }
    return os.str();
}

} // namespace mdsc
