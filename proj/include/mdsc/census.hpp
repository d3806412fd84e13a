// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mdsc/field.hpp"
#include "mdsc/matrix.hpp"

namespace mdsc {

enum class ClassId {
    hadamard4_mds,
    hadamard4_inv_mds,
    hadamard4_noninv_mds,
    circulant4_mds,
    mds_2x2,
    inv_mds_2x2,
    inv_mds_4x4,
    hadamard4_nmds_1zero,
    hadamard4_inv_nmds_1zero,
    circulant4_nmds_1zero,
    circulant4_nmds_1zero_singular,
};

enum class Method { brute, formula };

const char* class_id_name(ClassId id) noexcept;
ClassId parse_class_id(const std::string& name);
const std::vector<ClassId>& all_class_ids();
const char* method_name(Method m) noexcept;
Method parse_method(const std::string& name);

/// Whether a closed-form count exists for the class.
bool has_formula(ClassId id) noexcept;

struct CensusOptions {
    /// 0 = hardware concurrency.
    unsigned jobs = 0;
    /// Ranges of the outermost variable; 0 = one per field element.
    unsigned partitions = 0;
    /// Lifts the brute-force budget from r = 6 to r = 8 (and admits the
    /// r = 4 involutory 4x4 run).
    bool allow_long = false;
};

struct CensusResult {
    ClassId class_id = ClassId::hadamard4_mds;
    unsigned r = 0;
    std::uint32_t poly = 0;
    Method method = Method::brute;
    std::uint64_t count = 0;
    double elapsed_ms = 0.0;
    unsigned partitions = 1;
    /// Structured candidates generated (involutory 4x4 only).
    std::optional<std::uint64_t> candidates;
};

/// Largest r for which the quartic brute-force loops run under `opts`.
unsigned brute_force_limit(const CensusOptions& opts) noexcept;

// Closed forms in q = 2^r. Values that would be negative are clamped to 0
// (they only occur for r = 2, where the brute-force count is 0 as well).
std::uint64_t formula_hadamard4_mds(unsigned r);
std::uint64_t formula_hadamard4_inv_mds(unsigned r);
std::uint64_t formula_hadamard4_noninv_mds(unsigned r);
/// (q-1)^3 (q-2): the form consistent with the 2x2 counting argument.
std::uint64_t formula_mds_2x2(unsigned r);
/// (q-1)^3 (q-3): the misprinted variant, exposed only for arbitration reports.
std::uint64_t formula_mds_2x2_as_stated(unsigned r);
std::uint64_t formula_inv_mds_2x2(unsigned r);
std::uint64_t formula_hadamard4_nmds_1zero(unsigned r);
std::uint64_t formula_hadamard4_inv_nmds_1zero(unsigned r);
std::uint64_t formula_circulant4_nmds_1zero(unsigned r);

using BigInt = boost::multiprecision::cpp_int;

/// q (q-1)^3 (q-2)^2 (q-3)(q-4), exact for any r >= 2.
BigInt upper_bound_involutory4(unsigned r);

CensusResult census_hadamard4_mds(const FieldPtr& field, Method method, const CensusOptions& opts = {});

struct InvolutorySplit {
    CensusResult involutory;
    CensusResult non_involutory;
};

/// Row sum 1 (involutory) versus any other row sum.
InvolutorySplit census_hadamard4_involutory_mds(const FieldPtr& field, Method method,
                                                const CensusOptions& opts = {});

/// Brute force only; no closed form is known.
CensusResult census_circulant4_mds(const FieldPtr& field, const CensusOptions& opts = {});

CensusResult census_2x2(const FieldPtr& field, bool involutory_only, Method method, const CensusOptions& opts = {});

/// All 4x4 involutory MDS matrices, generated as
/// [[A1, (I + A1^2) A3^-1], [A3, A3 A1 A3^-1]] with A1 a non-involutory 2x2
/// MDS block and A3 a 2x2 MDS block whose rows are independent of A1's rows,
/// then filtered by is_mds and is_involutory.
CensusResult census_involutory4_mds(const FieldPtr& field, const CensusOptions& opts = {});

/// Serial walk over the same enumeration; `visit` sees each accepted matrix.
/// Returns the number of candidates generated.
std::uint64_t for_each_involutory4_mds(const FieldPtr& field, const CensusOptions& opts,
                                       const std::function<void(const Matrix&)>& visit);

CensusResult census_hadamard4_nmds_1zero(const FieldPtr& field, bool involutory_only, Method method,
                                         const CensusOptions& opts = {});

/// singular_only has no closed form.
CensusResult census_circulant4_nmds_1zero(const FieldPtr& field, bool singular_only, Method method,
                                          const CensusOptions& opts = {});

/// Dispatch by class id.
CensusResult run_census(ClassId id, const FieldPtr& field, Method method, const CensusOptions& opts = {});

// Reconstructed count tables.

enum class TableFormat { text, markdown, csv, json };

const char* table_format_name(TableFormat f) noexcept;
TableFormat parse_table_format(const std::string& name);

struct TableRow {
    unsigned r = 0;
    std::uint32_t poly = 0;
    std::uint64_t hadamard_mds = 0;
    std::uint64_t involutory_hadamard_mds = 0;
    std::uint64_t non_involutory_hadamard_mds = 0;
    /// nullopt when the brute-force cell was skipped for budget reasons.
    std::optional<std::uint64_t> circulant_mds;
};

struct PaperTables {
    std::vector<TableRow> rows;
    bool any_skipped() const noexcept;
};

/// Hadamard columns from the closed forms, circulant column by brute force
/// (skipped beyond the budget). Requires 3 <= r_min <= r_max <= 8.
PaperTables build_paper_tables(unsigned r_min, unsigned r_max, const CensusOptions& opts = {});

/// table_id 1: Hadamard / involutory / non-involutory; 2: Hadamard /
/// involutory / circulant; 0: every column.
std::string render_paper_tables(const PaperTables& tables, int table_id, TableFormat format);

} // namespace mdsc
