// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mdsc/census.hpp"
#include "mdsc/matrix.hpp"

namespace mdsc {

// ---------------------------------------------------------------------------
// Involutory MDS block decomposition

/// M = D H D^-1 with H = [[A1, I + A1], [I + A1, A1]] and
/// D = diag(I, A3 (I + A1)^-1), for an involutory MDS M = [[A1, A2], [A3, A4]].
struct InvolutoryDecomposition {
    Matrix a1_block;
    Matrix a3_block;
    Matrix hadamard_core;
    Matrix diag_block;

    /// D H D^-1.
    Matrix reconstruct() const;
};

/// Throws Errc::odd_order, Errc::not_involutory, or Errc::singular_block
/// (A3 or I + A1 singular, which means M was not MDS).
InvolutoryDecomposition decompose_involutory_mds(const Matrix& m);

// ---------------------------------------------------------------------------
// Adjugate identity for Hadamard matrices

/// Transpose of the cofactor matrix. Signs vanish in characteristic 2, so
/// entry (i, j) is the minor with row j and column i removed.
Matrix adjugate(const Matrix& m);

/// adj(M) == c^(n-2) M with c the first-row sum. Throws Errc::not_hadamard
/// unless M is Hadamard-structured of order 2, 4 or 8.
bool hadamard_adjugate_check(const Matrix& m);

// ---------------------------------------------------------------------------
// Verification reports

enum class ScanMode { exhaustive, sampled };

struct ScanScope {
    ScanMode mode = ScanMode::exhaustive;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;

    static ScanScope exhaustive() { return {}; }
    static ScanScope sampled(std::uint64_t k, std::uint64_t seed) { return {ScanMode::sampled, k, seed}; }
};

const char* scan_mode_name(ScanMode m) noexcept;

struct VerificationReport {
    std::string claim;
    unsigned r = 0;
    std::uint32_t poly = 0;
    ScanScope scope;
    /// Human-readable description of what was scanned.
    std::string scope_note;
    std::uint64_t scanned = 0;
    /// Parameters (first rows, tuples) of every object contradicting the claim.
    std::vector<std::vector<Elem>> counterexamples;
    /// Extra named integers, in insertion order.
    std::vector<std::pair<std::string, std::int64_t>> stats;
    std::vector<std::string> notes;

    bool passed() const noexcept { return counterexamples.empty(); }
    std::int64_t stat(const std::string& key) const;
};

/// Zero-sum (singular) Hadamard first rows of the given order are never NMDS.
/// Exhaustive mode is limited to order 4 with r <= 5.
VerificationReport verify_singular_hadamard_not_nmds(const FieldPtr& field, std::size_t order, ScanScope scope);

/// TypeII(Circ(row)) of block order n. For even n, every nonsingular
/// generator yields a matrix that is neither NMDS nor MDS. For odd n the scan
/// is a control: NMDS hits are counted in the "nmds_found" stat and are not
/// counterexamples. Exhaustive mode needs q^n <= 2^16.
VerificationReport verify_type2_even_not_nmds(const FieldPtr& field, std::size_t n, ScanScope scope);

/// Every 4x4 TypeI(a, Circ(1, a1, a2)) (a, a1, a2 ranging over the whole
/// field) that is orthogonal and NMDS, in scan order. The scan is q^3, so
/// r <= 12 unless allow_long.
std::vector<Matrix> find_orthogonal_type1_nmds4(const FieldPtr& field, const CensusOptions& opts = {});

/// The two 0/1 matrices TypeI(0, Circ(1, 0, 1)) and TypeI(0, Circ(1, 1, 0)).
std::array<Matrix, 2> expected_orthogonal_type1_nmds4(const FieldPtr& field);

VerificationReport verify_orthogonal_type1_exactly_two(const FieldPtr& field, const CensusOptions& opts = {});

/// adj(Had) == c^(n-2) Had over Hadamard matrices of the given order.
/// Exhaustive mode needs q^order <= 2^16.
VerificationReport verify_adjugate_identity(const FieldPtr& field, std::size_t order, ScanScope scope);

/// Decompose and reconstruct every 4x4 involutory MDS matrix.
VerificationReport verify_decomposition_roundtrip(const FieldPtr& field, const CensusOptions& opts = {});

/// Brute-force 2x2 counts against both printed forms of the closed formula.
VerificationReport verify_two_by_two_formula(const FieldPtr& field, const CensusOptions& opts = {});

// ---------------------------------------------------------------------------
// Exclusion-set audit behind the Hadamard 4x4 count

enum class TBranch { generic, special_c, omega_b, omega_b_special_c };

const char* t_branch_name(TBranch b) noexcept;

/// For fixed (a, b, c): d must avoid
/// T = {0, a, b, c, a^-1 bc, a b^-1 c, a b c^-1, a + b + c}.
struct ExclusionSetReport {
    Elem a = 0, b = 0, c = 0;
    std::vector<Elem> t_set;          // deduplicated, ascending
    std::vector<Elem> special_c_set;  // {a^2 b^-1, b^2 a^-1, a + b, sqrt(ab)}, deduplicated
    unsigned t_cardinality = 0;
    TBranch branch = TBranch::generic;
};

struct TSetAudit {
    Elem a = 0, b = 0;
    /// b = a x for a cube root of unity x != 1.
    bool omega_b = false;
    std::vector<ExclusionSetReport> entries;  // one per admissible c
    std::uint64_t admissible_d = 0;           // sum over c of q - |T|
    std::uint64_t expected_admissible_d = 0;  // case-analysis prediction for this (a, b)
    std::vector<std::string> violations;

    bool passed() const noexcept { return violations.empty() && admissible_d == expected_admissible_d; }
};

/// Audits every admissible c for one (a, b). Throws Errc::degenerate_input
/// when a = b or ab = 0.
TSetAudit t_set_audit(const Field& field, Elem a, Elem b);

struct TSetSummary {
    unsigned r = 0;
    std::uint32_t poly = 0;
    std::uint64_t pairs = 0;
    std::uint64_t total_admissible_d = 0;
    std::uint64_t theorem_total = 0;
    /// Indexed by TBranch.
    std::array<std::uint64_t, 4> branch_counts{};
    /// Occurrences of |T| = 0..8.
    std::array<std::uint64_t, 9> cardinality_counts{};
    /// Number of (a, b, c) violating a case-analysis claim, plus the first few messages.
    std::uint64_t violation_count = 0;
    std::vector<std::string> sample_violations;

    bool passed() const noexcept { return violation_count == 0 && total_admissible_d == theorem_total; }
};

/// All (a, b) pairs; r <= 8 unless allow_long (r <= 10).
TSetSummary audit_all_t_sets(const FieldPtr& field, const CensusOptions& opts = {});

VerificationReport verify_t_set_audit(const FieldPtr& field, const CensusOptions& opts = {});

// ---------------------------------------------------------------------------
// Claim registry used by the CLI

enum class ClaimId {
    singular_hadamard_not_nmds,
    type2_even_not_nmds,
    orthogonal_type1_exactly_two,
    adjugate_identity,
    decomposition_roundtrip,
    t_set_audit,
    two_by_two_formula_arbitration,
};

const char* claim_name(ClaimId id) noexcept;
ClaimId parse_claim(const std::string& name);
const std::vector<ClaimId>& all_claims();

struct VerifyOptions {
    CensusOptions census;
    std::uint64_t seed = 1;
    /// Samples for sampled scopes.
    std::uint64_t samples = 10000;
};

/// Runs the claim at its pinned default scope for this field; every report
/// states its own scope.
std::vector<VerificationReport> run_claim(ClaimId id, const FieldPtr& field, const VerifyOptions& opts = {});

} // namespace mdsc
