// SPDX-License-Identifier: Apache-2.0
#include "mdsc/census.hpp"

#include <array>
#include <chrono>
#include <sstream>

#include <json.hpp>

#include "mdsc/parallel.hpp"
#include "mdsc/predicates.hpp"

namespace mdsc {

namespace {

using Clock = std::chrono::steady_clock;
using i128 = __int128;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void require_degree(unsigned r) {
    if (r < kMinDegree || r > kMaxDegree)
        throw Error(Errc::invalid_degree, "extension degree " + std::to_string(r) + " outside [2, 16]");
}

std::uint64_t clamp_count(i128 v) {
    if (v < 0)
        return 0;
    if (v > static_cast<i128>(UINT64_MAX))
        throw Error(Errc::invalid_argument, "count does not fit in 64 bits");
    return static_cast<std::uint64_t>(v);
}

i128 q_of(unsigned r) {
    require_degree(r);
    return i128{1} << r;
}

void require_brute_budget(const Field& f, const CensusOptions& opts, const char* what) {
    const unsigned limit = brute_force_limit(opts);
    if (f.degree() > limit) {
        std::string msg = std::string(what) + " brute force over GF(2^" + std::to_string(f.degree()) +
                          ") exceeds the budget (r <= " + std::to_string(limit) + ")";
        if (!opts.allow_long && f.degree() <= 8)
            msg += "; pass --allow-long to run it";
        throw Error(Errc::budget_exceeded, msg);
    }
}

unsigned effective_partitions(const Field& f, const CensusOptions& opts) {
    const unsigned q = f.size();
    return opts.partitions == 0 ? q : std::min(opts.partitions, q);
}

CensusResult make_result(ClassId id, const Field& f, Method m) {
    CensusResult res;
    res.class_id = id;
    res.r = f.degree();
    res.poly = f.poly();
    res.method = m;
    res.partitions = 1;
    return res;
}

struct SplitCount {
    std::uint64_t involutory = 0;
    std::uint64_t other = 0;

    friend SplitCount operator+(SplitCount a, SplitCount b) {
        return {a.involutory + b.involutory, a.other + b.other};
    }
};

// Both matrix classes below keep only the rows whose first entries already
// pass the linear factors of the respective fast test; the innermost call
// still evaluates the complete test.

SplitCount hadamard4_range(const Field& f, Elem a_begin, Elem a_end) {
    const Elem q = f.size();
    SplitCount n;
    for (Elem a = a_begin; a < a_end; ++a) {
        if (a == 0)
            continue;
        for (Elem b = 1; b < q; ++b) {
            if (b == a)
                continue;
            for (Elem c = 1; c < q; ++c) {
                if (c == a || c == b)
                    continue;
                for (Elem d = 0; d < q; ++d) {
                    if (!fast_hadamard4_mds(f, a, b, c, d))
                        continue;
                    if ((a ^ b ^ c ^ d) == 1)
                        ++n.involutory;
                    else
                        ++n.other;
                }
            }
        }
    }
    return n;
}

std::uint64_t circulant4_range(const Field& f, Elem a_begin, Elem a_end) {
    const Elem q = f.size();
    std::uint64_t n = 0;
    for (Elem a = a_begin; a < a_end; ++a) {
        if (a == 0)
            continue;
        for (Elem b = 1; b < q; ++b) {
            const Elem b2 = f.mul(b, b);
            for (Elem c = 1; c < q; ++c) {
                if (c == a || b2 == f.mul(a, c))
                    continue;
                for (Elem d = 0; d < q; ++d)
                    n += fast_circulant4_mds(f, a, b, c, d) ? 1 : 0;
            }
        }
    }
    return n;
}

bool is_2x2_involutory(const Field& f, Elem a, Elem b, Elem c, Elem d) noexcept {
    const Elem bc = f.mul(b, c);
    return (f.mul(a, a) ^ bc) == 1 && (f.mul(d, d) ^ bc) == 1 && f.mul(b, a ^ d) == 0 && f.mul(c, a ^ d) == 0;
}

// Rows (x0, y0) and (x1, y1) are linearly independent.
bool independent(const Field& f, Elem x0, Elem y0, Elem x1, Elem y1) noexcept {
    return f.mul(x0, y1) != f.mul(y0, x1);
}

bool is_involutory4(const Field& f, const std::array<Elem, 16>& m) noexcept {
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            Elem acc = 0;
            for (int k = 0; k < 4; ++k)
                acc ^= f.mul(m[i * 4 + k], m[k * 4 + j]);
            if (acc != (i == j ? 1u : 0u))
                return false;
        }
    }
    return true;
}

// Walks A1 = [[a, b], [c, d]] with a in [a_begin, a_end). Calls
// accept(matrix) for every assembled candidate passing both filters and
// returns the number of candidates generated.
template <class Accept>
std::uint64_t involutory4_range(const Field& f, Elem a_begin, Elem a_end, Accept&& accept) {
    const Elem q = f.size();
    std::uint64_t candidates = 0;
    std::array<Elem, 16> m{};
    for (Elem a = std::max<Elem>(a_begin, 1); a < a_end; ++a) {
        for (Elem b = 1; b < q; ++b) {
            for (Elem c = 1; c < q; ++c) {
                for (Elem d = 1; d < q; ++d) {
                    if (!independent(f, a, b, c, d) || is_2x2_involutory(f, a, b, c, d))
                        continue;
                    // S = I + A1^2
                    const Elem bc = f.mul(b, c);
                    const Elem s00 = f.mul(a, a) ^ bc ^ 1, s01 = f.mul(b, a ^ d);
                    const Elem s10 = f.mul(c, a ^ d), s11 = f.mul(d, d) ^ bc ^ 1;
                    for (Elem x0 = 1; x0 < q; ++x0) {
                        for (Elem y0 = 1; y0 < q; ++y0) {
                            if (!independent(f, a, b, x0, y0) || !independent(f, c, d, x0, y0))
                                continue;
                            for (Elem x1 = 1; x1 < q; ++x1) {
                                for (Elem y1 = 1; y1 < q; ++y1) {
                                    if (!independent(f, a, b, x1, y1) || !independent(f, c, d, x1, y1) ||
                                        !independent(f, x0, y0, x1, y1))
                                        continue;
                                    ++candidates;
                                    // A3^-1 = det^-1 [[y1, y0], [x1, x0]] in characteristic 2.
                                    const Elem di = f.inv(f.mul(x0, y1) ^ f.mul(y0, x1));
                                    const Elem i00 = f.mul(di, y1), i01 = f.mul(di, y0);
                                    const Elem i10 = f.mul(di, x1), i11 = f.mul(di, x0);
                                    // A2 = S A3^-1
                                    const Elem p00 = f.mul(s00, i00) ^ f.mul(s01, i10);
                                    const Elem p01 = f.mul(s00, i01) ^ f.mul(s01, i11);
                                    const Elem p10 = f.mul(s10, i00) ^ f.mul(s11, i10);
                                    const Elem p11 = f.mul(s10, i01) ^ f.mul(s11, i11);
                                    // A4 = (A3 A1) A3^-1
                                    const Elem t00 = f.mul(x0, a) ^ f.mul(y0, c), t01 = f.mul(x0, b) ^ f.mul(y0, d);
                                    const Elem t10 = f.mul(x1, a) ^ f.mul(y1, c), t11 = f.mul(x1, b) ^ f.mul(y1, d);
                                    const Elem u00 = f.mul(t00, i00) ^ f.mul(t01, i10);
                                    const Elem u01 = f.mul(t00, i01) ^ f.mul(t01, i11);
                                    const Elem u10 = f.mul(t10, i00) ^ f.mul(t11, i10);
                                    const Elem u11 = f.mul(t10, i01) ^ f.mul(t11, i11);
                                    m = {a, b, p00, p01, c, d, p10, p11, x0, y0, u00, u01, x1, y1, u10, u11};
                                    if (is_mds_square(f, 4, m) && is_involutory4(f, m))
                                        accept(m);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return candidates;
}

void require_involutory4_budget(const Field& f, const CensusOptions& opts) {
    const unsigned r = f.degree();
    if (r <= 3)
        return;
    if (r == 4 && opts.allow_long)
        return;
    std::string msg = "involutory 4x4 enumeration over GF(2^" + std::to_string(r) + ") exceeds the budget";
    if (r == 4)
        msg += "; pass --allow-long to run it";
    throw Error(Errc::budget_exceeded, msg);
}

std::array<Elem, 16> hadamard4_data(Elem a, Elem b, Elem c, Elem d) {
    return {a, b, c, d, b, a, d, c, c, d, a, b, d, c, b, a};
}

std::array<Elem, 16> circulant4_data(Elem a, Elem b, Elem c, Elem d) {
    return {a, b, c, d, d, a, b, c, c, d, a, b, b, c, d, a};
}

int zero_count(Elem a, Elem b, Elem c, Elem d) {
    return (a == 0) + (b == 0) + (c == 0) + (d == 0);
}

void unsupported(ClassId id) {
    throw Error(Errc::unsupported_method, std::string("no closed-form count for class ") + class_id_name(id));
}

} // namespace

const char* class_id_name(ClassId id) noexcept {
    switch (id) {
    case ClassId::hadamard4_mds: return "hadamard4_mds";
    case ClassId::hadamard4_inv_mds: return "hadamard4_inv_mds";
    case ClassId::hadamard4_noninv_mds: return "hadamard4_noninv_mds";
    case ClassId::circulant4_mds: return "circulant4_mds";
    case ClassId::mds_2x2: return "mds_2x2";
    case ClassId::inv_mds_2x2: return "inv_mds_2x2";
    case ClassId::inv_mds_4x4: return "inv_mds_4x4";
    case ClassId::hadamard4_nmds_1zero: return "hadamard4_nmds_1zero";
    case ClassId::hadamard4_inv_nmds_1zero: return "hadamard4_inv_nmds_1zero";
    case ClassId::circulant4_nmds_1zero: return "circulant4_nmds_1zero";
    case ClassId::circulant4_nmds_1zero_singular: return "circulant4_nmds_1zero_singular";
    }
    return "unknown";
}

const std::vector<ClassId>& all_class_ids() {
    static const std::vector<ClassId> ids = {
        ClassId::hadamard4_mds,        ClassId::hadamard4_inv_mds,        ClassId::hadamard4_noninv_mds,
        ClassId::circulant4_mds,       ClassId::mds_2x2,                  ClassId::inv_mds_2x2,
        ClassId::inv_mds_4x4,          ClassId::hadamard4_nmds_1zero,     ClassId::hadamard4_inv_nmds_1zero,
        ClassId::circulant4_nmds_1zero, ClassId::circulant4_nmds_1zero_singular,
    };
    return ids;
}

ClassId parse_class_id(const std::string& name) {
    for (auto id : all_class_ids())
        if (name == class_id_name(id))
            return id;
    throw Error(Errc::parse_error, "unknown census class '" + name + "'");
}

const char* method_name(Method m) noexcept { return m == Method::brute ? "brute" : "formula"; }

Method parse_method(const std::string& name) {
    if (name == "brute")
        return Method::brute;
    if (name == "formula")
        return Method::formula;
    throw Error(Errc::parse_error, "unknown method '" + name + "'");
}

bool has_formula(ClassId id) noexcept {
    switch (id) {
    case ClassId::circulant4_mds:
    case ClassId::inv_mds_4x4:
    case ClassId::circulant4_nmds_1zero_singular: return false;
    default: return true;
    }
}

unsigned brute_force_limit(const CensusOptions& opts) noexcept { return opts.allow_long ? 8 : 6; }

std::uint64_t formula_hadamard4_mds(unsigned r) {
    const i128 q = q_of(r);
    return clamp_count((q - 1) * (q - 2) * (q - 4) * (q - 7));
}

std::uint64_t formula_hadamard4_inv_mds(unsigned r) {
    const i128 q = q_of(r);
    return clamp_count((q - 2) * (q - 4) * (q - 7));
}

std::uint64_t formula_hadamard4_noninv_mds(unsigned r) {
    const i128 q = q_of(r);
    return clamp_count((q - 2) * (q - 2) * (q - 4) * (q - 7));
}

std::uint64_t formula_mds_2x2(unsigned r) {
    const i128 q = q_of(r);
    return clamp_count((q - 1) * (q - 1) * (q - 1) * (q - 2));
}

std::uint64_t formula_mds_2x2_as_stated(unsigned r) {
    const i128 q = q_of(r);
    return clamp_count((q - 1) * (q - 1) * (q - 1) * (q - 3));
}

std::uint64_t formula_inv_mds_2x2(unsigned r) {
    const i128 q = q_of(r);
    return clamp_count((q - 1) * (q - 2));
}

std::uint64_t formula_hadamard4_nmds_1zero(unsigned r) {
    const i128 q = q_of(r);
    return clamp_count(4 * (q - 1) * (q * q - 3 * q + 3));
}

std::uint64_t formula_hadamard4_inv_nmds_1zero(unsigned r) {
    const i128 q = q_of(r);
    return clamp_count(4 * (q * q - 3 * q + 3));
}

std::uint64_t formula_circulant4_nmds_1zero(unsigned r) {
    const i128 q = q_of(r);
    return clamp_count(4 * (q - 1) * (q - 1) * (q - 1));
}

BigInt upper_bound_involutory4(unsigned r) {
    if (r < kMinDegree)
        throw Error(Errc::invalid_degree, "upper bound needs r >= 2");
    const BigInt q = BigInt(1) << r;
    return q * (q - 1) * (q - 1) * (q - 1) * (q - 2) * (q - 2) * (q - 3) * (q - 4);
}

CensusResult census_hadamard4_mds(const FieldPtr& field, Method method, const CensusOptions& opts) {
    if (method == Method::formula) {
        auto t0 = Clock::now();
        CensusResult res = make_result(ClassId::hadamard4_mds, *field, method);
        res.count = formula_hadamard4_mds(field->degree());
        res.elapsed_ms = ms_since(t0);
        return res;
    }
    const auto split = census_hadamard4_involutory_mds(field, method, opts);
    CensusResult res = split.involutory;
    res.class_id = ClassId::hadamard4_mds;
    res.count = split.involutory.count + split.non_involutory.count;
    return res;
}

InvolutorySplit census_hadamard4_involutory_mds(const FieldPtr& field, Method method, const CensusOptions& opts) {
    const Field& f = *field;
    auto t0 = Clock::now();
    InvolutorySplit out{make_result(ClassId::hadamard4_inv_mds, f, method),
                        make_result(ClassId::hadamard4_noninv_mds, f, method)};
    if (method == Method::formula) {
        out.involutory.count = formula_hadamard4_inv_mds(f.degree());
        out.non_involutory.count = formula_hadamard4_noninv_mds(f.degree());
    } else {
        require_brute_budget(f, opts, "Hadamard 4x4");
        const unsigned parts = effective_partitions(f, opts);
        const SplitCount n = partitioned_sum<SplitCount>(f.size(), parts, opts.jobs, [&f](std::uint64_t b, std::uint64_t e) {
            return hadamard4_range(f, static_cast<Elem>(b), static_cast<Elem>(e));
        });
        out.involutory.count = n.involutory;
        out.non_involutory.count = n.other;
        out.involutory.partitions = out.non_involutory.partitions = parts;
    }
    out.involutory.elapsed_ms = out.non_involutory.elapsed_ms = ms_since(t0);
    return out;
}

CensusResult census_circulant4_mds(const FieldPtr& field, const CensusOptions& opts) {
    const Field& f = *field;
    auto t0 = Clock::now();
    require_brute_budget(f, opts, "circulant 4x4");
    CensusResult res = make_result(ClassId::circulant4_mds, f, Method::brute);
    res.partitions = effective_partitions(f, opts);
    res.count = partitioned_sum<std::uint64_t>(f.size(), res.partitions, opts.jobs,
                                               [&f](std::uint64_t b, std::uint64_t e) {
                                                   return circulant4_range(f, static_cast<Elem>(b), static_cast<Elem>(e));
                                               });
    res.elapsed_ms = ms_since(t0);
    return res;
}

CensusResult census_2x2(const FieldPtr& field, bool involutory_only, Method method, const CensusOptions& opts) {
    const Field& f = *field;
    auto t0 = Clock::now();
    CensusResult res = make_result(involutory_only ? ClassId::inv_mds_2x2 : ClassId::mds_2x2, f, method);
    if (method == Method::formula) {
        res.count = involutory_only ? formula_inv_mds_2x2(f.degree()) : formula_mds_2x2(f.degree());
    } else {
        require_brute_budget(f, opts, "2x2");
        res.partitions = effective_partitions(f, opts);
        res.count = partitioned_sum<std::uint64_t>(
            f.size(), res.partitions, opts.jobs, [&f, involutory_only](std::uint64_t lo, std::uint64_t hi) {
                const Elem q = f.size();
                std::uint64_t n = 0;
                for (Elem a = static_cast<Elem>(lo); a < hi; ++a)
                    for (Elem b = 0; b < q; ++b)
                        for (Elem c = 0; c < q; ++c)
                            for (Elem d = 0; d < q; ++d) {
                                if (a == 0 || b == 0 || c == 0 || d == 0)
                                    continue;
                                if ((f.mul(a, d) ^ f.mul(b, c)) == 0)
                                    continue;
                                if (involutory_only && !is_2x2_involutory(f, a, b, c, d))
                                    continue;
                                ++n;
                            }
                return n;
            });
    }
    res.elapsed_ms = ms_since(t0);
    return res;
}

CensusResult census_involutory4_mds(const FieldPtr& field, const CensusOptions& opts) {
    const Field& f = *field;
    auto t0 = Clock::now();
    require_involutory4_budget(f, opts);
    struct Tally {
        std::uint64_t accepted = 0;
        std::uint64_t candidates = 0;
        Tally operator+(const Tally& y) const { return {accepted + y.accepted, candidates + y.candidates}; }
    };
    CensusResult res = make_result(ClassId::inv_mds_4x4, f, Method::brute);
    res.partitions = effective_partitions(f, opts);
    const Tally t = partitioned_sum<Tally>(f.size(), res.partitions, opts.jobs, [&f](std::uint64_t b, std::uint64_t e) {
        Tally local;
        local.candidates = involutory4_range(f, static_cast<Elem>(b), static_cast<Elem>(e),
                                             [&local](const std::array<Elem, 16>&) { ++local.accepted; });
        return local;
    });
    res.count = t.accepted;
    res.candidates = t.candidates;
    res.elapsed_ms = ms_since(t0);
    return res;
}

std::uint64_t for_each_involutory4_mds(const FieldPtr& field, const CensusOptions& opts,
                                       const std::function<void(const Matrix&)>& visit) {
    require_involutory4_budget(*field, opts);
    return involutory4_range(*field, 0, field->size(), [&](const std::array<Elem, 16>& m) {
        visit(Matrix(field, 4, 4, std::vector<Elem>(m.begin(), m.end())));
    });
}

CensusResult census_hadamard4_nmds_1zero(const FieldPtr& field, bool involutory_only, Method method,
                                         const CensusOptions& opts) {
    const Field& f = *field;
    auto t0 = Clock::now();
    CensusResult res =
        make_result(involutory_only ? ClassId::hadamard4_inv_nmds_1zero : ClassId::hadamard4_nmds_1zero, f, method);
    if (method == Method::formula) {
        res.count = involutory_only ? formula_hadamard4_inv_nmds_1zero(f.degree())
                                    : formula_hadamard4_nmds_1zero(f.degree());
    } else {
        require_brute_budget(f, opts, "Hadamard 4x4 NMDS");
        res.partitions = effective_partitions(f, opts);
        res.count = partitioned_sum<std::uint64_t>(
            f.size(), res.partitions, opts.jobs, [&f, involutory_only](std::uint64_t lo, std::uint64_t hi) {
                const Elem q = f.size();
                std::uint64_t n = 0;
                for (Elem a = static_cast<Elem>(lo); a < hi; ++a)
                    for (Elem b = 0; b < q; ++b)
                        for (Elem c = 0; c < q; ++c)
                            for (Elem d = 0; d < q; ++d) {
                                if (zero_count(a, b, c, d) != 1)
                                    continue;
                                if (involutory_only && (a ^ b ^ c ^ d) != 1)
                                    continue;
                                if (is_nmds_square(f, 4, hadamard4_data(a, b, c, d)))
                                    ++n;
                            }
                return n;
            });
    }
    res.elapsed_ms = ms_since(t0);
    return res;
}

CensusResult census_circulant4_nmds_1zero(const FieldPtr& field, bool singular_only, Method method,
                                          const CensusOptions& opts) {
    const Field& f = *field;
    auto t0 = Clock::now();
    const ClassId id = singular_only ? ClassId::circulant4_nmds_1zero_singular : ClassId::circulant4_nmds_1zero;
    CensusResult res = make_result(id, f, method);
    if (method == Method::formula) {
        if (singular_only)
            unsupported(id);
        res.count = formula_circulant4_nmds_1zero(f.degree());
    } else {
        require_brute_budget(f, opts, "circulant 4x4 NMDS");
        res.partitions = effective_partitions(f, opts);
        res.count = partitioned_sum<std::uint64_t>(
            f.size(), res.partitions, opts.jobs, [&field, singular_only](std::uint64_t lo, std::uint64_t hi) {
                const Field& f = *field;
                const Elem q = f.size();
                std::uint64_t n = 0;
                for (Elem a = static_cast<Elem>(lo); a < hi; ++a)
                    for (Elem b = 0; b < q; ++b)
                        for (Elem c = 0; c < q; ++c)
                            for (Elem d = 0; d < q; ++d) {
                                if (zero_count(a, b, c, d) != 1)
                                    continue;
                                const auto data = circulant4_data(a, b, c, d);
                                if (!is_nmds_square(f, 4, data))
                                    continue;
                                if (singular_only &&
                                    det(Matrix(field, 4, 4, std::vector<Elem>(data.begin(), data.end()))) != 0)
                                    continue;
                                ++n;
                            }
                return n;
            });
    }
    res.elapsed_ms = ms_since(t0);
    return res;
}

CensusResult run_census(ClassId id, const FieldPtr& field, Method method, const CensusOptions& opts) {
    if (method == Method::formula && !has_formula(id))
        unsupported(id);
    switch (id) {
    case ClassId::hadamard4_mds: return census_hadamard4_mds(field, method, opts);
    case ClassId::hadamard4_inv_mds: return census_hadamard4_involutory_mds(field, method, opts).involutory;
    case ClassId::hadamard4_noninv_mds: return census_hadamard4_involutory_mds(field, method, opts).non_involutory;
    case ClassId::circulant4_mds: return census_circulant4_mds(field, opts);
    case ClassId::mds_2x2: return census_2x2(field, false, method, opts);
    case ClassId::inv_mds_2x2: return census_2x2(field, true, method, opts);
    case ClassId::inv_mds_4x4: return census_involutory4_mds(field, opts);
    case ClassId::hadamard4_nmds_1zero: return census_hadamard4_nmds_1zero(field, false, method, opts);
    case ClassId::hadamard4_inv_nmds_1zero: return census_hadamard4_nmds_1zero(field, true, method, opts);
    case ClassId::circulant4_nmds_1zero: return census_circulant4_nmds_1zero(field, false, method, opts);
    case ClassId::circulant4_nmds_1zero_singular: return census_circulant4_nmds_1zero(field, true, method, opts);
    }
    throw Error(Errc::invalid_argument, "unknown class");
}

const char* table_format_name(TableFormat f) noexcept {
    switch (f) {
    case TableFormat::text: return "text";
    case TableFormat::markdown: return "markdown";
    case TableFormat::csv: return "csv";
    case TableFormat::json: return "json";
    }
    return "text";
}

TableFormat parse_table_format(const std::string& name) {
    if (name == "text")
        return TableFormat::text;
    if (name == "markdown" || name == "md")
        return TableFormat::markdown;
    if (name == "csv")
        return TableFormat::csv;
    if (name == "json")
        return TableFormat::json;
    throw Error(Errc::parse_error, "unknown format '" + name + "'");
}

bool PaperTables::any_skipped() const noexcept {
    for (const auto& row : rows)
        if (!row.circulant_mds)
            return true;
    return false;
}

PaperTables build_paper_tables(unsigned r_min, unsigned r_max, const CensusOptions& opts) {
    if (r_min < 3 || r_max > 8 || r_min > r_max)
        throw Error(Errc::invalid_argument, "table range must satisfy 3 <= r_min <= r_max <= 8");
    PaperTables out;
    for (unsigned r = r_min; r <= r_max; ++r) {
        const FieldPtr f = make_field(r);
        TableRow row;
        row.r = r;
        row.poly = f->poly();
        row.hadamard_mds = formula_hadamard4_mds(r);
        row.involutory_hadamard_mds = formula_hadamard4_inv_mds(r);
        row.non_involutory_hadamard_mds = formula_hadamard4_noninv_mds(r);
        if (r <= brute_force_limit(opts))
            row.circulant_mds = census_circulant4_mds(f, opts).count;
        out.rows.push_back(row);
    }
    return out;
}

std::string render_paper_tables(const PaperTables& tables, int table_id, TableFormat format) {
    if (table_id < 0 || table_id > 2)
        throw Error(Errc::invalid_argument, "table id must be 1 or 2");
    const bool show_noninv = table_id != 2;
    const bool show_circ = table_id != 1;

    struct Column {
        std::string key;
        std::string title;
    };
    std::vector<Column> cols = {{"hadamard_mds", "Hadamard MDS"}, {"involutory_hadamard_mds", "involutory Hadamard MDS"}};
    if (show_noninv)
        cols.push_back({"non_involutory_hadamard_mds", "non-involutory Hadamard MDS"});
    if (show_circ)
        cols.push_back({"circulant_mds", "circulant MDS"});

    auto cell = [](const TableRow& row, const std::string& key) -> std::pair<std::optional<std::uint64_t>, std::string> {
        if (key == "hadamard_mds")
            return {row.hadamard_mds, "formula"};
        if (key == "involutory_hadamard_mds")
            return {row.involutory_hadamard_mds, "formula"};
        if (key == "non_involutory_hadamard_mds")
            return {row.non_involutory_hadamard_mds, "formula"};
        if (row.circulant_mds)
            return {row.circulant_mds, "brute"};
        return {std::nullopt, "skipped"};
    };

    std::ostringstream os;
    switch (format) {
    case TableFormat::json: {
        nlohmann::ordered_json doc;
        doc["table"] = table_id;
        doc["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : tables.rows) {
            nlohmann::ordered_json j;
            j["r"] = row.r;
            j["poly"] = to_hex(row.poly);
            for (const auto& c : cols) {
                auto [value, method] = cell(row, c.key);
                nlohmann::ordered_json v;
                v["count"] = value ? nlohmann::ordered_json(*value) : nlohmann::ordered_json(nullptr);
                v["method"] = method;
                j[c.key] = v;
            }
            doc["rows"].push_back(j);
        }
        os << doc.dump(2) << '\n';
        break;
    }
    case TableFormat::csv: {
        os << "r,poly";
        for (const auto& c : cols)
            os << ',' << c.key;
        for (const auto& c : cols)
            os << ',' << c.key << "_method";
        os << '\n';
        for (const auto& row : tables.rows) {
            os << row.r << ',' << to_hex(row.poly);
            for (const auto& c : cols) {
                auto [value, method] = cell(row, c.key);
                os << ',';
                if (value)
                    os << *value;
            }
            for (const auto& c : cols)
                os << ',' << cell(row, c.key).second;
            os << '\n';
        }
        break;
    }
    case TableFormat::markdown:
    case TableFormat::text: {
        const bool md = format == TableFormat::markdown;
        auto line = [&](const std::vector<std::string>& items) {
            if (md) {
                os << '|';
                for (const auto& it : items)
                    os << ' ' << it << " |";
            } else {
                for (std::size_t k = 0; k < items.size(); ++k) {
                    std::string it = items[k];
                    if (it.size() < (k == 0 ? 10 : 28))
                        it.append((k == 0 ? 10 : 28) - it.size(), ' ');
                    os << it;
                }
            }
            os << '\n';
        };
        std::vector<std::string> head = {"Field"};
        for (const auto& c : cols)
            head.push_back(c.title);
        line(head);
        if (md) {
            os << '|';
            for (std::size_t k = 0; k < head.size(); ++k)
                os << (k == 0 ? " --- |" : " ---: |");
            os << '\n';
        }
        for (const auto& row : tables.rows) {
            std::vector<std::string> items = {"GF(2^" + std::to_string(row.r) + ")"};
            for (const auto& c : cols) {
                auto [value, method] = cell(row, c.key);
                items.push_back(value ? std::to_string(*value) + " (" + method + ")" : "skipped");
            }
            line(items);
        }
        break;
    }
    }
    return os.str();
}

} // namespace mdsc
