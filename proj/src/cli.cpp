// SPDX-License-Identifier: Apache-2.0
#include "mdsc/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mdsc/io.hpp"

namespace mdsc {

namespace {

struct Config {
    std::optional<unsigned> r;
    std::string poly;
    unsigned jobs = 0;
    unsigned partitions = 0;
    std::uint64_t seed = 1;
    std::string format = "text";
    bool allow_long = false;
    bool strict = false;
};

void add_common(CLI::App* sub, Config& cfg) {
    sub->add_option("--r", cfg.r, "extension degree r of GF(2^r)")->check(CLI::Range(0u, 64u));
    sub->add_option("--poly", cfg.poly, "reduction polynomial, e.g. 0x13");
    sub->add_option("--jobs", cfg.jobs, "worker threads (0 = all cores; default from MDSCENSUS_JOBS)");
    sub->add_option("--seed", cfg.seed, "seed for sampled scans");
    sub->add_option("--format", cfg.format, "text, json, csv or markdown")
        ->check(CLI::IsMember({"text", "json", "csv", "markdown", "md"}));
    sub->add_flag("--allow-long", cfg.allow_long, "lift the brute-force budget to r <= 8");
    sub->add_flag("--strict", cfg.strict, "treat skipped cells or claims as a budget failure");
}

std::optional<std::uint32_t> poly_of(const Config& cfg) {
    if (cfg.poly.empty())
        return std::nullopt;
    return parse_hex_or_int(cfg.poly);
}

FieldPtr field_of(const Config& cfg) {
    if (!cfg.r)
        throw Error(Errc::invalid_argument, "--r is required");
    return make_field(*cfg.r, poly_of(cfg));
}

CensusOptions census_options(const Config& cfg) {
    CensusOptions o;
    o.jobs = cfg.jobs;
    o.partitions = cfg.partitions;
    o.allow_long = cfg.allow_long;
    return o;
}

bool is_json(const Config& cfg) { return cfg.format == "json"; }
bool is_csv(const Config& cfg) { return cfg.format == "csv"; }

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? " " : "") + std::to_string(v[k]);
    return s;
}

// ---------------------------------------------------------------------------

int cmd_field(const Config& cfg, std::ostream& out) {
    const FieldPtr f = field_of(cfg);
    if (is_json(cfg)) {
        const Json j = {{"r", f->degree()},
                        {"poly", to_hex(f->poly())},
                        {"size", f->size()},
                        {"generator", to_hex(f->generator())},
                        {"group_order", f->group_order()}};
        out << j.dump(2) << '\n';
    } else if (is_csv(cfg)) {
        out << "r,poly,size,generator,group_order\n"
            << f->degree() << ',' << to_hex(f->poly()) << ',' << f->size() << ',' << to_hex(f->generator()) << ','
            << f->group_order() << '\n';
    } else {
        out << "field        GF(2^" << f->degree() << ")\n"
            << "poly         " << to_hex(f->poly()) << '\n'
            << "size         " << f->size() << '\n'
            << "generator    " << to_hex(f->generator()) << '\n'
            << "group order  " << f->group_order() << '\n';
    }
    return exit_ok;
}

int cmd_check(const Config& cfg, const std::string& file, const std::vector<std::string>& props, std::ostream& out) {
    FieldDefaults defaults;
    defaults.r = cfg.r;
    defaults.poly = poly_of(cfg);
    const MatrixDocument doc = load_matrix_file(file, defaults);
    std::vector<PredicateReport> reports;
    for (const auto& name : props)
        reports.push_back(check(doc.matrix, parse_property(name)));

    bool all = true;
    for (const auto& r : reports)
        all = all && r.holds;

    if (is_json(cfg)) {
        Json arr = Json::array();
        for (const auto& r : reports)
            arr.push_back(to_json(r));
        out << arr.dump(2) << '\n';
    } else if (is_csv(cfg)) {
        out << "property,holds,witness_rows,witness_cols,reason\n";
        for (const auto& r : reports) {
            out << property_name(r.property) << ',' << (r.holds ? "true" : "false") << ',';
            if (r.witness)
                out << join(r.witness->rows) << ',' << join(r.witness->cols) << ',' << r.witness->reason;
            else
                out << ",,";
            out << '\n';
        }
    } else {
        for (const auto& r : reports) {
            out << std::left << std::setw(12) << property_name(r.property) << (r.holds ? "holds" : "fails");
            if (r.witness) {
                out << "  witness rows {" << join(r.witness->rows) << "} cols {" << join(r.witness->cols) << "}";
                if (!r.witness->reason.empty())
                    out << " (" << r.witness->reason << ")";
            }
            out << '\n';
        }
    }
    return all ? exit_ok : exit_failed;
}

void print_census(const Config& cfg, const std::vector<CensusResult>& results, std::ostream& out) {
    if (is_json(cfg)) {
        Json arr = Json::array();
        for (const auto& r : results)
            arr.push_back(to_json(r));
        out << arr.dump(2) << '\n';
        return;
    }
    if (is_csv(cfg)) {
        out << "class_id,r,poly,method,count,elapsed_ms,partitions,candidates\n";
        for (const auto& r : results)
            out << class_id_name(r.class_id) << ',' << r.r << ',' << to_hex(r.poly) << ',' << method_name(r.method)
                << ',' << r.count << ',' << r.elapsed_ms << ',' << r.partitions << ','
                << (r.candidates ? std::to_string(*r.candidates) : "") << '\n';
        return;
    }
    if (cfg.format == "markdown" || cfg.format == "md") {
        out << "| class | r | poly | method | count | elapsed ms |\n|---|---|---|---|---|---|\n";
        for (const auto& r : results)
            out << "| " << class_id_name(r.class_id) << " | " << r.r << " | " << to_hex(r.poly) << " | "
                << method_name(r.method) << " | " << r.count << " | " << r.elapsed_ms << " |\n";
        return;
    }
    for (const auto& r : results) {
        out << class_id_name(r.class_id) << "  GF(2^" << r.r << ")/" << to_hex(r.poly) << "  " << std::setw(7)
            << std::left << method_name(r.method) << "  count " << r.count;
        if (r.candidates)
            out << "  candidates " << *r.candidates;
        out << "  (" << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms)\n";
        out.unsetf(std::ios::floatfield);
    }
}

int cmd_census(const Config& cfg, const std::string& cls, const std::string& method, std::ostream& out,
               std::ostream& err) {
    const ClassId id = parse_class_id(cls);
    const FieldPtr f = field_of(cfg);
    const CensusOptions opts = census_options(cfg);
    std::vector<CensusResult> results;
    if (method == "both") {
        results.push_back(run_census(id, f, Method::brute, opts));
        results.push_back(run_census(id, f, Method::formula, opts));
    } else {
        results.push_back(run_census(id, f, parse_method(method), opts));
    }
    print_census(cfg, results, out);
    if (results.size() == 2 && results[0].count != results[1].count) {
        err << "mismatch: brute " << results[0].count << " vs formula " << results[1].count << '\n';
        return exit_failed;
    }
    return exit_ok;
}

void print_report_text(const VerificationReport& r, std::ostream& out) {
    out << r.claim << "  GF(2^" << r.r << ")/" << to_hex(r.poly) << "  " << (r.passed() ? "PASS" : "FAIL") << '\n'
        << "  scope            " << r.scope_note << '\n'
        << "  scanned          " << r.scanned << '\n'
        << "  counterexamples  " << r.counterexamples.size() << '\n';
    for (std::size_t k = 0; k < r.counterexamples.size() && k < 8; ++k) {
        out << "    (";
        for (std::size_t i = 0; i < r.counterexamples[k].size(); ++i)
            out << (i ? ", " : "") << r.counterexamples[k][i];
        out << ")\n";
    }
    for (const auto& [key, value] : r.stats)
        out << "  " << std::left << std::setw(26) << key << value << '\n';
    for (const auto& note : r.notes)
        out << "  note: " << note << '\n';
}

int cmd_verify(const Config& cfg, const std::string& claim, std::uint64_t samples, std::ostream& out) {
    const FieldPtr f = field_of(cfg);
    VerifyOptions opts;
    opts.census = census_options(cfg);
    opts.seed = cfg.seed;
    opts.samples = samples;

    std::vector<VerificationReport> reports;
    std::vector<std::string> skipped;
    if (claim == "all") {
        for (ClaimId id : all_claims()) {
            try {
                auto rs = run_claim(id, f, opts);
                reports.insert(reports.end(), rs.begin(), rs.end());
            } catch (const Error& e) {
                if (e.code() != Errc::budget_exceeded)
                    throw;
                skipped.push_back(std::string(claim_name(id)) + ": " + e.what());
            }
        }
    } else {
        reports = run_claim(parse_claim(claim), f, opts);
    }

    bool all = true;
    for (const auto& r : reports)
        all = all && r.passed();

    if (is_json(cfg)) {
        Json doc = {{"reports", Json::array()}, {"skipped", skipped}};
        for (const auto& r : reports)
            doc["reports"].push_back(to_json(r));
        out << doc.dump(2) << '\n';
    } else if (is_csv(cfg)) {
        out << "claim,r,poly,mode,scanned,counterexamples,passed\n";
        for (const auto& r : reports)
            out << r.claim << ',' << r.r << ',' << to_hex(r.poly) << ',' << scan_mode_name(r.scope.mode) << ','
                << r.scanned << ',' << r.counterexamples.size() << ',' << (r.passed() ? "true" : "false") << '\n';
    } else {
        for (const auto& r : reports)
            print_report_text(r, out);
        for (const auto& s : skipped)
            out << "skipped  " << s << '\n';
    }
    if (!all)
        return exit_failed;
    if (cfg.strict && !skipped.empty())
        return exit_budget;
    return exit_ok;
}

int cmd_tables(const Config& cfg, int table, unsigned r_min, unsigned r_max, std::ostream& out) {
    if (table < 0 || table > 2)
        throw Error(Errc::invalid_argument, "--table must be 1 or 2");
    const PaperTables t = build_paper_tables(r_min, r_max, census_options(cfg));
    const TableFormat fmt = parse_table_format(cfg.format);
    out << render_paper_tables(t, table, fmt);
    if (cfg.strict && t.any_skipped())
        return exit_budget;
    return exit_ok;
}

int exit_for(const Error& e) { return e.code() == Errc::budget_exceeded ? exit_budget : exit_usage; }

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    if (const char* env = std::getenv("MDSCENSUS_JOBS")) {
        try {
            cfg.jobs = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            err << "error: MDSCENSUS_JOBS must be a non-negative integer\n";
            return exit_usage;
        }
    }

    CLI::App app{"Finite-field MDS/NMDS matrix census", "mdscensus"};
    app.require_subcommand(1);

    auto* field = app.add_subcommand("field", "summarize GF(2^r)");
    add_common(field, cfg);

    std::string file;
    std::vector<std::string> props = {"mds"};
    auto* chk = app.add_subcommand("check", "decide matrix properties for a JSON matrix file");
    add_common(chk, cfg);
    chk->add_option("file", file, "matrix JSON file")->required();
    chk->add_option("properties", props, "mds, nmds, involutory, orthogonal, nonsingular");

    std::string cls, method = "brute";
    auto* cen = app.add_subcommand("census", "count a matrix class");
    add_common(cen, cfg);
    cen->add_option("class", cls, "class id")->required();
    cen->add_option("--method", method, "brute, formula or both")->check(CLI::IsMember({"brute", "formula", "both"}));
    cen->add_option("--partitions", cfg.partitions, "ranges of the outer loop (0 = one per element)");

    std::string claim;
    std::uint64_t samples = 10000;
    auto* ver = app.add_subcommand("verify", "check a structural claim");
    add_common(ver, cfg);
    ver->add_option("claim", claim, "claim id or 'all'")->required();
    ver->add_option("--samples", samples, "samples for sampled scopes");

    int table = 0;
    unsigned r_min = 3, r_max = 8;
    auto* tab = app.add_subcommand("tables", "emit the reconstructed count tables");
    add_common(tab, cfg);
    tab->add_option("--table", table, "1, 2, or 0 for every column");
    tab->add_option("--r-min", r_min, "smallest degree (>= 3)");
    tab->add_option("--r-max", r_max, "largest degree (<= 8)");

    std::vector<const char*> argv = {"mdscensus"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*field)
            return cmd_field(cfg, out);
        if (*chk)
            return cmd_check(cfg, file, props, out);
        if (*cen)
            return cmd_census(cfg, cls, method, out, err);
        if (*ver)
            return cmd_verify(cfg, claim, samples, out);
        if (*tab)
            return cmd_tables(cfg, table, r_min, r_max, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace mdsc
