// skewtab: Motzkin-path / three-rowed-tableau toolkit.
//
// Subcommands: map, count, seq, algebra reduce, derive, derive-entry,
// catalog, conjecture. Results are emitted as a JSON envelope
// {command, params, status, payload, timing_ms} on stdout; --format text
// prints a human-readable digest instead.
//
// Exit codes: 0 ok, 1 usage/validation, 2 verification failure,
// 3 resource limit.

#include "skewtab/bijection.hpp"
#include "skewtab/enumeration.hpp"
#include "skewtab/errors.hpp"
#include "skewtab/identity_engine.hpp"
#include "skewtab/m_algebra.hpp"
#include "skewtab/serialize.hpp"
#include "skewtab/walks.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace skewtab;

struct GlobalOptions {
    std::string format = "json";
    int cap = 64;                    // enumeration cap for calibration sweeps
    unsigned long long memory_cap = 0;  // bytes; 0 = unlimited
    int parallel = 1;
    unsigned long seed = 20260809;
};

int exit_code_for(Error::Kind kind) {
    switch (kind) {
        case Error::Kind::Validation: return 1;
        case Error::Kind::Verification:
        case Error::Kind::Calibration:
        case Error::Kind::Internal: return 2;
        case Error::Kind::Resource: return 3;
    }
    return 1;
}

const char* kind_name(Error::Kind kind) {
    switch (kind) {
        case Error::Kind::Validation: return "validation";
        case Error::Kind::Verification: return "verification";
        case Error::Kind::Calibration: return "calibration";
        case Error::Kind::Resource: return "resource-limit";
        case Error::Kind::Internal: return "internal";
    }
    return "error";
}

struct Emitter {
    const GlobalOptions& global;
    std::string command;
    Json params = Json::object();
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    long elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }

    void emit_envelope(const Json& payload, const std::string& status) const {
        Json envelope{{"command", command},
                      {"params", params},
                      {"status", status},
                      {"payload", payload},
                      {"timing_ms", elapsed_ms()}};
        std::cout << envelope.dump(2) << "\n";
    }

    int ok(const Json& payload, const std::string& text_digest,
           const std::string& status = "ok", int code = 0) const {
        if (global.format == "text") std::cout << text_digest;
        else emit_envelope(payload, status);
        return code;
    }

    int error(const Error& e) const {
        Json payload{{"error", {{"kind", kind_name(e.kind())}, {"message", e.what()}}}};
        if (global.format == "text") std::cout << kind_name(e.kind()) << " error: " << e.what() << "\n";
        else emit_envelope(payload, "error");
        return exit_code_for(e.kind());
    }
};

Json map_triple(const MotzkinPath& path, bool with_trace) {
    YamanouchiWord word = phi(path);
    Json payload{{"path", path.to_string()},
                 {"word", word.to_string()},
                 {"tableau", tableau_to_json(chi_inv(word))}};
    if (with_trace) payload["trace"] = trace_to_json(label_trace(path));
    return payload;
}

// Uniform sampling over the Motzkin paths of a given length, by weighting
// each step with the count of completions.
MotzkinPath sample_path(int length, gmp_randclass& rng) {
    std::vector<Step> steps;
    steps.reserve(length);
    int h = 0;
    for (int t = 0; t < length; ++t) {
        const int rem = length - t - 1;
        BigInt wu = x_count(0, h + 1, rem);
        BigInt wd = h > 0 ? x_count(0, h - 1, rem) : BigInt(0);
        BigInt wl = x_count(0, h, rem);
        BigInt total = wu + wd + wl;
        BigInt pick = rng.get_z_range(total);
        if (pick < wu) {
            steps.push_back(Step::Up);
            ++h;
        } else if (pick < wu + wd) {
            steps.push_back(Step::Down);
            --h;
        } else {
            steps.push_back(Step::Level);
        }
    }
    return MotzkinPath(std::move(steps));
}

int run_map(const GlobalOptions& global, const std::string& path_arg,
            const std::string& word_arg, bool with_trace, int corpus_count, int corpus_length) {
    Emitter out{global, "map"};
    try {
        if (corpus_count > 0) {
            out.params = {{"sample_corpus", corpus_count},
                          {"length", corpus_length},
                          {"seed", global.seed}};
            if (corpus_length < 0 || corpus_length > global.cap)
                throw ResourceLimitError("corpus length exceeds the enumeration cap");
            gmp_randclass rng(gmp_randinit_default);
            rng.seed(static_cast<unsigned long>(global.seed));
            Json triples = Json::array();
            std::string digest;
            for (int k = 0; k < corpus_count; ++k) {
                Json t = map_triple(sample_path(corpus_length, rng), false);
                digest += t["path"].get<std::string>() + " " + t["word"].get<std::string>() + "\n";
                triples.push_back(std::move(t));
            }
            return out.ok(Json{{"corpus", triples}}, digest);
        }

        if (path_arg.empty() == word_arg.empty())
            throw ValidationError("map needs exactly one of --path or --word");

        MotzkinPath path = !path_arg.empty() ? MotzkinPath::parse(path_arg)
                                             : phi_inv(YamanouchiWord::parse(word_arg, 3));
        out.params = !path_arg.empty() ? Json{{"path", path_arg}} : Json{{"word", word_arg}};
        Json payload = map_triple(path, with_trace);
        std::string digest = "path:    " + payload["path"].get<std::string>() +
                             "\nword:    " + payload["word"].get<std::string>() +
                             "\ntableau: " + payload["tableau"].dump() + "\n";
        return out.ok(payload, digest);
    } catch (const Error& e) {
        return out.error(e);
    }
}

struct CountArgs {
    std::string kind;
    int n = 0;
    int k = 3;
    std::string mu;
    int entries = 0;
    std::string cell;
    int value = 0;
    int i = 0, j = 0;
};

int run_count(const GlobalOptions& global, const CountArgs& args) {
    Emitter out{global, "count"};
    try {
        BigInt value;
        Json params{{"kind", args.kind}};
        if (args.kind == "motzkin") {
            params["n"] = args.n;
            value = motzkin(args.n);
        } else if (args.kind == "strip") {
            params["k"] = args.k;
            params["n"] = args.n;
            value = count_strip(args.k, args.n);
        } else if (args.kind == "skew") {
            Partition mu = Partition::parse(args.mu);
            params["mu"] = mu.to_string();
            params["m"] = args.entries;
            value = count_skew_bruteforce(mu, args.entries);
        } else if (args.kind == "entry") {
            auto comma = args.cell.find(',');
            if (comma == std::string::npos)
                throw ValidationError("--cell expects 'row,col'");
            int row = std::stoi(args.cell.substr(0, comma));
            int col = std::stoi(args.cell.substr(comma + 1));
            params["cell"] = args.cell;
            params["value"] = args.value;
            params["n"] = args.n;
            value = count_entry_restricted(row, col, args.value, args.n);
        } else if (args.kind == "x") {
            params["i"] = args.i;
            params["j"] = args.j;
            params["n"] = args.n;
            value = x_count(args.i, args.j, args.n);
        } else if (args.kind == "grounded") {
            params["n"] = args.n;
            value = count_grounded_level_paths(args.n);
        } else if (args.kind == "closed") {
            params["k"] = args.k;
            params["n"] = args.n;
            value = closed_form(args.k, args.n);
        } else {
            throw ValidationError("unknown count kind '" + args.kind + "'");
        }
        out.params = params;
        Json payload{{"params", params}, {"value", to_decimal(value)}};
        return out.ok(payload, to_decimal(value) + "\n");
    } catch (const Error& e) {
        return out.error(e);
    } catch (const std::exception& e) {
        return out.error(ValidationError(e.what()));
    }
}

int run_seq(const GlobalOptions& global, const std::string& name, int upto) {
    Emitter out{global, "seq"};
    try {
        if (name != "motzkin") throw ValidationError("unknown sequence '" + name + "'");
        if (upto < 0) throw ValidationError("--upto must be nonnegative");
        for (int n = 0; n <= upto; ++n) std::cout << to_decimal(motzkin(n)) << "\n";
        return 0;
    } catch (const Error& e) {
        return out.error(e);
    }
}

int run_algebra_reduce(const GlobalOptions& global, const std::string& expr) {
    Emitter out{global, "algebra reduce"};
    out.params = {{"expr", expr}};
    try {
        MExpression parsed = parse_mexpression(expr);
        MExpression reduced = reduce(parsed);
        Json m_part = Json::array();
        for (const auto& [d, c] : reduced.coeff_of_m_power(1).coeffs())
            m_part.push_back({{"d", d}, {"c", to_decimal(c)}});
        Json free_part = Json::array();
        for (const auto& [d, c] : reduced.coeff_of_m_power(0).coeffs())
            free_part.push_back({{"d", d}, {"c", to_decimal(c)}});
        Json payload{{"expr", expr},
                     {"reduced", reduced.to_string()},
                     {"m_coefficient", m_part},
                     {"m_free", free_part}};
        return out.ok(payload, reduced.to_string() + "\n");
    } catch (const Error& e) {
        return out.error(e);
    }
}

int run_derive(const GlobalOptions& global, const std::string& mu_text, bool raise_calibration) {
    Emitter out{global, "derive"};
    out.params = {{"mu", mu_text}};
    try {
        Partition mu = Partition::parse(mu_text);
        DeriveOptions opts;
        opts.calibrate.enumeration_cap = global.cap;
        opts.auto_raise_offsets = raise_calibration;
        SkewDerivation d = derive_skew(mu, opts);
        Json payload = skew_derivation_to_json(d);
        return out.ok(payload, d.combo.render() + "\n");
    } catch (const Error& e) {
        return out.error(e);
    }
}

int run_derive_entry(const GlobalOptions& global, const std::string& cell, int value) {
    Emitter out{global, "derive-entry"};
    out.params = {{"cell", cell}, {"value", value}};
    try {
        auto comma = cell.find(',');
        if (comma == std::string::npos) throw ValidationError("--cell expects 'row,col'");
        int row = 0, col = 0;
        try {
            row = std::stoi(cell.substr(0, comma));
            col = std::stoi(cell.substr(comma + 1));
        } catch (const std::exception&) {
            throw ValidationError("cannot parse --cell '" + cell + "'");
        }
        DeriveOptions opts;
        opts.calibrate.enumeration_cap = global.cap;
        EntryDerivation d = derive_entry(row, col, value, opts);
        Json payload = entry_derivation_to_json(d);
        return out.ok(payload, d.combo.render() + "\n");
    } catch (const Error& e) {
        return out.error(e);
    }
}

int run_catalog(const GlobalOptions& global, int mu_max) {
    Emitter out{global, "catalog"};
    out.params = {{"mu_max", mu_max}};
    try {
        CatalogOptions opts;
        opts.derive.calibrate.enumeration_cap = global.cap;
        opts.parallel = global.parallel;
        CatalogReport report = catalog(mu_max, opts);
        std::string digest = report.to_markdown();
        if (global.format == "markdown") {
            std::cout << digest;
            return report.failures == 0 ? 0 : 2;
        }
        return out.ok(catalog_report_to_json(report), digest, report.failures == 0 ? "ok" : "partial",
                      report.failures == 0 ? 0 : 2);
    } catch (const Error& e) {
        return out.error(e);
    }
}

int run_conjecture(const GlobalOptions& global, int ell_max, int n_max) {
    Emitter out{global, "conjecture"};
    out.params = {{"ell_max", ell_max}, {"n_max", n_max}};
    try {
        ConjectureOptions opts;
        opts.parallel = global.parallel;
        if (global.memory_cap > 0) {
            // Rough per-state footprint of the sparse DP layer.
            unsigned long long per_state = 96 + 4ull * std::max(1, ell_max);
            opts.walk.max_states = static_cast<std::size_t>(global.memory_cap / per_state);
            if (opts.walk.max_states == 0) opts.walk.max_states = 1;
        }
        ConjectureReport report = check_conjecture(ell_max, n_max, opts);
        std::string digest = "cells: " + std::to_string(report.cells.size()) +
                             ", odd mismatches: " + std::to_string(report.odd_mismatches) +
                             ", even mismatches: " + std::to_string(report.even_mismatches) +
                             ", resource limited: " + std::to_string(report.resource_limited) + "\n";
        std::string status = "ok";
        int code = 0;
        if (report.resource_limited > 0) {
            status = "partial";
            code = 3;
        }
        if (report.odd_mismatches > 0) {
            status = "error";
            code = 2;  // the odd equality is a theorem; a mismatch is a defect
        }
        return out.ok(conjecture_report_to_json(report), digest, status, code);
    } catch (const Error& e) {
        return out.error(e);
    }
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOptions global;

    CLI::App app{"Motzkin paths, three-rowed standard Young tableaux, and their counting formulas"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.add_option("--format", global.format, "Output format")
        ->check(CLI::IsMember({"json", "text", "markdown"}))
        ->capture_default_str();
    app.add_option("--cap", global.cap, "Exhaustive enumeration cap")->capture_default_str();
    app.add_option("--memory-cap", global.memory_cap, "Approximate DP memory ceiling in bytes");
    app.add_option("--parallel", global.parallel, "Worker threads for catalog/conjecture")
        ->capture_default_str();
    app.add_option("--seed", global.seed, "Seed for sampled corpora")->capture_default_str();

    std::string path_arg, word_arg;
    bool with_trace = false;
    int corpus_count = 0, corpus_length = 0;
    auto* map_cmd = app.add_subcommand("map", "Convert between path, word, and tableau");
    map_cmd->add_option("--path", path_arg, "Motzkin path over U/D/L");
    map_cmd->add_option("--word", word_arg, "Yamanouchi word over {1,2,3}");
    map_cmd->add_flag("--trace", with_trace, "Include the labeling passes");
    map_cmd->add_option("--sample-corpus", corpus_count, "Emit this many sampled triples");
    map_cmd->add_option("--length", corpus_length, "Length of sampled paths");

    CountArgs count_args;
    auto* count_cmd = app.add_subcommand("count", "Exact counts");
    count_cmd
        ->add_option("--kind", count_args.kind,
                     "strip|skew|entry|x|motzkin|grounded|closed")
        ->required();
    count_cmd->add_option("--n", count_args.n, "Length / total entries");
    count_cmd->add_option("--k", count_args.k, "Strip width (strip, closed)");
    count_cmd->add_option("--mu", count_args.mu, "Partition, comma-separated (skew)");
    count_cmd->add_option("--m", count_args.entries, "Entries in the skew part (skew)");
    count_cmd->add_option("--cell", count_args.cell, "row,col (entry)");
    count_cmd->add_option("--value", count_args.value, "Fixed entry value (entry)");
    count_cmd->add_option("--i", count_args.i, "Start abscissa (x)");
    count_cmd->add_option("--j", count_args.j, "Start height (x)");

    std::string seq_name = "motzkin";
    int seq_upto = 0;
    auto* seq_cmd = app.add_subcommand("seq", "Dump a sequence, one value per line");
    seq_cmd->add_option("--name", seq_name, "Sequence name")->capture_default_str();
    seq_cmd->add_option("--upto", seq_upto, "Last index")->required();

    std::string algebra_expr;
    auto* algebra_cmd = app.add_subcommand("algebra", "Symbolic operations");
    auto* reduce_cmd = algebra_cmd->add_subcommand("reduce", "Rewrite M-powers above 1");
    reduce_cmd->add_option("--expr", algebra_expr, "Expression over x, M, +, -, *, ^")->required();
    algebra_cmd->require_subcommand(1);

    std::string derive_mu;
    bool raise_calibration = true;
    auto* derive_cmd = app.add_subcommand("derive", "Skew-strip counting formula");
    derive_cmd->add_option("--mu", derive_mu, "Partition, comma-separated")->required();
    derive_cmd->add_flag("--raise-calibration,!--no-raise-calibration", raise_calibration,
                         "Raise calibration sizes for first parts beyond 6 (default on)");

    std::string entry_cell;
    int entry_value = 0;
    auto* entry_cmd = app.add_subcommand("derive-entry", "Fixed-entry counting formula");
    entry_cmd->add_option("--cell", entry_cell, "row,col")->required();
    entry_cmd->add_option("--value", entry_value, "Fixed entry value")->required();

    int mu_max = 0;
    auto* catalog_cmd = app.add_subcommand("catalog", "Formulas for every mu up to a bound");
    catalog_cmd->add_option("--mu-max", mu_max, "Largest first part")->required();

    int ell_max = 1, n_max = 0;
    auto* conj_cmd = app.add_subcommand("conjecture", "Walk counts vs strip counts");
    conj_cmd->add_option("--ell-max", ell_max, "Largest ell")->required();
    conj_cmd->add_option("--n-max", n_max, "Largest walk length")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (map_cmd->parsed())
        return run_map(global, path_arg, word_arg, with_trace, corpus_count, corpus_length);
    if (count_cmd->parsed()) return run_count(global, count_args);
    if (seq_cmd->parsed()) return run_seq(global, seq_name, seq_upto);
    if (algebra_cmd->parsed()) return run_algebra_reduce(global, algebra_expr);
    if (derive_cmd->parsed()) return run_derive(global, derive_mu, raise_calibration);
    if (entry_cmd->parsed()) return run_derive_entry(global, entry_cell, entry_value);
    if (catalog_cmd->parsed()) return run_catalog(global, mu_max);
    if (conj_cmd->parsed()) return run_conjecture(global, ell_max, n_max);
    return 1;
}
