#include "helpenum/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

using namespace helpenum;

struct CommonOpts {
    std::string table_path;
    std::vector<std::string> brauer_paths;
    long long max_coeff = 128;
    int jobs = 1;
    std::string format = "text";
    bool no_ordinary = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_engine_opts) {
    cmd->add_option("--table", o.table_path, "ordinary character table document")->required();
    cmd->add_option("--brauer", o.brauer_paths, "Brauer table document (repeatable)");
    if (with_engine_opts) {
        cmd->add_option("--max-coeff", o.max_coeff,
                        "fallback bound on |nu| when interval reasoning cannot close");
        cmd->add_option("--jobs", o.jobs, "parallel branch enumeration threads");
        cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        cmd->add_flag("--no-ordinary", o.no_ordinary,
                      "exclude the ordinary character rows from the constraint systems");
    }
}

struct Loaded {
    CharacterTable base;
    std::vector<BrauerTable> brauers;
    TableSet tables;
};

Loaded load_inputs(const CommonOpts& o) {
    Loaded L{CharacterTable::load_file(o.table_path), {}, {}};
    L.brauers.reserve(o.brauer_paths.size());
    for (const auto& p : o.brauer_paths) L.brauers.push_back(BrauerTable::load_file(p, L.base));
    L.tables.base = &L.base;
    for (const auto& b : L.brauers) L.tables.brauers.push_back(&b);
    L.tables.include_ordinary = !o.no_ordinary;
    return L;
}

RunReport run_verify(const Loaded& L, const CommonOpts& o) {
    RunReport r;
    r.base = &L.base;
    r.group = L.base.name();
    if (L.tables.include_ordinary) r.tables_used.push_back(L.base.name());
    for (const auto& b : L.brauers) r.tables_used.push_back(b.name);
    r.max_coeff = o.max_coeff;
    r.jobs = o.jobs;
    SolveOptions opts{o.max_coeff, o.jobs};
    auto t0 = std::chrono::steady_clock::now();
    r.orders = solve_all(L.tables, opts, &r.pruned);
    r.graph_group = group_prime_graph(L.base);
    r.graph_units = unit_prime_graph(L.base, r.orders);
    r.kimmerle = kimmerle_check(r.graph_group, r.graph_units, &r.kimmerle_diff);
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& [k, res] : r.orders) r.any_capped = r.any_capped || res.capped;
    return r;
}

int cmd_solve(const CommonOpts& o, long long order, bool all) {
    Loaded L = load_inputs(o);
    SolveOptions opts{o.max_coeff, o.jobs};
    RunReport r;
    r.base = &L.base;
    r.group = L.base.name();
    r.max_coeff = o.max_coeff;
    if (all) {
        r = run_verify(L, o);
        std::cout << (o.format == "json" ? report_to_json(r) : report_to_text(r));
        return r.any_capped ? 1 : 0;
    }
    // solve every divisor order below `order` first; they feed the branch lattice
    std::map<long long, OrderResult> solved;
    for (long long e = 1; e <= order; ++e) {
        if (order % e != 0) continue;
        bool viable = true;
        if (e > 1) {
            for (long long p = 2; p <= e; ++p) {
                if (e % p != 0) continue;
                bool prime = true;
                for (long long q = 2; q * q <= p; ++q)
                    if (p % q == 0) prime = false;
                if (!prime) continue;
                auto it = solved.find(e / p);
                if (it == solved.end() || it->second.verdict.status == OrderStatus::Excluded) viable = false;
            }
        }
        if (!viable) {
            std::cout << "order " << order << ": pruned (a proper power order is excluded)\n";
            return 0;
        }
        solved.emplace(e, solve_order(e, L.tables, solved, opts));
    }
    r.orders = std::move(solved);
    bool capped = r.orders.at(order).capped;
    std::cout << (o.format == "json" ? order_to_json(r, order) : order_to_text(r, order));
    return capped ? 1 : 0;
}

int cmd_verify(const CommonOpts& o, const std::string& expect_path) {
    Loaded L = load_inputs(o);
    RunReport r = run_verify(L, o);
    std::string json = report_to_json(r);
    std::cout << (o.format == "json" ? json : report_to_text(r));
    if (!expect_path.empty()) {
        std::ifstream in(expect_path);
        if (!in) {
            std::cerr << "cannot open golden file: " << expect_path << "\n";
            return 2;
        }
        std::string golden((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        auto diffs = diff_against_golden(json, golden);
        if (!diffs.empty()) {
            std::cerr << "golden mismatch (" << expect_path << "):\n";
            for (const auto& d : diffs) std::cerr << "  " << d << "\n";
            return 3;
        }
        std::cout << "golden match: " << expect_path << "\n";
    }
    return r.any_capped ? 1 : 0;
}

int cmd_validate(const CommonOpts& o) {
    int rc = 0;
    CharacterTable base = CharacterTable::load_file(o.table_path);
    std::cout << "table " << base.name() << ": " << base.class_count() << " classes, "
              << base.character_count() << " characters, order " << base.group_order()
              << ", exponent " << base.exponent() << "\n";
    auto violations = validate_orthogonality(base);
    if (violations.empty()) {
        std::cout << "orthogonality: clean\n";
    } else {
        rc = 2;
        for (const auto& v : violations) std::cout << "orthogonality violation: " << v.detail << "\n";
    }
    for (const auto& p : o.brauer_paths) {
        BrauerTable b = BrauerTable::load_file(p, base);
        std::cout << "brauer table " << b.name << " (mod " << b.prime << "): "
                  << b.class_indices.size() << " classes, " << b.character_count() << " characters\n";
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Luthar-Passi / HeLP constraint enumeration for torsion units of an integral group ring"};
    app.require_subcommand(1);

    CommonOpts solve_opts, verify_opts, validate_opts;
    long long order = 0;
    bool all = false;
    std::string expect_path;

    CLI::App* solve = app.add_subcommand("solve", "enumerate admissible partial-augmentation tuples");
    add_common(solve, solve_opts, true);
    auto* order_opt = solve->add_option("--order", order, "unit order to solve");
    solve->add_flag("--all", all, "process every divisor of the exponent");
    solve->callback([&] {
        if (!all && order_opt->count() == 0)
            throw CLI::ValidationError("solve", "either --order or --all is required");
    });

    CLI::App* verify = app.add_subcommand("verify", "full run: all orders, prime graphs, Kimmerle verdict");
    add_common(verify, verify_opts, true);
    verify->add_option("--expect", expect_path, "golden report to compare against (exit 3 on mismatch)");

    CLI::App* validate = app.add_subcommand("validate", "validate table documents, including orthogonality");
    add_common(validate, validate_opts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_opts, order, all);
        if (verify->parsed()) return cmd_verify(verify_opts, expect_path);
        if (validate->parsed()) return cmd_validate(validate_opts);
    } catch (const helpenum::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
