// Command-line front end: build/cache the intersection graph of subspaces of
// GF(q)^n, verify the closed-form invariants against constructions and exact
// solvers, run single solvers, export DOT/JSON, and run the even-n clique
// census. Exit codes: 0 ok, 1 mismatch/inconsistency, 2 usage or config
// error, 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qig/report.hpp"

namespace {

struct CommonOpts {
    int n = 0;
    int p = 0;
    int e = 0;
    int q = 0;
    std::string modulus;
    std::string config_path;
    std::string cache_path;
    std::string json_path;
    std::string dot_path;
    double budget = -1.0;
    std::uint64_t max_nodes = 0;
    std::uint64_t max_vertices = 0;
    bool parallel = false;
};

void add_field_options(CLI::App* cmd, CommonOpts& o, bool with_q = true) {
    cmd->add_option("-n", o.n, "ambient dimension of V");
    cmd->add_option("-p", o.p, "field characteristic (prime)");
    cmd->add_option("-e", o.e, "extension degree (default 1)");
    cmd->add_option("--modulus", o.modulus,
                    "irreducible modulus as comma-separated base-p coefficients, constant term first");
    if (with_q) cmd->add_option("-q", o.q, "field order sugar: a prime power, uses the built-in modulus");
    cmd->add_option("--config", o.config_path, "JSON config file (keys field.p, field.e, field.modulus, ...)");
    cmd->add_option("--budget", o.budget, "solver budget in seconds");
    cmd->add_option("--max-nodes", o.max_nodes, "solver search-node cap");
    cmd->add_option("--max-vertices", o.max_vertices, "graph vertex cap (default 5000)");
    cmd->add_flag("--parallel", o.parallel, "parallel graph construction");
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw qig::ConfigError("cannot parse " + what + ": '" + item + "' is not an integer");
        }
    }
    if (out.empty()) throw qig::ConfigError(what + " is empty");
    return out;
}

struct Resolved {
    int n = 0;
    qig::FieldSpec field;
    qig::VerifySettings settings;
    int field_cap = qig::kDefaultFieldCap;
};

Resolved resolve(const CommonOpts& o, double default_budget, bool need_field) {
    nlohmann::json cfg = nlohmann::json::object();
    if (!o.config_path.empty()) {
        std::ifstream is(o.config_path);
        if (!is) throw qig::ConfigError("cannot open config file: " + o.config_path);
        try {
            is >> cfg;
        } catch (const nlohmann::json::exception& e) {
            throw qig::ConfigError("config file is not valid JSON: " + std::string(e.what()));
        }
    }

    Resolved r;
    if (cfg.contains("caps") && cfg["caps"].contains("q")) r.field_cap = cfg["caps"]["q"].get<int>();

    int p = o.p, e = o.e, q = o.q;
    std::string modulus = o.modulus;
    if (p == 0 && cfg.contains("field") && cfg["field"].contains("p")) p = cfg["field"]["p"].get<int>();
    if (e == 0 && cfg.contains("field") && cfg["field"].contains("e")) e = cfg["field"]["e"].get<int>();
    if (modulus.empty() && cfg.contains("field") && cfg["field"].contains("modulus"))
        modulus = cfg["field"]["modulus"].get<std::string>();
    if (e == 0) e = 1;

    if (q != 0) {
        if (p != 0) {
            qig::FieldSpec check = qig::field_from_order(q, r.field_cap);
            if (check.p != p || check.e != e)
                throw qig::ConfigError("-q " + std::to_string(q) + " conflicts with -p/-e");
            r.field = std::move(check);
        } else {
            r.field = qig::field_from_order(q, r.field_cap);
        }
    } else if (p != 0) {
        std::vector<int> mod;
        if (!modulus.empty()) mod = parse_int_list(modulus, "--modulus");
        r.field = qig::build_field(p, e, mod, r.field_cap);
    } else if (need_field) {
        throw qig::ConfigError("a field is required: pass -p (with optional -e) or -q");
    }

    r.n = o.n;
    if (need_field && r.n < 2) throw qig::ConfigError("an ambient dimension -n >= 2 is required");

    r.settings.budget.seconds = o.budget >= 0 ? o.budget : default_budget;
    if (cfg.contains("budget_seconds") && o.budget < 0)
        r.settings.budget.seconds = cfg["budget_seconds"].get<double>();
    if (o.max_nodes > 0) r.settings.budget.max_nodes = o.max_nodes;
    r.settings.max_vertices = 5000;
    if (cfg.contains("caps") && cfg["caps"].contains("vertices"))
        r.settings.max_vertices = cfg["caps"]["vertices"].get<std::uint64_t>();
    if (o.max_vertices > 0) r.settings.max_vertices = o.max_vertices;
    r.settings.threads = o.parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
    return r;
}

qig::IntersectionGraph obtain_graph(const CommonOpts& o, const Resolved& r) {
    if (!o.cache_path.empty()) {
        qig::IntersectionGraph G = qig::load_cache(o.cache_path);
        if (o.n != 0 && G.n != o.n)
            throw qig::ConfigError("cache holds n=" + std::to_string(G.n) + ", but -n " +
                                   std::to_string(o.n) + " was requested");
        return G;
    }
    return qig::build_graph(r.n, r.field, qig::BuildOptions{r.settings.max_vertices, r.settings.threads});
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream os(path);
    if (!os) throw qig::ConfigError("cannot open output file: " + path);
    os << text;
}

int cmd_build(const CommonOpts& o) {
    const Resolved r = resolve(o, 60.0, true);
    qig::IntersectionGraph G =
        qig::build_graph(r.n, r.field, qig::BuildOptions{r.settings.max_vertices, r.settings.threads});
    const qig::GraphStats st = qig::compute_stats(G.g);
    std::cout << "built G(V) for n=" << G.n << ", q=" << G.field.q << ": " << st.vertex_count
              << " vertices, " << st.edge_count << " edges, max degree " << st.max_degree
              << ", min degree " << st.min_degree << ", "
              << (st.connected ? "connected" : "disconnected") << "\n";
    if (!o.cache_path.empty()) {
        qig::save_cache(G, o.cache_path);
        std::cout << "cache written to " << o.cache_path << "\n";
    }
    return 0;
}

int cmd_verify(const CommonOpts& o) {
    const Resolved r = resolve(o, 60.0, o.cache_path.empty());
    const auto t0 = std::chrono::steady_clock::now();
    qig::IntersectionGraph G = obtain_graph(o, r);
    const double build_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    qig::VerifyOutcome out = qig::run_verify(G, r.settings, build_s);
    qig::print_report_table(out.report, std::cout);
    if (!o.json_path.empty()) write_text(o.json_path, out.report.dump(2) + "\n");
    return out.mismatch ? 1 : 0;
}

int cmd_census(const CommonOpts& o, const std::string& q_list) {
    // the q list supplies the fields; -p/-e/--modulus are not consulted here
    CommonOpts oo = o;
    oo.q = 0;
    oo.p = 2;
    oo.e = 1;
    oo.modulus.clear();
    const Resolved r = resolve(oo, 600.0, false);
    const int n_max = o.n == 0 ? 4 : o.n;
    const std::vector<int> qs = parse_int_list(q_list.empty() ? "2" : q_list, "-q list");
    nlohmann::json rows = qig::run_census(n_max, qs, r.settings, r.field_cap);
    std::cout << "n  q  predicted_lo  omega_lo  omega_hi  predicted_hi  status\n";
    for (const auto& row : rows) {
        if (row.contains("skipped")) {
            std::cout << row["n"].get<int>() << "  " << row["q"].get<int>() << "  skipped: "
                      << row["skipped"].get<std::string>() << "\n";
            continue;
        }
        std::cout << row["n"].get<int>() << "  " << row["q"].get<int>() << "  "
                  << row["predicted_lo"].get<std::string>() << "  " << row["omega_lo"].get<std::string>()
                  << "  " << row["omega_hi"].get<std::string>() << "  "
                  << row["predicted_hi"].get<std::string>() << "  " << row["status"].get<std::string>()
                  << (row["exact"].get<bool>() ? " (exact)" : "") << "\n";
    }
    if (!o.json_path.empty()) {
        std::ofstream os(o.json_path, std::ios::app);
        if (!os) throw qig::ConfigError("cannot open census file: " + o.json_path);
        for (const auto& row : rows) os << row.dump() << "\n";
    }
    return 0;
}

int cmd_invariant(const CommonOpts& o, const std::string& name) {
    const Resolved r = resolve(o, 60.0, o.cache_path.empty());
    qig::IntersectionGraph G = obtain_graph(o, r);
    qig::SolveResult sr;
    if (name == "clique")
        sr = qig::max_clique(G.g, r.settings.budget);
    else if (name == "chromatic")
        sr = qig::chromatic_number(G.g, r.settings.budget);
    else if (name == "domination")
        sr = qig::min_dominating_set(G.g, r.settings.budget);
    else if (name == "independence")
        sr = qig::max_independent_set(G.g, r.settings.budget);
    else
        throw qig::ConfigError("unknown invariant '" + name +
                               "' (expected clique|chromatic|domination|independence)");
    std::string why;
    const bool ok = qig::verify_certificate(G.g, sr.cert, &why);
    std::cout << name << " on G(V) n=" << G.n << ", q=" << G.field.q << ": value " << sr.cert.value
              << ", bounds [" << sr.lo << ", " << sr.hi << "], status " << qig::to_string(sr.status)
              << ", nodes " << sr.nodes << ", certificate " << (ok ? "verified" : ("INVALID: " + why))
              << "\n";
    if (!ok) throw qig::ConsistencyError("solver returned an invalid certificate: " + why);
    if (!o.json_path.empty()) {
        nlohmann::json j{{"invariant", name},
                         {"n", G.n},
                         {"q", G.field.q},
                         {"lo", sr.lo},
                         {"hi", sr.hi},
                         {"status", qig::to_string(sr.status)},
                         {"nodes", sr.nodes},
                         {"certificate", qig::certificate_to_json(sr.cert, ok)}};
        write_text(o.json_path, j.dump(2) + "\n");
    }
    return 0;
}

int cmd_export(const CommonOpts& o) {
    const Resolved r = resolve(o, 60.0, o.cache_path.empty());
    qig::IntersectionGraph G = obtain_graph(o, r);
    if (o.dot_path.empty() && o.json_path.empty())
        throw qig::ConfigError("export needs --dot and/or --json output paths");
    if (!o.dot_path.empty()) {
        std::ofstream os(o.dot_path);
        if (!os) throw qig::ConfigError("cannot open output file: " + o.dot_path);
        qig::export_dot(G, os);
    }
    if (!o.json_path.empty()) write_text(o.json_path, qig::export_json(G).dump(2) + "\n");
    std::cout << "exported G(V) n=" << G.n << ", q=" << G.field.q << " (" << G.nv() << " vertices)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"intersection graphs of subspaces of GF(q)^n: build, verify, census, solve, export"};
    app.require_subcommand(1);

    CommonOpts bo, vo, co, io, eo;
    std::string census_qs;
    std::string invariant_name;

    CLI::App* build = app.add_subcommand("build", "build the graph and optionally write a binary cache");
    add_field_options(build, bo);
    build->add_option("--cache", bo.cache_path, "cache file to write");

    CLI::App* verify = app.add_subcommand("verify", "verify every invariant formula against the graph");
    add_field_options(verify, vo);
    verify->add_option("--cache", vo.cache_path, "cache file to load instead of building");
    verify->add_option("--json", vo.json_path, "write the full report as JSON");

    CLI::App* census = app.add_subcommand("census", "exact/bounded clique number for even n");
    add_field_options(census, co, false);
    census->add_option("-q,--qs", census_qs, "comma-separated field orders to census (default 2)");
    census->add_option("--json", co.json_path, "append census rows to this JSON-lines file");

    CLI::App* invariant = app.add_subcommand("invariant", "run one exact solver");
    invariant->add_option("name", invariant_name, "clique|chromatic|domination|independence")->required();
    add_field_options(invariant, io);
    invariant->add_option("--cache", io.cache_path, "cache file to load instead of building");
    invariant->add_option("--json", io.json_path, "write the solve result as JSON");

    CLI::App* exportc = app.add_subcommand("export", "write DOT and/or JSON renderings of the graph");
    add_field_options(exportc, eo);
    exportc->add_option("--cache", eo.cache_path, "cache file to load instead of building");
    exportc->add_option("--dot", eo.dot_path, "DOT output path");
    exportc->add_option("--json", eo.json_path, "JSON output path");

    try {
        app.parse(argc, argv);
        if (build->parsed()) return cmd_build(bo);
        if (verify->parsed()) return cmd_verify(vo);
        if (census->parsed()) return cmd_census(co, census_qs);
        if (invariant->parsed()) return cmd_invariant(io, invariant_name);
        if (exportc->parsed()) return cmd_export(eo);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const qig::ResourceCapError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const qig::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const qig::CacheError& e) {
        std::cerr << "cache error: " << e.what() << "\n";
        return 2;
    } catch (const qig::ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
