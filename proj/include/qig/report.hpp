#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qig/constructions.hpp"
#include "qig/counting.hpp"
#include "qig/graph.hpp"
#include "qig/graph_io.hpp"
#include "qig/solvers.hpp"

namespace qig {

inline constexpr const char* kToolName = "qig";
inline constexpr const char* kToolVersion = "1.0.0";

struct VerifySettings {
    Budget budget{};
    std::uint64_t max_vertices = 5000;
    unsigned threads = 1;
};

struct VerifyOutcome {
    nlohmann::json report;
    bool mismatch = false;
};

namespace report_detail {

using nlohmann::json;

inline json solver_json(const SolveResult& r) {
    return json{{"status", to_string(r.status)},
                {"lo", std::to_string(r.lo)},
                {"hi", std::to_string(r.hi)},
                {"value", std::to_string(r.cert.value)},
                {"nodes", r.nodes}};
}

inline json predicted_exact(const BigCount& v, const std::string& formula) {
    return json{{"value", v.str()}, {"formula", formula}};
}

inline json predicted_range(const BigCount& lo, const BigCount& hi, const std::string& formula) {
    return json{{"lo", lo.str()}, {"hi", hi.str()}, {"formula", formula}};
}

inline json constructed_json(const char* kind, std::uint64_t value, const std::string& note = "") {
    json j{{"kind", kind}, {"value", std::to_string(value)}, {"verified", true}};
    if (!note.empty()) j["note"] = note;
    return j;
}

// Evidence interval for an invariant, combining the exact solver bounds with
// whatever certificates bound it from either side.
struct Evidence {
    BigCount lo = 0;
    BigCount hi = 0;
    bool pinned() const { return lo == hi; }
};

inline std::string verdict_exact(const BigCount& predicted, const Evidence& e) {
    if (predicted < e.lo || predicted > e.hi) return "MISMATCH";
    return e.pinned() ? "match" : "within-bounds";
}

inline std::string verdict_range(const BigCount& plo, const BigCount& phi, const Evidence& e) {
    if (e.lo > phi || e.hi < plo) return "MISMATCH";
    return "within-bounds";
}

inline json evidence_json(const Evidence& e) {
    return json{{"lo", e.lo.str()}, {"hi", e.hi.str()}, {"pinned", e.pinned()}};
}

inline double secs_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace report_detail

// Runs the whole verification campaign on a built graph: closed-form
// predictions, proof constructions, exact solvers, verdict per invariant.
inline VerifyOutcome run_verify(const IntersectionGraph& G, const VerifySettings& s = {},
                                double build_seconds = 0.0) {
    using namespace report_detail;
    using Clock = std::chrono::steady_clock;
    const auto t_total = Clock::now();
    const int n = G.n;
    const FieldSpec& F = G.field;

    VerifyOutcome out;
    json timing = json::object();
    timing["build_seconds"] = build_seconds;

    const PredictedInvariants P = predicted_invariants(n, F.q);
    const GraphStats stats = compute_stats(G.g);
    const bool n2 = n == 2;
    const bool odd = n % 2 == 1;

    json rows = json::array();
    bool mismatch = false;
    auto push_row = [&](json row) {
        if (row["verdict"] == "MISMATCH") mismatch = true;
        rows.push_back(std::move(row));
    };

    { // vertex count: formula vs the built graph
        Evidence e{BigCount(stats.vertex_count), BigCount(stats.vertex_count)};
        json row{{"name", "vertex_count"},
                 {"predicted", predicted_exact(P.vertex_count, "sum_{t=1..n-1} [n t]_q")},
                 {"constructed", nullptr},
                 {"solver", json{{"status", "proven"}, {"lo", std::to_string(stats.vertex_count)},
                                 {"hi", std::to_string(stats.vertex_count)},
                                 {"value", std::to_string(stats.vertex_count)}, {"nodes", 0}}},
                 {"evidence", evidence_json(e)},
                 {"note", ""}};
        row["verdict"] = verdict_exact(P.vertex_count, e);
        push_row(std::move(row));
    }

    { // connectivity: false at n = 2, true for n >= 3
        const bool predicted = n >= 3;
        const bool actual = stats.connected;
        json row{{"name", "connectivity"},
                 {"predicted", json{{"value", predicted ? "true" : "false"}, {"formula", "connected iff n >= 3"}}},
                 {"constructed", nullptr},
                 {"solver", json{{"status", "proven"}, {"lo", actual ? "true" : "false"},
                                 {"hi", actual ? "true" : "false"}, {"value", actual ? "true" : "false"},
                                 {"nodes", 0}}},
                 {"evidence", json{{"lo", actual ? "true" : "false"}, {"hi", actual ? "true" : "false"},
                                   {"pinned", true}}},
                 {"note", ""}};
        row["verdict"] = predicted == actual ? "match" : "MISMATCH";
        push_row(std::move(row));
    }

    // constructions (clique witness and coloring witness bound omega and chi
    // from both sides via chi >= omega)
    std::optional<Certificate> clique_witness;
    std::optional<MatchingColoring> coloring_witness;
    std::string construction_issue;
    auto tc = Clock::now();
    try {
        if (odd && n >= 3) {
            clique_witness = half_dim_clique(G);
            coloring_witness = matching_coloring_odd(G);
        } else if (!odd && n >= 4) {
            clique_witness = even_clique_lower(G);
            coloring_witness = even_coloring_upper(G);
        }
    } catch (const ConsistencyError& e) {
        construction_issue = e.what();
    }
    timing["construction_seconds"] = secs_since(tc);

    { // clique number
        json row{{"name", "clique_number"}, {"note", ""}};
        auto ts = Clock::now();
        const SolveResult sr = max_clique(G.g, s.budget);
        timing["clique_seconds"] = secs_since(ts);
        row["solver"] = solver_json(sr);
        Evidence e{BigCount(sr.lo), BigCount(sr.hi)};
        if (clique_witness && BigCount(clique_witness->value) > e.lo) e.lo = clique_witness->value;
        if (coloring_witness && BigCount(coloring_witness->color_count) < e.hi)
            e.hi = coloring_witness->color_count; // omega <= chi <= coloring count
        row["constructed"] =
            clique_witness ? constructed_json("clique", clique_witness->value) : json(nullptr);
        row["evidence"] = evidence_json(e);
        if (!construction_issue.empty()) {
            row["predicted"] = nullptr;
            row["verdict"] = "MISMATCH";
            row["note"] = construction_issue;
        } else if (n2) {
            row["predicted"] = nullptr;
            row["verdict"] = "skipped";
            row["note"] = "edge case n=2: no closed form for omega";
        } else if (odd) {
            row["predicted"] = predicted_exact(*P.omega_odd, "sum_{i=1..floor(n/2)} [n i]_q");
            row["verdict"] = verdict_exact(*P.omega_odd, e);
        } else {
            row["predicted"] = predicted_range(*P.omega_even_lo, *P.omega_even_hi,
                                               "sum_{i=1..n/2-1} [n i]_q + [n-1 (n-2)/2]_q <= w <= "
                                               "sum_{i=1..n/2-1} [n i]_q + [n n/2]_q - q^{n^2/4} - 1");
            row["verdict"] = verdict_range(*P.omega_even_lo, *P.omega_even_hi, e);
        }
        push_row(std::move(row));
    }

    { // chromatic number
        json row{{"name", "chromatic_number"}, {"note", ""}};
        auto ts = Clock::now();
        const SolveResult sr = chromatic_number(G.g, s.budget);
        timing["chromatic_seconds"] = secs_since(ts);
        row["solver"] = solver_json(sr);
        Evidence e{BigCount(sr.lo), BigCount(sr.hi)};
        if (clique_witness && BigCount(clique_witness->value) > e.lo) e.lo = clique_witness->value;
        if (coloring_witness && BigCount(coloring_witness->color_count) < e.hi)
            e.hi = coloring_witness->color_count;
        row["constructed"] = coloring_witness
                                 ? constructed_json("coloring", coloring_witness->color_count,
                                                    coloring_witness->note)
                                 : json(nullptr);
        row["evidence"] = evidence_json(e);
        if (!construction_issue.empty()) {
            row["predicted"] = nullptr;
            row["verdict"] = "MISMATCH";
            row["note"] = construction_issue;
        } else if (n2) {
            row["predicted"] = nullptr;
            row["verdict"] = "skipped";
            row["note"] = "edge case n=2: no closed form for chi";
        } else if (odd) {
            row["predicted"] = predicted_exact(*P.chi_odd, "sum_{i=1..floor(n/2)} [n i]_q");
            row["verdict"] = verdict_exact(*P.chi_odd, e);
        } else {
            row["predicted"] = predicted_range(*P.omega_even_lo, *P.omega_even_hi,
                                               "same bounds as the clique number");
            row["verdict"] = verdict_range(*P.omega_even_lo, *P.omega_even_hi, e);
        }
        push_row(std::move(row));
    }

    { // domination number
        json row{{"name", "domination_number"}, {"note", ""}};
        std::optional<Certificate> dom;
        std::string dom_issue;
        if (n >= 3) {
            try {
                dom = hyperplane_dominating_set(G);
            } catch (const ConsistencyError& e) {
                dom_issue = e.what();
            }
        }
        auto ts = Clock::now();
        const SolveResult sr = min_dominating_set(G.g, s.budget);
        timing["domination_seconds"] = secs_since(ts);
        row["solver"] = solver_json(sr);
        Evidence e{BigCount(sr.lo), BigCount(sr.hi)};
        if (dom && BigCount(dom->value) < e.hi) e.hi = dom->value;
        row["constructed"] = dom ? constructed_json("dominating-set", dom->value) : json(nullptr);
        row["evidence"] = evidence_json(e);
        row["predicted"] = predicted_exact(P.gamma, "q + 1");
        if (!dom_issue.empty()) {
            row["verdict"] = "MISMATCH";
            row["note"] = dom_issue;
        } else {
            row["verdict"] = verdict_exact(P.gamma, e);
            if (n2) row["note"] = "edge case n=2: graph is edgeless, gamma equals the vertex count q+1";
            else if (sr.status == SolveStatus::proven && row["verdict"] == "match")
                row["note"] = "solver-proven: no dominating set of size <= q exists";
        }
        push_row(std::move(row));
    }

    { // independence number
        json row{{"name", "independence_number"}, {"note", ""}};
        std::optional<Certificate> lines;
        std::string line_issue;
        try {
            lines = lines_independent_set(G);
        } catch (const ConsistencyError& e) {
            line_issue = e.what();
        }
        auto ts = Clock::now();
        const SolveResult sr = max_independent_set(G.g, s.budget);
        timing["independence_seconds"] = secs_since(ts);
        row["solver"] = solver_json(sr);
        Evidence e{BigCount(sr.lo), BigCount(sr.hi)};
        if (lines && BigCount(lines->value) > e.lo) e.lo = lines->value;
        row["constructed"] = lines ? constructed_json("independent-set", lines->value) : json(nullptr);
        row["evidence"] = evidence_json(e);
        row["predicted"] = predicted_exact(P.alpha, "(q^n - 1) / (q - 1)");
        if (!line_issue.empty()) {
            row["verdict"] = "MISMATCH";
            row["note"] = line_issue;
        } else {
            row["verdict"] = verdict_exact(P.alpha, e);
            if (n2) row["note"] = "edge case n=2: the whole graph is independent";
        }
        push_row(std::move(row));
    }

    timing["total_seconds"] = secs_since(t_total);

    json& report = out.report;
    report["n"] = n;
    report["p"] = F.p;
    report["e"] = F.e;
    report["q"] = F.q;
    report["config"] = json{{"budget_seconds", s.budget.seconds},
                            {"max_nodes", s.budget.max_nodes == std::numeric_limits<std::uint64_t>::max()
                                              ? "unlimited"
                                              : std::to_string(s.budget.max_nodes)},
                            {"max_vertices", s.max_vertices},
                            {"threads", s.threads},
                            {"field", json{{"p", F.p}, {"e", F.e}, {"q", F.q}, {"modulus", F.modulus}}},
                            {"n", n}};
    report["graph"] = json{{"vertex_count", stats.vertex_count},
                           {"edge_count", stats.edge_count},
                           {"max_degree", stats.max_degree},
                           {"min_degree", stats.min_degree},
                           {"connected", stats.connected}};
    report["invariants"] = std::move(rows);
    report["timing"] = std::move(timing);
    report["tool"] = json{{"name", kToolName}, {"version", kToolVersion}, {"cache_format", kCacheFormatVersion}};
    report["verdict"] = mismatch ? "mismatch" : "ok";
    out.mismatch = mismatch;
    return out;
}

inline VerifyOutcome run_verify(int n, const FieldSpec& F, const VerifySettings& s = {}) {
    const auto tb = std::chrono::steady_clock::now();
    const IntersectionGraph G = build_graph(n, F, BuildOptions{s.max_vertices, s.threads});
    return run_verify(G, s, report_detail::secs_since(tb));
}

inline nlohmann::json strip_timing(nlohmann::json report) {
    report.erase("timing");
    return report;
}

inline void print_report_table(const nlohmann::json& report, std::ostream& os) {
    os << "G(V) for n=" << report["n"].get<int>() << ", q=" << report["q"].get<int>() << ": "
       << report["graph"]["vertex_count"].get<std::uint64_t>() << " vertices, "
       << report["graph"]["edge_count"].get<std::uint64_t>() << " edges, "
       << (report["graph"]["connected"].get<bool>() ? "connected" : "disconnected") << "\n";
    for (const auto& row : report["invariants"]) {
        os << "  " << row["name"].get<std::string>() << ": ";
        const auto& pred = row["predicted"];
        if (pred.is_null())
            os << "predicted -";
        else if (pred.contains("value"))
            os << "predicted " << pred["value"].get<std::string>();
        else
            os << "predicted [" << pred["lo"].get<std::string>() << ", " << pred["hi"].get<std::string>() << "]";
        const auto& ev = row["evidence"];
        os << ", established [" << ev["lo"].get<std::string>() << ", " << ev["hi"].get<std::string>() << "]";
        os << " -> " << row["verdict"].get<std::string>();
        const auto note = row["note"].get<std::string>();
        if (!note.empty()) os << " (" << note << ")";
        os << "\n";
    }
    os << "verdict: " << report["verdict"].get<std::string>() << "\n";
}

// One census row per (even n, q): the predicted window and the best omega
// bounds the solver plus constructions established within the budget.
inline nlohmann::json run_census(int n_max, const std::vector<int>& qs, const VerifySettings& s,
                                 int field_cap = kDefaultFieldCap) {
    using namespace report_detail;
    nlohmann::json out = nlohmann::json::array();
    for (int n = 4; n <= n_max; n += 2) {
        for (int q : qs) {
            nlohmann::json row{{"n", n}, {"q", q}};
            try {
                const FieldSpec F = field_from_order(q, field_cap);
                const PredictedInvariants P = predicted_invariants(n, q);
                row["predicted_lo"] = P.omega_even_lo->str();
                row["predicted_hi"] = P.omega_even_hi->str();
                IntersectionGraph G = build_graph(n, F, BuildOptions{s.max_vertices, s.threads});
                const Certificate lower = even_clique_lower(G);
                const MatchingColoring upper = even_coloring_upper(G);
                const SolveResult sr = max_clique(G.g, s.budget);
                Evidence e{BigCount(sr.lo), BigCount(sr.hi)};
                if (BigCount(lower.value) > e.lo) e.lo = lower.value;
                if (BigCount(upper.color_count) < e.hi) e.hi = upper.color_count;
                row["omega_lo"] = e.lo.str();
                row["omega_hi"] = e.hi.str();
                row["exact"] = e.pinned();
                row["status"] = to_string(sr.status);
                row["nodes"] = sr.nodes;
                row["seconds"] = sr.seconds;
            } catch (const ResourceCapError& ex) {
                row["skipped"] = ex.what();
            }
            out.push_back(std::move(row));
        }
    }
    return out;
}

} // namespace qig
