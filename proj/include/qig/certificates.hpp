#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qig/graph.hpp"

namespace qig {

enum class CertKind { clique, coloring, dominating_set, independent_set, matching };

inline const char* to_string(CertKind k) {
    switch (k) {
        case CertKind::clique: return "clique";
        case CertKind::coloring: return "coloring";
        case CertKind::dominating_set: return "dominating-set";
        case CertKind::independent_set: return "independent-set";
        case CertKind::matching: return "matching";
    }
    return "?";
}

// A polynomial-time checkable witness. `members` for vertex-set kinds,
// `colors` (one entry per vertex) for colorings, `edges` for matchings.
// `value` is the size or the color count.
struct Certificate {
    CertKind kind = CertKind::clique;
    std::vector<std::uint32_t> members;
    std::vector<std::uint32_t> colors;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::uint64_t value = 0;
};

// Independent verifier: nothing here is shared with the solvers or the
// constructions; it only reads the adjacency bitsets.
inline bool verify_certificate(const BitGraph& g, const Certificate& c, std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    auto distinct = [&](const std::vector<std::uint32_t>& xs) {
        std::set<std::uint32_t> s(xs.begin(), xs.end());
        return s.size() == xs.size();
    };
    switch (c.kind) {
        case CertKind::clique: {
            if (!distinct(c.members)) return fail("clique members not distinct");
            if (c.value != c.members.size()) return fail("clique value != member count");
            for (std::size_t i = 0; i < c.members.size(); ++i)
                for (std::size_t j = i + 1; j < c.members.size(); ++j)
                    if (!g.adjacent(c.members[i], c.members[j]))
                        return fail("clique pair " + std::to_string(c.members[i]) + "," +
                                    std::to_string(c.members[j]) + " not adjacent");
            return true;
        }
        case CertKind::independent_set: {
            if (!distinct(c.members)) return fail("independent set members not distinct");
            if (c.value != c.members.size()) return fail("independent set value != member count");
            for (std::size_t i = 0; i < c.members.size(); ++i)
                for (std::size_t j = i + 1; j < c.members.size(); ++j)
                    if (g.adjacent(c.members[i], c.members[j]))
                        return fail("independent pair " + std::to_string(c.members[i]) + "," +
                                    std::to_string(c.members[j]) + " adjacent");
            return true;
        }
        case CertKind::dominating_set: {
            if (!distinct(c.members)) return fail("dominating set members not distinct");
            if (c.value != c.members.size()) return fail("dominating set value != member count");
            Bitset covered(g.nv());
            for (std::uint32_t m : c.members) {
                covered.set(m);
                covered |= g.adj[m];
            }
            if (covered.count() != g.nv()) return fail("dominating set leaves vertices uncovered");
            return true;
        }
        case CertKind::coloring: {
            if (c.colors.size() != g.nv()) return fail("coloring does not cover every vertex");
            for (std::size_t v = 0; v < g.nv(); ++v) {
                bool bad = false;
                g.adj[v].for_each_set([&](std::size_t w) {
                    if (w > v && c.colors[v] == c.colors[w]) bad = true;
                });
                if (bad) return fail("coloring not proper at vertex " + std::to_string(v));
            }
            const std::set<std::uint32_t> used(c.colors.begin(), c.colors.end());
            if (c.value != used.size()) return fail("coloring value != distinct color count");
            return true;
        }
        case CertKind::matching:
            return fail("matching certificates verify against a bipartite graph");
    }
    return fail("unknown certificate kind");
}

// Matching verification against the bipartite disjointness graph; edges carry
// global vertex ids.
inline bool verify_matching(const BipartiteDisjointGraph& b, const Certificate& c, std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (c.kind != CertKind::matching) return fail("certificate is not a matching");
    if (c.value != c.edges.size()) return fail("matching value != edge count");
    std::set<std::uint32_t> used;
    for (auto [u, w] : c.edges) {
        std::size_t i = 0, j = 0;
        while (i < b.left.size() && b.left[i] != u) ++i;
        while (j < b.right.size() && b.right[j] != w) ++j;
        if (i == b.left.size() || j == b.right.size()) return fail("matching edge endpoint outside the sides");
        if (!b.adj[i].test(j)) return fail("matching edge is not an edge of the bipartite graph");
        if (!used.insert(u).second || !used.insert(w).second) return fail("matching edges share a vertex");
    }
    return true;
}

inline nlohmann::json certificate_to_json(const Certificate& c, bool verified) {
    nlohmann::json j;
    j["kind"] = to_string(c.kind);
    j["value"] = c.value;
    j["verified"] = verified;
    if (c.kind == CertKind::coloring) {
        j["members"] = c.colors;
    } else if (c.kind == CertKind::matching) {
        auto es = nlohmann::json::array();
        for (auto [u, w] : c.edges) es.push_back(nlohmann::json::array({u, w}));
        j["members"] = std::move(es);
    } else {
        j["members"] = c.members;
    }
    return j;
}

} // namespace qig
