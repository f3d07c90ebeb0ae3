#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qig/counting.hpp"
#include "qig/graph.hpp"
#include "qig/solvers.hpp"

namespace qig {

// A coloring assembled from perfect matchings on the disjointness graphs:
// each small-dimension subspace is its own color, each large-dimension
// subspace borrows the color of its matched disjoint partner. For even n the
// middle layer gets a fresh palette from a Brooks (or fallback DSATUR)
// coloring of G1.
struct MatchingColoring {
    std::vector<int> matching_ts;
    std::vector<Certificate> matchings;
    Certificate coloring;
    std::uint64_t color_count = 0;
    bool brooks_fallback_used = false;
    std::string note;
};

namespace construct_detail {

inline void require_verified(const BitGraph& g, const Certificate& c, const std::string& what) {
    std::string why;
    if (!verify_certificate(g, c, &why)) throw ConsistencyError(what + " failed verification: " + why);
}

inline BigCount sum_brackets(int n, int q, int from, int to) {
    BigCount s = 0;
    for (int i = from; i <= to; ++i) s += gaussian_binomial(n, i, q);
    return s;
}

// Perfect matchings on H̄_t for t = 1..t_max, written into `colors` as
// color[large] = id of the matched small partner.
inline void apply_matchings(const IntersectionGraph& G, int t_max, std::vector<std::uint32_t>& colors,
                            MatchingColoring& out) {
    for (int t = 1; t <= t_max; ++t) {
        BipartiteDisjointGraph B = disjointness_bipartite(G, t);
        Certificate M = hopcroft_karp(B);
        std::string why;
        if (!verify_matching(B, M, &why)) throw ConsistencyError("matching on disjointness graph invalid: " + why);
        if (M.value != B.left.size()) throw ConsistencyError("matching on disjointness graph is not perfect");
        for (auto [small, large] : M.edges) colors[large] = small;
        out.matching_ts.push_back(t);
        out.matchings.push_back(std::move(M));
    }
}

} // namespace construct_detail

// The clique of all subspaces of dimension > n/2 (odd n): any two of them
// intersect because their dimensions sum past n.
inline Certificate half_dim_clique(const IntersectionGraph& G) {
    if (G.n % 2 == 0) throw std::invalid_argument("half_dim_clique: n must be odd");
    Certificate c;
    c.kind = CertKind::clique;
    for (std::uint32_t v = 0; v < G.nv(); ++v)
        if (2 * G.dim_of(v) > G.n) c.members.push_back(v);
    c.value = c.members.size();
    construct_detail::require_verified(G.g, c, "half-dimension clique");
    if (BigCount(c.value) != construct_detail::sum_brackets(G.n, G.field.q, 1, G.n / 2))
        throw ConsistencyError("half-dimension clique has unexpected size");
    return c;
}

// Proper coloring with sum_{i=1..floor(n/2)} [n i]_q colors for odd n.
inline MatchingColoring matching_coloring_odd(const IntersectionGraph& G) {
    if (G.n % 2 == 0 || G.n < 3) throw std::invalid_argument("matching_coloring_odd: n must be odd and >= 3");
    MatchingColoring out;
    std::vector<std::uint32_t> colors(G.nv());
    for (std::uint32_t v = 0; v < G.nv(); ++v)
        if (2 * G.dim_of(v) < G.n) colors[v] = v; // own color
    construct_detail::apply_matchings(G, (G.n - 1) / 2, colors, out);

    out.coloring.kind = CertKind::coloring;
    out.coloring.colors = std::move(colors);
    std::set<std::uint32_t> distinct(out.coloring.colors.begin(), out.coloring.colors.end());
    out.coloring.value = distinct.size();
    out.color_count = out.coloring.value;
    construct_detail::require_verified(G.g, out.coloring, "matching coloring (odd n)");
    if (BigCount(out.color_count) != construct_detail::sum_brackets(G.n, G.field.q, 1, G.n / 2))
        throw ConsistencyError("matching coloring (odd n) has unexpected color count");
    return out;
}

// Even n: all subspaces of dimension > n/2 plus the middle-dimension
// subspaces through a fixed line.
inline Certificate even_clique_lower(const IntersectionGraph& G, const Subspace& line) {
    if (G.n % 2 != 0 || G.n < 4) throw std::invalid_argument("even_clique_lower: n must be even and >= 4");
    if (line.dim != 1) throw std::invalid_argument("even_clique_lower: the fixed subspace must have dimension 1");
    Certificate c;
    c.kind = CertKind::clique;
    for (std::uint32_t v = 0; v < G.nv(); ++v) {
        const int d = G.dim_of(v);
        if (2 * d > G.n)
            c.members.push_back(v);
        else if (2 * d == G.n && contains_subspace(G.vertices[v], line, G.field))
            c.members.push_back(v);
    }
    c.value = c.members.size();
    construct_detail::require_verified(G.g, c, "even-n clique");
    const BigCount expect = construct_detail::sum_brackets(G.n, G.field.q, 1, G.n / 2 - 1) +
                            gaussian_binomial(G.n - 1, (G.n - 2) / 2, G.field.q);
    if (BigCount(c.value) != expect) throw ConsistencyError("even-n clique has unexpected size");
    return c;
}

inline Certificate even_clique_lower(const IntersectionGraph& G) {
    if (G.n % 2 != 0 || G.n < 4) throw std::invalid_argument("even_clique_lower: n must be even and >= 4");
    return even_clique_lower(G, G.vertices[G.dim_offset[1]]);
}

// Even n: color G2 by the matching scheme and G1 with a fresh palette via
// Brooks; a Brooks precondition failure is reported in `note` and downgraded
// to DSATUR rather than treated as fatal.
inline MatchingColoring even_coloring_upper(const IntersectionGraph& G) {
    if (G.n % 2 != 0 || G.n < 4) throw std::invalid_argument("even_coloring_upper: n must be even and >= 4");
    const int q = G.field.q;
    MatchingColoring out;
    std::vector<std::uint32_t> colors(G.nv());
    for (std::uint32_t v = 0; v < G.nv(); ++v)
        if (2 * G.dim_of(v) < G.n) colors[v] = v;
    construct_detail::apply_matchings(G, G.n / 2 - 1, colors, out);

    // small-dim ids are exactly 0..K-1, so K..K+chi(G1)-1 is a fresh palette
    const std::uint32_t fresh_base = G.dim_offset[G.n / 2];
    auto [g1, g2] = induced_middle(G);
    Certificate mid;
    try {
        mid = brooks_coloring(g1.g);
    } catch (const std::invalid_argument& e) {
        mid = dsatur_coloring(g1.g);
        out.brooks_fallback_used = true;
        out.note = std::string("Brooks preconditions failed on G1 (") + e.what() + "); DSATUR fallback used";
    }
    for (std::size_t i = 0; i < g1.to_parent.size(); ++i)
        colors[g1.to_parent[i]] = fresh_base + mid.colors[i];

    out.coloring.kind = CertKind::coloring;
    out.coloring.colors = std::move(colors);
    std::set<std::uint32_t> distinct(out.coloring.colors.begin(), out.coloring.colors.end());
    out.coloring.value = distinct.size();
    out.color_count = out.coloring.value;
    construct_detail::require_verified(G.g, out.coloring, "combined coloring (even n)");

    const BigCount mid_count = gaussian_binomial(G.n, G.n / 2, q);
    const BigCount g1_degree = mid_count - big_pow(q, std::int64_t(G.n) * G.n / 4) - 1;
    if (BigCount(g1.g.max_degree()) != g1_degree)
        throw ConsistencyError("G1 max degree disagrees with the closed form");
    if (!out.brooks_fallback_used && BigCount(mid.value) > g1_degree)
        throw ConsistencyError("Brooks coloring of G1 exceeded its degree bound");
    return out;
}

// The q+1 hyperplanes through a fixed (n-2)-dimensional subspace. Their union
// is all of V, so every vertex meets one of them; this is checked against
// every vector of V and then against the graph.
inline Certificate hyperplane_dominating_set(const IntersectionGraph& G, const Subspace& w) {
    if (G.n < 3) throw std::invalid_argument("hyperplane_dominating_set: n must be >= 3");
    if (w.dim != G.n - 2)
        throw std::invalid_argument("hyperplane_dominating_set: the fixed subspace must have dimension n-2");
    const int q = G.field.q;
    Certificate c;
    c.kind = CertKind::dominating_set;
    for (std::uint32_t v = G.dim_offset[G.n - 1]; v < G.dim_offset[G.n]; ++v)
        if (contains_subspace(G.vertices[v], w, G.field)) c.members.push_back(v);
    if (int(c.members.size()) != q + 1)
        throw ConsistencyError("expected q+1 hyperplanes through the fixed subspace, found " +
                               std::to_string(c.members.size()));
    c.value = c.members.size();

    // union-cover check over every vector of V
    std::uint64_t total = 1;
    for (int i = 0; i < G.n; ++i) total *= std::uint64_t(q);
    VectorQ x(G.n);
    for (std::uint64_t m = 1; m < total; ++m) {
        std::uint64_t t = m;
        for (int i = 0; i < G.n; ++i) {
            x[i] = FieldElement(t % q);
            t /= q;
        }
        bool covered = false;
        for (std::uint32_t h : c.members)
            if (contains(G.vertices[h], x, G.field)) {
                covered = true;
                break;
            }
        if (!covered) throw ConsistencyError("hyperplane union does not cover V");
    }
    construct_detail::require_verified(G.g, c, "hyperplane dominating set");
    return c;
}

inline Certificate hyperplane_dominating_set(const IntersectionGraph& G) {
    if (G.n < 3) throw std::invalid_argument("hyperplane_dominating_set: n must be >= 3");
    return hyperplane_dominating_set(G, G.vertices[G.dim_offset[G.n - 2]]);
}

// All one-dimensional subspaces: distinct lines meet only at 0.
inline Certificate lines_independent_set(const IntersectionGraph& G) {
    Certificate c;
    c.kind = CertKind::independent_set;
    c.members = G.dim_class(1);
    c.value = c.members.size();
    construct_detail::require_verified(G.g, c, "lines independent set");
    const BigCount expect = (big_pow(G.field.q, G.n) - 1) / (G.field.q - 1);
    if (BigCount(c.value) != expect) throw ConsistencyError("line count disagrees with (q^n-1)/(q-1)");
    return c;
}

} // namespace qig
