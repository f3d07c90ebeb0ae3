#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qig/bitset.hpp"
#include "qig/counting.hpp"
#include "qig/linalg.hpp"

namespace qig {

// Plain dense graph: symmetric, irreflexive bitset adjacency. The solvers
// operate on this type so they can also run on test graphs that are not
// subspace intersection graphs.
struct BitGraph {
    std::vector<Bitset> adj;

    BitGraph() = default;
    explicit BitGraph(std::size_t n) : adj(n, Bitset(n)) {}

    std::size_t nv() const { return adj.size(); }
    bool adjacent(std::size_t u, std::size_t w) const { return adj[u].test(w); }
    void add_edge(std::size_t u, std::size_t w) {
        if (u == w) throw std::invalid_argument("add_edge: self-loop");
        adj[u].set(w);
        adj[w].set(u);
    }
    std::size_t degree(std::size_t v) const { return adj[v].count(); }
    std::uint64_t edge_count() const {
        std::uint64_t d = 0;
        for (const auto& row : adj) d += row.count();
        return d / 2;
    }
    std::size_t max_degree() const {
        std::size_t m = 0;
        for (const auto& row : adj) m = std::max(m, row.count());
        return m;
    }
    std::size_t min_degree() const {
        std::size_t m = nv() ? adj[0].count() : 0;
        for (const auto& row : adj) m = std::min(m, row.count());
        return m;
    }
    BitGraph complement() const {
        BitGraph c(nv());
        for (std::size_t v = 0; v < nv(); ++v) {
            c.adj[v] = adj[v];
            c.adj[v].flip();
            c.adj[v].reset(v);
        }
        return c;
    }
};

// Breadth-first reachability from vertex 0.
inline bool is_connected(const BitGraph& g) {
    if (g.nv() == 0) throw std::invalid_argument("is_connected: empty graph");
    Bitset seen(g.nv());
    std::vector<std::uint32_t> queue{0};
    seen.set(0);
    while (!queue.empty()) {
        const std::uint32_t v = queue.back();
        queue.pop_back();
        Bitset fresh = g.adj[v];
        fresh.and_not(seen);
        fresh.for_each_set([&](std::size_t w) {
            seen.set(w);
            queue.push_back(std::uint32_t(w));
        });
    }
    return seen.count() == g.nv();
}

struct GraphStats {
    std::uint64_t vertex_count = 0;
    std::uint64_t edge_count = 0;
    std::size_t max_degree = 0;
    std::size_t min_degree = 0;
    bool connected = false;
};

inline GraphStats compute_stats(const BitGraph& g) {
    return GraphStats{g.nv(), g.edge_count(), g.max_degree(), g.min_degree(), is_connected(g)};
}

struct BuildOptions {
    std::uint64_t max_vertices = 5000;
    unsigned threads = 1;
};

// G(V) for V = GF(q)^n: one vertex per proper nontrivial subspace, ordered by
// (dim, rank_index); vertices u != w adjacent iff dim(u ∩ w) >= 1.
struct IntersectionGraph {
    int n = 0;
    FieldSpec field;
    std::vector<Subspace> vertices;
    std::vector<std::uint32_t> dim_offset; // size n+1; dim_offset[d] = first id of dim d, dim_offset[n] = nv
    BitGraph g;
    std::unordered_map<Subspace, std::uint32_t, SubspaceHash> index;

    std::size_t nv() const { return vertices.size(); }
    int dim_of(std::size_t v) const { return vertices[v].dim; }
    std::uint64_t rank_index_of(std::size_t v) const { return v - dim_offset[vertices[v].dim]; }

    std::uint32_t id_of(const Subspace& s) const {
        auto it = index.find(s);
        if (it == index.end()) throw std::invalid_argument("id_of: subspace is not a vertex");
        return it->second;
    }
    // ids of the dimension class A_t
    std::vector<std::uint32_t> dim_class(int t) const {
        if (t < 1 || t > n - 1) throw std::invalid_argument("dim_class: t out of range");
        std::vector<std::uint32_t> ids;
        for (std::uint32_t v = dim_offset[t]; v < dim_offset[t + 1]; ++v) ids.push_back(v);
        return ids;
    }
    std::string label(std::size_t v) const {
        return "d" + std::to_string(dim_of(v)) + "#" + std::to_string(rank_index_of(v));
    }
};

namespace graph_detail {

inline void fill_rows(IntersectionGraph& G, std::size_t lo, std::size_t hi) {
    const std::size_t V = G.nv();
    const int n = G.n;
    std::vector<FieldElement> scratch;
    for (std::size_t v = lo; v < hi; ++v) {
        const Subspace& sv = G.vertices[v];
        for (std::size_t w = v + 1; w < V; ++w) {
            const Subspace& sw = G.vertices[w];
            bool adj;
            if (sv.dim + sw.dim > n) {
                // forced by the dimension formula; cross-checked by verify_adjacency
                adj = true;
            } else {
                scratch.clear();
                scratch.insert(scratch.end(), sv.basis.begin(), sv.basis.end());
                scratch.insert(scratch.end(), sw.basis.begin(), sw.basis.end());
                const int rank = rref_in_place(scratch, sv.dim + sw.dim, n, G.field);
                adj = sv.dim + sw.dim - rank >= 1;
            }
            if (adj) G.g.adj[v].set(w);
        }
    }
}

} // namespace graph_detail

inline IntersectionGraph build_graph(int n, const FieldSpec& F, const BuildOptions& opt = {}) {
    if (n < 2) throw std::invalid_argument("build_graph: n must be >= 2");

    BigCount needed = 0;
    for (int t = 1; t <= n - 1; ++t) needed += gaussian_binomial(n, t, F.q);
    if (needed > opt.max_vertices)
        throw ResourceCapError("graph would need " + needed.str() + " vertices; cap is " +
                                   std::to_string(opt.max_vertices),
                               needed.str(), std::to_string(opt.max_vertices));

    IntersectionGraph G;
    G.n = n;
    G.field = F;
    G.dim_offset.assign(std::size_t(n) + 1, 0);
    for (int t = 1; t <= n - 1; ++t) {
        G.dim_offset[t] = std::uint32_t(G.vertices.size());
        auto cls = enumerate_subspaces(n, t, F);
        for (auto& s : cls) G.vertices.push_back(std::move(s));
    }
    G.dim_offset[n] = std::uint32_t(G.vertices.size());

    const std::size_t V = G.vertices.size();
    G.index.reserve(V);
    for (std::size_t v = 0; v < V; ++v) G.index.emplace(G.vertices[v], std::uint32_t(v));

    G.g = BitGraph(V);
    const unsigned nthreads = std::max(1u, opt.threads);
    if (nthreads == 1 || V < 256) {
        graph_detail::fill_rows(G, 0, V);
    } else {
        // Workers own disjoint row ranges of the upper triangle; the mirror
        // pass below restores symmetry single-threaded.
        std::vector<std::thread> pool;
        const std::size_t chunk = (V + nthreads - 1) / nthreads;
        for (unsigned i = 0; i < nthreads; ++i) {
            const std::size_t lo = std::min(V, std::size_t(i) * chunk);
            const std::size_t hi = std::min(V, lo + chunk);
            if (lo < hi) pool.emplace_back([&G, lo, hi] { graph_detail::fill_rows(G, lo, hi); });
        }
        for (auto& t : pool) t.join();
    }
    for (std::size_t v = 0; v < V; ++v)
        G.g.adj[v].for_each_set([&](std::size_t w) {
            if (w > v) G.g.adj[w].set(v);
        });
    return G;
}

// Recomputes every pair from scratch via the rank-based intersection
// dimension and checks symmetry and irreflexivity. Exercised by the tests to
// validate the dim-sum shortcut used during construction.
inline bool verify_adjacency(const IntersectionGraph& G) {
    const std::size_t V = G.nv();
    for (std::size_t v = 0; v < V; ++v) {
        if (G.g.adj[v].test(v)) return false;
        for (std::size_t w = v + 1; w < V; ++w) {
            const bool expect = intersection_dim(G.vertices[v], G.vertices[w], G.field) >= 1;
            if (G.g.adj[v].test(w) != expect) return false;
            if (G.g.adj[w].test(v) != expect) return false;
        }
    }
    return true;
}

struct InducedSubgraph {
    BitGraph g;
    std::vector<std::uint32_t> to_parent; // local id -> parent id
};

inline InducedSubgraph induce(const BitGraph& g, const std::vector<std::uint32_t>& verts) {
    InducedSubgraph out;
    out.to_parent = verts;
    out.g = BitGraph(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) out.g.add_edge(i, j);
    return out;
}

// For even n: G1 = G[A_{n/2}], G2 = G minus A_{n/2}.
inline std::pair<InducedSubgraph, InducedSubgraph> induced_middle(const IntersectionGraph& G) {
    if (G.n % 2 != 0) throw std::invalid_argument("induced_middle: n must be even");
    const int half = G.n / 2;
    std::vector<std::uint32_t> mid = G.dim_class(half);
    std::vector<std::uint32_t> rest;
    for (std::uint32_t v = 0; v < G.nv(); ++v)
        if (G.dim_of(v) != half) rest.push_back(v);
    return {induce(G.g, mid), induce(G.g, rest)};
}

// The bipartite graph H̄_t on A_t vs A_{n-t} joining zero-intersection pairs;
// q^{t(n-t)}-regular on both sides, which is verified at construction.
struct BipartiteDisjointGraph {
    int t = 0;
    std::vector<std::uint32_t> left;  // ids in A_t
    std::vector<std::uint32_t> right; // ids in A_{n-t}
    std::vector<Bitset> adj;          // per-left bitset over right positions
    std::uint64_t regular_degree = 0;
};

inline BipartiteDisjointGraph disjointness_bipartite(const IntersectionGraph& G, int t) {
    if (t < 1 || 2 * t >= G.n)
        throw std::invalid_argument("disjointness_bipartite: t must satisfy 1 <= t < n/2");
    BipartiteDisjointGraph B;
    B.t = t;
    B.left = G.dim_class(t);
    B.right = G.dim_class(G.n - t);
    const BigCount expected = big_pow(G.field.q, std::int64_t(t) * (G.n - t));
    if (expected > B.right.size())
        throw ConsistencyError("disjointness_bipartite: expected degree exceeds side size");
    B.regular_degree = std::uint64_t(expected);

    B.adj.assign(B.left.size(), Bitset(B.right.size()));
    std::vector<std::size_t> right_deg(B.right.size(), 0);
    for (std::size_t i = 0; i < B.left.size(); ++i) {
        for (std::size_t j = 0; j < B.right.size(); ++j) {
            if (!G.g.adjacent(B.left[i], B.right[j])) {
                B.adj[i].set(j);
                ++right_deg[j];
            }
        }
        if (B.adj[i].count() != B.regular_degree)
            throw ConsistencyError("disjointness_bipartite: left side is not q^{t(n-t)}-regular");
    }
    for (std::size_t j = 0; j < B.right.size(); ++j)
        if (right_deg[j] != B.regular_degree)
            throw ConsistencyError("disjointness_bipartite: right side is not q^{t(n-t)}-regular");
    return B;
}

} // namespace qig
