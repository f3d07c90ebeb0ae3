#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "qig/certificates.hpp"
#include "qig/graph.hpp"

namespace qig {

struct Budget {
    double seconds = 60.0;
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
};

// proven: search exhausted. timeout: wall-clock budget hit. bounded: node-cap
// budget hit. Non-proven results still carry a valid certificate and bounds.
enum class SolveStatus { proven, bounded, timeout };

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::proven: return "proven";
        case SolveStatus::bounded: return "bounded";
        case SolveStatus::timeout: return "timeout";
    }
    return "?";
}

struct SolveResult {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    Certificate cert;
    SolveStatus status = SolveStatus::proven;
    double seconds = 0.0;
    std::uint64_t nodes = 0;
};

namespace solve_detail {

using Clock = std::chrono::steady_clock;

// Node counting is exact and deterministic; the wall clock is consulted only
// at node-count checkpoints so single-threaded runs are reproducible.
struct BudgetGuard {
    Clock::time_point t0 = Clock::now();
    double limit_s;
    std::uint64_t max_nodes;
    std::uint64_t nodes = 0;
    bool hit_time = false;
    bool hit_nodes = false;

    explicit BudgetGuard(const Budget& b) : limit_s(b.seconds), max_nodes(b.max_nodes) {}

    bool tick() {
        if (hit_time || hit_nodes) return false;
        ++nodes;
        if (nodes > max_nodes) {
            hit_nodes = true;
            return false;
        }
        if ((nodes & 1023) == 0 && elapsed() > limit_s) {
            hit_time = true;
            return false;
        }
        return true;
    }
    double elapsed() const { return std::chrono::duration<double>(Clock::now() - t0).count(); }
    SolveStatus abort_status() const { return hit_time ? SolveStatus::timeout : SolveStatus::bounded; }
};

// Greedy sequential coloring of the vertices in `P`, classes filled in id
// order. The class count is a valid clique-number upper bound.
inline std::size_t greedy_color_count(const BitGraph& g, const Bitset& P) {
    Bitset uncolored = P;
    Bitset cls(P.size());
    std::size_t colors = 0;
    while (uncolored.any()) {
        ++colors;
        cls = uncolored;
        while (cls.any()) {
            const std::size_t v = cls.find_first();
            uncolored.reset(v);
            cls.reset(v);
            cls.and_not(g.adj[v]);
        }
    }
    return colors;
}

inline std::vector<std::uint32_t> greedy_clique(const BitGraph& g) {
    std::vector<std::uint32_t> out;
    Bitset P(g.nv());
    P.set_all();
    while (P.any()) {
        const std::size_t v = P.find_first();
        out.push_back(std::uint32_t(v));
        P.reset(v);
        P &= g.adj[v];
    }
    return out;
}

// Repeatedly strip the minimum-degree vertex (lowest id on ties) and reverse:
// high-coreness vertices come first. Branching in this order tightens the
// greedy coloring bound enormously on the dense intersection graphs.
inline std::vector<std::uint32_t> degeneracy_order(const BitGraph& g) {
    const std::size_t nv = g.nv();
    std::vector<std::size_t> deg(nv);
    for (std::size_t v = 0; v < nv; ++v) deg[v] = g.degree(v);
    Bitset alive(nv);
    alive.set_all();
    std::vector<std::uint32_t> order;
    order.reserve(nv);
    for (std::size_t step = 0; step < nv; ++step) {
        std::size_t pick = Bitset::npos;
        std::size_t best = SIZE_MAX;
        for (std::size_t v = alive.find_first(); v != Bitset::npos; v = alive.find_next(v))
            if (deg[v] < best) {
                best = deg[v];
                pick = v;
            }
        order.push_back(std::uint32_t(pick));
        alive.reset(pick);
        g.adj[pick].for_each_set([&](std::size_t w) {
            if (alive.test(w)) --deg[w];
        });
    }
    std::reverse(order.begin(), order.end());
    return order;
}

// Relabel so that order[i] becomes vertex i.
inline BitGraph permute_graph(const BitGraph& g, const std::vector<std::uint32_t>& order) {
    std::vector<std::uint32_t> pos(g.nv());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = std::uint32_t(i);
    BitGraph h(g.nv());
    for (std::size_t v = 0; v < g.nv(); ++v)
        g.adj[v].for_each_set([&](std::size_t w) {
            if (w > v) h.add_edge(pos[v], pos[w]);
        });
    return h;
}

// Tomita-style maximum clique search: branch on candidates in reverse greedy
// coloring order, prune with |R| + color(v) <= |best|. All per-depth state is
// preallocated; the search itself does not allocate.
struct CliqueSearcher {
    const BitGraph& g;
    BudgetGuard bud;
    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> cur;
    bool aborted = false;
    std::vector<Bitset> cand;
    std::vector<Bitset> uncol;
    std::vector<Bitset> cls;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> order; // (vertex, color)

    CliqueSearcher(const BitGraph& graph, const Budget& b, std::size_t depth_cap)
        : g(graph), bud(b), cand(depth_cap, Bitset(graph.nv())), uncol(depth_cap, Bitset(graph.nv())),
          cls(depth_cap, Bitset(graph.nv())), order(depth_cap) {}

    void expand(std::size_t depth) {
        if (!bud.tick()) {
            aborted = true;
            return;
        }
        Bitset& P = cand[depth];
        if (P.none()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        auto& ord = order[depth];
        ord.clear();
        Bitset& uncolored = uncol[depth];
        Bitset& cl = cls[depth];
        uncolored = P;
        std::uint32_t color = 0;
        while (uncolored.any()) {
            ++color;
            cl = uncolored;
            while (cl.any()) {
                const std::size_t v = cl.find_first();
                ord.emplace_back(std::uint32_t(v), color);
                uncolored.reset(v);
                cl.reset(v);
                cl.and_not(g.adj[v]);
            }
        }
        for (auto it = ord.rbegin(); it != ord.rend(); ++it) {
            const auto [v, c] = *it;
            if (cur.size() + c <= best.size()) return; // colors only shrink from here on
            Bitset& child = cand[depth + 1];
            child = P;
            child &= g.adj[v];
            cur.push_back(v);
            expand(depth + 1);
            cur.pop_back();
            if (aborted) return;
            P.reset(v);
        }
    }
};

} // namespace solve_detail

inline SolveResult max_clique(const BitGraph& g, const Budget& budget = {}) {
    using namespace solve_detail;
    const auto t0 = Clock::now();
    SolveResult r;
    r.cert.kind = CertKind::clique;
    if (g.nv() == 0) return r;

    const std::vector<std::uint32_t> order = degeneracy_order(g);
    const BitGraph h = permute_graph(g, order);

    Bitset all(h.nv());
    all.set_all();
    const std::size_t root_ub = greedy_color_count(h, all);

    CliqueSearcher s(h, budget, root_ub + 3);
    s.best = greedy_clique(h);
    s.cand[0] = all;
    s.expand(0);

    r.cert.members.reserve(s.best.size());
    for (std::uint32_t v : s.best) r.cert.members.push_back(order[v]);
    std::sort(r.cert.members.begin(), r.cert.members.end());
    r.cert.value = s.best.size();
    r.lo = s.best.size();
    r.hi = s.aborted ? std::max<std::uint64_t>(r.lo, root_ub) : r.lo;
    r.status = s.aborted ? s.bud.abort_status() : SolveStatus::proven;
    r.nodes = s.bud.nodes;
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

// DSATUR: color the vertex with the most distinctly colored neighbors first;
// ties by higher degree, then by lowest id.
inline Certificate dsatur_coloring(const BitGraph& g) {
    const std::size_t nv = g.nv();
    Certificate c;
    c.kind = CertKind::coloring;
    if (nv == 0) return c;
    std::vector<int> color(nv, -1);
    std::vector<Bitset> neighbor_colors(nv, Bitset(nv));
    std::vector<std::size_t> degree(nv);
    for (std::size_t v = 0; v < nv; ++v) degree[v] = g.degree(v);

    std::uint32_t max_color = 0;
    for (std::size_t step = 0; step < nv; ++step) {
        std::size_t pick = Bitset::npos;
        std::size_t best_sat = 0, best_deg = 0;
        for (std::size_t v = 0; v < nv; ++v) {
            if (color[v] >= 0) continue;
            const std::size_t sat = neighbor_colors[v].count();
            if (pick == Bitset::npos || sat > best_sat || (sat == best_sat && degree[v] > best_deg)) {
                pick = v;
                best_sat = sat;
                best_deg = degree[v];
            }
        }
        std::uint32_t col = 0;
        while (neighbor_colors[pick].test(col)) ++col;
        color[pick] = int(col);
        max_color = std::max(max_color, col);
        g.adj[pick].for_each_set([&](std::size_t w) { neighbor_colors[w].set(col); });
    }
    c.colors.assign(color.begin(), color.end());
    c.value = max_color + 1;
    return c;
}

namespace solve_detail {

// Exact k-colorability by DSATUR-guided backtracking. A maximum clique is
// pre-colored to break color symmetry. search() returning false with
// aborted == false is a proof of infeasibility.
struct KColorSearcher {
    const BitGraph& g;
    const std::uint32_t k;
    BudgetGuard& bud;
    std::vector<int> color;
    std::vector<Bitset> forbidden; // per vertex, over the k color slots
    std::vector<std::size_t> degree;
    std::vector<std::uint32_t> undo; // neighbors whose forbidden bit each assignment set
    std::size_t colored = 0;
    std::uint32_t used = 0;
    bool aborted = false;

    KColorSearcher(const BitGraph& graph, std::uint32_t kk, BudgetGuard& b)
        : g(graph), k(kk), bud(b), color(graph.nv(), -1), forbidden(graph.nv(), Bitset(kk)),
          degree(graph.nv()) {
        for (std::size_t v = 0; v < g.nv(); ++v) degree[v] = g.degree(v);
    }

    std::size_t assign(std::size_t v, std::uint32_t c) {
        color[v] = int(c);
        ++colored;
        used = std::max(used, c + 1);
        const std::size_t mark = undo.size();
        g.adj[v].for_each_set([&](std::size_t w) {
            if (color[w] < 0 && !forbidden[w].test(c)) {
                forbidden[w].set(c);
                undo.push_back(std::uint32_t(w));
            }
        });
        return mark;
    }
    void unassign(std::size_t v, std::uint32_t c, std::size_t mark, std::uint32_t prev_used) {
        color[v] = -1;
        --colored;
        used = prev_used;
        while (undo.size() > mark) {
            forbidden[undo.back()].reset(c);
            undo.pop_back();
        }
    }

    bool search() {
        if (!bud.tick()) {
            aborted = true;
            return false;
        }
        if (colored == g.nv()) return true;
        std::size_t pick = Bitset::npos;
        std::size_t best_sat = 0, best_deg = 0;
        for (std::size_t v = 0; v < g.nv(); ++v) {
            if (color[v] >= 0) continue;
            const std::size_t sat = forbidden[v].count();
            if (pick == Bitset::npos || sat > best_sat || (sat == best_sat && degree[v] > best_deg)) {
                pick = v;
                best_sat = sat;
                best_deg = degree[v];
            }
        }
        if (best_sat >= k) return false; // no color slot left for this vertex
        const std::uint32_t cmax = std::min(k - 1, used); // at most one fresh color
        const std::uint32_t prev_used = used;
        for (std::uint32_t c = 0; c <= cmax; ++c) {
            if (forbidden[pick].test(c)) continue;
            const std::size_t mark = assign(pick, c);
            if (search()) return true;
            unassign(pick, c, mark, prev_used);
            if (aborted) return false;
        }
        return false;
    }
};

} // namespace solve_detail

// Exact chromatic number: clique lower bound, DSATUR upper bound, then
// descending k-colorability searches until the gap closes.
inline SolveResult chromatic_number(const BitGraph& g, const Budget& budget = {}) {
    using namespace solve_detail;
    const auto t0 = Clock::now();
    SolveResult r;
    if (g.nv() == 0) {
        r.cert.kind = CertKind::coloring;
        return r;
    }

    Certificate ub_cert = dsatur_coloring(g);
    std::uint64_t ub = ub_cert.value;

    Budget clique_budget{budget.seconds / 2,
                         budget.max_nodes == std::numeric_limits<std::uint64_t>::max()
                             ? budget.max_nodes
                             : std::max<std::uint64_t>(1, budget.max_nodes / 2)};
    const SolveResult cl = max_clique(g, clique_budget);
    std::uint64_t lb = std::max<std::uint64_t>(1, cl.lo);

    BudgetGuard bud(budget);
    bud.nodes = cl.nodes; // the clique work counts against this call's budget
    bud.limit_s = std::max(0.0, budget.seconds - cl.seconds);
    bool aborted = false;
    while (lb < ub) {
        const auto k = std::uint32_t(ub - 1); // k >= lb >= |clique|, so the pre-coloring fits
        KColorSearcher ks(g, k, bud);
        std::uint32_t next = 0;
        for (std::uint32_t v : cl.cert.members) ks.assign(v, next++);
        if (ks.search()) {
            ub = k;
            ub_cert.colors.assign(ks.color.begin(), ks.color.end());
            std::uint32_t used = 0;
            for (int c : ks.color) used = std::max(used, std::uint32_t(c) + 1);
            ub_cert.value = used;
        } else if (ks.aborted) {
            aborted = true;
            break;
        } else {
            lb = ub; // k = ub-1 proven infeasible, so chi = ub
        }
    }

    r.cert = ub_cert;
    r.lo = std::min(lb, ub);
    r.hi = ub;
    r.status = aborted ? bud.abort_status() : SolveStatus::proven;
    r.nodes = bud.nodes;
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

namespace solve_detail {

// Any dominating set needs one dominator per member of a family of pairwise
// disjoint closed neighborhoods of still-undominated vertices.
inline std::size_t disjoint_neighborhood_bound(const std::vector<Bitset>& closed, const Bitset& dominated) {
    Bitset undom = dominated;
    undom.flip();
    std::size_t count = 0;
    Bitset blocked(closed.size());
    for (std::size_t v = undom.find_first(); v != Bitset::npos; v = undom.find_next(v)) {
        if (blocked.intersects(closed[v])) continue;
        ++count;
        blocked |= closed[v];
    }
    return count;
}

// Branch on the lowest-id undominated vertex; its closed neighborhood is the
// candidate list.
struct DominationSearcher {
    const std::vector<Bitset>& closed;
    BudgetGuard bud;
    std::vector<std::uint32_t> best;
    std::vector<std::uint32_t> cur;
    bool aborted = false;
    std::vector<Bitset> dom;

    DominationSearcher(const std::vector<Bitset>& cl, const Budget& b, std::size_t depth_cap)
        : closed(cl), bud(b), dom(depth_cap, Bitset(cl.size())) {}

    void search(std::size_t depth) {
        if (!bud.tick()) {
            aborted = true;
            return;
        }
        const std::size_t nv = closed.size();
        if (dom[depth].count() == nv) {
            if (cur.size() < best.size()) best = cur;
            return;
        }
        if (cur.size() + disjoint_neighborhood_bound(closed, dom[depth]) >= best.size()) return;
        std::size_t v = 0;
        while (dom[depth].test(v)) ++v;
        for (std::size_t u = closed[v].find_first(); u != Bitset::npos; u = closed[v].find_next(u)) {
            dom[depth + 1] = dom[depth];
            dom[depth + 1] |= closed[u];
            cur.push_back(std::uint32_t(u));
            search(depth + 1);
            cur.pop_back();
            if (aborted) return;
        }
    }
};

} // namespace solve_detail

inline SolveResult min_dominating_set(const BitGraph& g, const Budget& budget = {}) {
    using namespace solve_detail;
    const auto t0 = Clock::now();
    SolveResult r;
    r.cert.kind = CertKind::dominating_set;
    if (g.nv() == 0) return r;
    const std::size_t nv = g.nv();
    std::vector<Bitset> closed(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        closed[v] = g.adj[v];
        closed[v].set(v);
    }

    // greedy cover for the initial upper bound: max new coverage, tie lowest id
    std::vector<std::uint32_t> greedy;
    {
        Bitset dominated(nv);
        Bitset gain(nv);
        while (dominated.count() < nv) {
            std::size_t pick = 0, best_gain = 0;
            for (std::size_t v = 0; v < nv; ++v) {
                gain = closed[v];
                gain.and_not(dominated);
                const std::size_t gc = gain.count();
                if (gc > best_gain) {
                    best_gain = gc;
                    pick = v;
                }
            }
            greedy.push_back(std::uint32_t(pick));
            dominated |= closed[pick];
        }
    }

    const std::size_t root_lb = disjoint_neighborhood_bound(closed, Bitset(nv));

    DominationSearcher s(closed, budget, greedy.size() + 2);
    s.best = greedy;
    s.search(0);

    r.cert.members = s.best;
    std::sort(r.cert.members.begin(), r.cert.members.end());
    r.cert.value = s.best.size();
    r.hi = s.best.size();
    r.lo = s.aborted ? std::min<std::uint64_t>(root_lb, r.hi) : r.hi;
    r.status = s.aborted ? s.bud.abort_status() : SolveStatus::proven;
    r.nodes = s.bud.nodes;
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

// Maximum clique on the complemented adjacency; the member set is reported
// against the original graph.
inline SolveResult max_independent_set(const BitGraph& g, const Budget& budget = {}) {
    SolveResult r = max_clique(g.complement(), budget);
    r.cert.kind = CertKind::independent_set;
    return r;
}

// Maximum bipartite matching. On a k-regular input with k > 0 and equal sides
// the matching must be perfect; anything else contradicts Hall's theorem and
// aborts the run.
inline Certificate hopcroft_karp(const BipartiteDisjointGraph& b) {
    const std::size_t L = b.left.size();
    const std::size_t R = b.right.size();
    constexpr int kInf = std::numeric_limits<int>::max();
    std::vector<int> pair_l(L, -1), pair_r(R, -1), dist(L, 0);

    auto bfs = [&]() {
        std::vector<std::size_t> queue;
        for (std::size_t i = 0; i < L; ++i) {
            if (pair_l[i] < 0) {
                dist[i] = 0;
                queue.push_back(i);
            } else {
                dist[i] = kInf;
            }
        }
        bool reachable_free = false;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t i = queue[head];
            b.adj[i].for_each_set([&](std::size_t j) {
                if (pair_r[j] < 0) {
                    reachable_free = true;
                } else if (dist[std::size_t(pair_r[j])] == kInf) {
                    dist[std::size_t(pair_r[j])] = dist[i] + 1;
                    queue.push_back(std::size_t(pair_r[j]));
                }
            });
        }
        return reachable_free;
    };
    std::function<bool(std::size_t)> dfs = [&](std::size_t i) {
        for (std::size_t j = b.adj[i].find_first(); j != Bitset::npos; j = b.adj[i].find_next(j)) {
            if (pair_r[j] < 0 || (dist[std::size_t(pair_r[j])] == dist[i] + 1 && dfs(std::size_t(pair_r[j])))) {
                pair_l[i] = int(j);
                pair_r[j] = int(i);
                return true;
            }
        }
        dist[i] = kInf;
        return false;
    };

    std::size_t matched = 0;
    while (bfs())
        for (std::size_t i = 0; i < L; ++i)
            if (pair_l[i] < 0 && dfs(i)) ++matched;

    Certificate c;
    c.kind = CertKind::matching;
    for (std::size_t i = 0; i < L; ++i)
        if (pair_l[i] >= 0) c.edges.emplace_back(b.left[i], b.right[std::size_t(pair_l[i])]);
    c.value = c.edges.size();

    bool regular = L == R && L > 0;
    for (std::size_t i = 0; i < L && regular; ++i)
        if (b.adj[i].count() != b.regular_degree) regular = false;
    if (regular && b.regular_degree > 0 && matched != L)
        throw ConsistencyError("regular bipartite graph without a perfect matching (Hall violated)");
    return c;
}

// The constructive procedure behind the max-degree coloring bound. Assumes a
// connected graph that is neither complete nor an odd cycle; brooks_coloring
// checks those hypotheses and tries DSATUR first.
inline Certificate brooks_constructive(const BitGraph& g) {
    const std::size_t nv = g.nv();
    const std::size_t maxdeg = g.max_degree();
    std::vector<int> color(nv, -1);
    auto bfs_order = [&](std::size_t root, const Bitset& skip) {
        std::vector<std::uint32_t> order;
        Bitset seen = skip;
        seen.set(root);
        order.push_back(std::uint32_t(root));
        for (std::size_t head = 0; head < order.size(); ++head)
            g.adj[order[head]].for_each_set([&](std::size_t w) {
                if (!seen.test(w)) {
                    seen.set(w);
                    order.push_back(std::uint32_t(w));
                }
            });
        return order;
    };
    auto smallest_free = [&](std::size_t v) {
        Bitset taken(maxdeg + 2);
        g.adj[v].for_each_set([&](std::size_t w) {
            if (color[w] >= 0 && std::size_t(color[w]) <= maxdeg) taken.set(std::size_t(color[w]));
        });
        std::uint32_t c = 0;
        while (taken.test(c)) ++c;
        return c;
    };

    std::size_t root = Bitset::npos;
    for (std::size_t v = 0; v < nv; ++v)
        if (g.degree(v) < maxdeg) {
            root = v;
            break;
        }

    if (root != Bitset::npos) {
        // reverse-BFS greedy: every non-root vertex still has its BFS parent
        // uncolored at its turn, and the root has degree < maxdeg
        const auto order = bfs_order(root, Bitset(nv));
        for (auto it = order.rbegin(); it != order.rend(); ++it) color[*it] = int(smallest_free(*it));
    } else {
        // regular case: find x with non-adjacent neighbors u, w whose removal
        // keeps the rest connected; u and w share a color, x is colored last
        std::size_t fx = Bitset::npos, fu = 0, fw = 0;
        for (std::size_t x = 0; x < nv && fx == Bitset::npos; ++x) {
            for (std::size_t u = g.adj[x].find_first(); u != Bitset::npos && fx == Bitset::npos;
                 u = g.adj[x].find_next(u)) {
                for (std::size_t w = g.adj[x].find_next(u); w != Bitset::npos; w = g.adj[x].find_next(w)) {
                    if (g.adjacent(u, w)) continue;
                    Bitset skip(nv);
                    skip.set(u);
                    skip.set(w);
                    if (bfs_order(x, skip).size() == nv - 2) {
                        fx = x;
                        fu = u;
                        fw = w;
                        break;
                    }
                }
            }
        }
        if (fx == Bitset::npos)
            throw ConsistencyError("brooks_coloring: no branching triple in a regular non-complete graph");
        color[fu] = 0;
        color[fw] = 0;
        Bitset skip(nv);
        skip.set(fu);
        skip.set(fw);
        const auto order = bfs_order(fx, skip);
        for (auto it = order.rbegin(); it != order.rend(); ++it) color[*it] = int(smallest_free(*it));
    }

    Certificate c;
    c.kind = CertKind::coloring;
    c.colors.assign(color.begin(), color.end());
    std::uint32_t used = 0;
    for (int x : color) {
        if (x < 0) throw ConsistencyError("brooks_coloring: vertex left uncolored");
        used = std::max(used, std::uint32_t(x) + 1);
    }
    c.value = used;
    std::string why;
    if (!verify_certificate(g, c, &why)) throw ConsistencyError("brooks_coloring produced a bad coloring: " + why);
    if (c.value > maxdeg) throw ConsistencyError("brooks_coloring exceeded the max-degree bound");
    return c;
}

// Proper coloring with at most max-degree colors for a connected graph that
// is neither complete nor an odd cycle. DSATUR already meets the bound on
// almost every input; the constructive procedure is the fallback.
inline Certificate brooks_coloring(const BitGraph& g) {
    const std::size_t nv = g.nv();
    if (nv == 0) throw std::invalid_argument("brooks_coloring: empty graph");
    if (!is_connected(g))
        throw std::invalid_argument("brooks_coloring precondition violated: graph is disconnected");
    if (g.edge_count() == std::uint64_t(nv) * (nv - 1) / 2)
        throw std::invalid_argument("brooks_coloring precondition violated: graph is complete");
    const std::size_t maxdeg = g.max_degree();
    if (nv % 2 == 1 && maxdeg == 2 && g.min_degree() == 2)
        throw std::invalid_argument("brooks_coloring precondition violated: graph is an odd cycle");

    Certificate ds = dsatur_coloring(g);
    if (ds.value <= maxdeg) return ds;
    return brooks_constructive(g);
}

} // namespace qig
