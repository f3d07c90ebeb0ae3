#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qig/constructions.hpp"
#include "qig/graph.hpp"
#include "qig/solvers.hpp"
#include "test_util.hpp"

using namespace qig;
using namespace test_util;

namespace {
void require_verified(const BitGraph& g, const Certificate& c) {
    std::string why;
    INFO(why);
    REQUIRE(verify_certificate(g, c, &why));
}
} // namespace

TEST_CASE("max clique on hand-built graphs") {
    const SolveResult tri = max_clique(make_complete(3));
    REQUIRE(tri.status == SolveStatus::proven);
    REQUIRE(tri.lo == 3);
    require_verified(make_complete(3), tri.cert);

    REQUIRE(max_clique(make_cycle(6)).lo == 2);
    REQUIRE(max_clique(BitGraph(4)).lo == 1); // edgeless
}

TEST_CASE("max clique on intersection graphs") {
    const FieldSpec F2 = build_field(2);
    const IntersectionGraph g32 = build_graph(3, F2);
    const SolveResult r32 = max_clique(g32.g);
    REQUIRE(r32.status == SolveStatus::proven);
    REQUIRE(r32.lo == 7);
    require_verified(g32.g, r32.cert);

    const FieldSpec F3 = build_field(3);
    const IntersectionGraph g33 = build_graph(3, F3);
    const SolveResult r33 = max_clique(g33.g);
    REQUIRE(r33.status == SolveStatus::proven);
    REQUIRE(r33.lo == 13);
    require_verified(g33.g, r33.cert);
}

TEST_CASE("chromatic number") {
    REQUIRE(chromatic_number(make_complete(4)).lo == 4);
    REQUIRE(chromatic_number(make_complete(4)).hi == 4);
    REQUIRE(chromatic_number(make_cycle(6)).lo == 2);
    REQUIRE(chromatic_number(make_cycle(5)).lo == 3);

    const FieldSpec F2 = build_field(2);
    const IntersectionGraph g32 = build_graph(3, F2);
    const SolveResult r = chromatic_number(g32.g);
    REQUIRE(r.status == SolveStatus::proven);
    REQUIRE(r.lo == 7);
    REQUIRE(r.hi == 7);
    require_verified(g32.g, r.cert);
}

TEST_CASE("minimum dominating set") {
    const SolveResult star = min_dominating_set(make_star(6));
    REQUIRE(star.lo == 1);
    require_verified(make_star(6), star.cert);

    const FieldSpec F2 = build_field(2);
    const IntersectionGraph g32 = build_graph(3, F2);
    const SolveResult r32 = min_dominating_set(g32.g);
    REQUIRE(r32.status == SolveStatus::proven);
    REQUIRE(r32.lo == 3);
    require_verified(g32.g, r32.cert);

    const IntersectionGraph g42 = build_graph(4, F2);
    const SolveResult r42 = min_dominating_set(g42.g);
    REQUIRE(r42.status == SolveStatus::proven);
    REQUIRE(r42.lo == 3);
    require_verified(g42.g, r42.cert);

    // edgeless: the only dominating set is everything
    const SolveResult edgeless = min_dominating_set(BitGraph(5));
    REQUIRE(edgeless.lo == 5);
}

TEST_CASE("maximum independent set") {
    REQUIRE(max_independent_set(make_complete(5)).lo == 1);

    const FieldSpec F2 = build_field(2);
    const IntersectionGraph g32 = build_graph(3, F2);
    const SolveResult r32 = max_independent_set(g32.g);
    REQUIRE(r32.status == SolveStatus::proven);
    REQUIRE(r32.lo == 7);
    require_verified(g32.g, r32.cert);

    const IntersectionGraph g42 = build_graph(4, F2);
    const SolveResult r42 = max_independent_set(g42.g);
    REQUIRE(r42.status == SolveStatus::proven);
    REQUIRE(r42.lo == 15);
    require_verified(g42.g, r42.cert);
}

TEST_CASE("hopcroft-karp finds perfect matchings on the disjointness graphs") {
    const FieldSpec F2 = build_field(2);
    const IntersectionGraph g32 = build_graph(3, F2);
    const BipartiteDisjointGraph b = disjointness_bipartite(g32, 1);
    const Certificate m = hopcroft_karp(b);
    REQUIRE(m.value == 7);
    std::string why;
    REQUIRE(verify_matching(b, m, &why));

    BipartiteDisjointGraph single;
    single.t = 1;
    single.left = {0};
    single.right = {1};
    single.adj.assign(1, Bitset(1));
    single.adj[0].set(0);
    single.regular_degree = 1;
    REQUIRE(hopcroft_karp(single).value == 1);
}

TEST_CASE("dsatur coloring") {
    REQUIRE(dsatur_coloring(BitGraph(4)).value == 1);
    REQUIRE(dsatur_coloring(make_complete(4)).value == 4);
    REQUIRE(dsatur_coloring(make_cycle(6)).value == 2);

    const FieldSpec F2 = build_field(2);
    const IntersectionGraph g42 = build_graph(4, F2);
    const auto [g1, g2] = induced_middle(g42);
    const Certificate c = dsatur_coloring(g1.g);
    REQUIRE(c.value <= 18);
    require_verified(g1.g, c);
}

TEST_CASE("brooks coloring meets the max-degree bound") {
    const Certificate even = brooks_coloring(make_cycle(6));
    REQUIRE(even.value == 2);

    const Certificate pet = brooks_coloring(make_petersen());
    REQUIRE(pet.value <= 3);
    require_verified(make_petersen(), pet);

    const FieldSpec F2 = build_field(2);
    const IntersectionGraph g42 = build_graph(4, F2);
    const auto [g1, g2] = induced_middle(g42);
    const Certificate mid = brooks_coloring(g1.g);
    REQUIRE(mid.value <= 18);
    require_verified(g1.g, mid);

    REQUIRE_THROWS_WITH(brooks_coloring(make_complete(4)), Catch::Matchers::ContainsSubstring("complete"));
    REQUIRE_THROWS_WITH(brooks_coloring(make_cycle(5)), Catch::Matchers::ContainsSubstring("odd cycle"));
    BitGraph two_parts(4);
    two_parts.add_edge(0, 1);
    two_parts.add_edge(2, 3);
    REQUIRE_THROWS_WITH(brooks_coloring(two_parts), Catch::Matchers::ContainsSubstring("disconnected"));
}

TEST_CASE("constructive brooks procedure, bypassing the DSATUR shortcut") {
    // regular case: K_{3,3} and Petersen are Delta-regular and 3-connected
    BitGraph k33(6);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 3; j < 6; ++j) k33.add_edge(i, j);
    const Certificate c = brooks_constructive(k33);
    REQUIRE(c.value <= 3);
    require_verified(k33, c);

    const Certificate pet = brooks_constructive(make_petersen());
    REQUIRE(pet.value <= 3);
    require_verified(make_petersen(), pet);

    // non-regular case: a path has a vertex of degree < Delta
    BitGraph path(5);
    for (std::size_t i = 0; i + 1 < 5; ++i) path.add_edge(i, i + 1);
    const Certificate pc = brooks_constructive(path);
    REQUIRE(pc.value <= 2);
    require_verified(path, pc);

    const FieldSpec F2 = build_field(2);
    const IntersectionGraph g42 = build_graph(4, F2);
    const auto [g1, g2] = induced_middle(g42);
    const Certificate mid = brooks_constructive(g1.g); // 18-regular
    REQUIRE(mid.value <= 18);
    require_verified(g1.g, mid);
}

TEST_CASE("solver sandwich and duality invariants") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t nv = 2 + rng() % 29; // duality checked up to 30 vertices
        const double prob = 0.2 + 0.3 * double(trial % 3);
        const BitGraph g = random_graph(rng, nv, prob);
        const SolveResult cl = max_clique(g);
        const SolveResult ch = chromatic_number(g);
        REQUIRE(cl.lo <= ch.lo); // omega <= chi
        const SolveResult mis = max_independent_set(g);
        const SolveResult cc = max_clique(g.complement());
        REQUIRE(mis.lo == cc.lo);
        require_verified(g, mis.cert);
    }
}

TEST_CASE("every solver agrees with naive enumeration on random graphs") {
    std::mt19937 rng(20250809);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t nv = 1 + rng() % 12;
        const double prob = trial % 2 ? 0.35 : 0.7;
        const BitGraph g = random_graph(rng, nv, prob);
        REQUIRE(max_clique(g).lo == naive_max_clique(g));
        REQUIRE(chromatic_number(g).lo == naive_chromatic(g));
        REQUIRE(min_dominating_set(g).lo == naive_min_dominating(g));
        REQUIRE(max_independent_set(g).lo == naive_max_independent(g));
    }
}

TEST_CASE("budgets stop the search with honest bounds") {
    const FieldSpec F2 = build_field(2);
    const IntersectionGraph g42 = build_graph(4, F2);
    const SolveResult r = max_clique(g42.g, Budget{60.0, 5});
    REQUIRE(r.status == SolveStatus::bounded);
    REQUIRE(r.lo <= r.hi);
    REQUIRE(r.cert.value == r.lo);
    require_verified(g42.g, r.cert);
    REQUIRE(r.lo >= 15); // the greedy clique alone collects a full point-pencil

    const SolveResult full = max_clique(g42.g);
    REQUIRE(full.status == SolveStatus::proven);
    REQUIRE(r.lo <= full.lo);
    REQUIRE(full.hi <= r.hi);
}
