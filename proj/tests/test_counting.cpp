#include <catch2/catch_amalgamated.hpp>

#include "qig/counting.hpp"
#include "qig/linalg.hpp"
#include "test_util.hpp"

using namespace qig;

TEST_CASE("gaussian binomial base cases and values") {
    for (int q : {2, 3, 4, 5})
        for (int n = 0; n <= 6; ++n) {
            REQUIRE(gaussian_binomial(n, 0, q) == 1);
            REQUIRE(gaussian_binomial(n, n, q) == 1);
            REQUIRE(gaussian_binomial(n, n + 1, q) == 0);
            REQUIRE(gaussian_binomial(n, -1, q) == 0);
        }
    REQUIRE(gaussian_binomial(4, 2, 2) == 35);
    REQUIRE(gaussian_binomial(5, 2, 2) == 155);
    REQUIRE(gaussian_binomial(3, 5, 2) == 0);
    REQUIRE(gaussian_binomial(3, 1, 3) == 13);
    REQUIRE(gaussian_binomial(4, 2, 3) == 130);
    REQUIRE(gaussian_binomial(6, 3, 2) == 1395);
}

TEST_CASE("bracket symmetry in t and n-t") {
    for (int q : {2, 3, 4, 5})
        for (int n = 0; n <= 8; ++n)
            for (int t = 0; t <= n; ++t) REQUIRE(gaussian_binomial(n, t, q) == gaussian_binomial(n, n - t, q));
}

TEST_CASE("bracket agrees with subspace enumeration") {
    for (int q : {2, 3}) {
        const FieldSpec F = field_from_order(q);
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= n; ++k)
                REQUIRE(gaussian_binomial(n, k, q) == enumerate_subspaces(n, k, F).size());
    }
    const FieldSpec F2 = build_field(2);
    for (int k = 0; k <= 5; ++k)
        REQUIRE(gaussian_binomial(5, k, 2) == enumerate_subspaces(5, k, F2).size());
}

TEST_CASE("complement count examples and brute force") {
    REQUIRE(complement_count(2, 1, 1, 2) == 2);
    REQUIRE(complement_count(3, 1, 2, 2) == 4);
    for (int q : {2, 3})
        for (int t = 0; t <= 3; ++t)
            REQUIRE(complement_count(3, 0, t, q) == gaussian_binomial(3, t, q));

    for (int q : {2, 3}) {
        const FieldSpec F = field_from_order(q);
        for (int n = 2; n <= 3; ++n)
            for (int m = 0; m <= n; ++m)
                for (const Subspace& w : enumerate_subspaces(n, m, F))
                    for (int t = 0; t <= n; ++t)
                        REQUIRE(complement_count(n, m, t, q) ==
                                test_util::brute_force_disjoint_count(w, t, F));
    }
    REQUIRE_THROWS_AS(complement_count(3, 4, 1, 2), std::invalid_argument);
}

TEST_CASE("degree formula") {
    REQUIRE(degree_formula(3, 1, 2) == 3);
    REQUIRE(degree_formula(3, 2, 2) == 9);
    for (int q : {2, 3, 4, 5}) REQUIRE(degree_formula(2, 1, q) == 0);
    REQUIRE_THROWS_AS(degree_formula(3, 0, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(degree_formula(3, 3, 2), std::invalid_argument);
}

TEST_CASE("predicted invariants for odd n") {
    const PredictedInvariants p32 = predicted_invariants(3, 2);
    REQUIRE(p32.omega_odd);
    REQUIRE(*p32.omega_odd == 7);
    REQUIRE(*p32.chi_odd == 7);
    REQUIRE(!p32.omega_even_lo);
    REQUIRE(p32.gamma == 3);
    REQUIRE(p32.alpha == 7);
    REQUIRE(p32.vertex_count == 14);
    REQUIRE(!p32.n2_edge_case);

    const PredictedInvariants p52 = predicted_invariants(5, 2);
    REQUIRE(*p52.omega_odd == 186);
    REQUIRE(p52.vertex_count == 372);
}

TEST_CASE("predicted invariants for even n") {
    const PredictedInvariants p42 = predicted_invariants(4, 2);
    REQUIRE(!p42.omega_odd);
    REQUIRE(*p42.omega_even_lo == 22);
    REQUIRE(*p42.omega_even_hi == 33);
    REQUIRE(p42.gamma == 3);
    REQUIRE(p42.alpha == 15);
    REQUIRE(p42.vertex_count == 65);

    const PredictedInvariants p43 = predicted_invariants(4, 3);
    REQUIRE(*p43.omega_even_lo == 53);
    REQUIRE(*p43.omega_even_hi == 88);
    REQUIRE(p43.alpha == 40);
    REQUIRE(p43.gamma == 4);
}

TEST_CASE("even-n bounds are ordered for n >= 4") {
    for (int q : {2, 3, 4, 5})
        for (int n : {4, 6, 8, 10}) {
            const PredictedInvariants p = predicted_invariants(n, q);
            REQUIRE(p.omega_even_lo);
            REQUIRE(*p.omega_even_lo <= *p.omega_even_hi);
        }
}

TEST_CASE("n=2 degenerates gracefully") {
    const PredictedInvariants p = predicted_invariants(2, 3);
    REQUIRE(p.n2_edge_case);
    REQUIRE(!p.omega_odd);
    REQUIRE(!p.omega_even_lo);
    REQUIRE(p.gamma == 4);
    REQUIRE(p.alpha == 4);
    REQUIRE(p.vertex_count == 4);
    REQUIRE_THROWS_AS(predicted_invariants(1, 2), std::invalid_argument);
}

TEST_CASE("big counts stay exact far past 64 bits") {
    const BigCount huge = gaussian_binomial(40, 20, 5);
    REQUIRE(huge > BigCount("100000000000000000000000000000000000000000000000000"));
    REQUIRE(gaussian_binomial(40, 20, 5) == gaussian_binomial(40, 20, 5));
    // Pascal-style recurrence: [n t]_q = q^t [n-1 t]_q + [n-1 t-1]_q
    for (int q : {2, 3, 5})
        for (int n = 1; n <= 12; ++n)
            for (int t = 1; t <= n; ++t)
                REQUIRE(gaussian_binomial(n, t, q) ==
                        big_pow(q, t) * gaussian_binomial(n - 1, t, q) + gaussian_binomial(n - 1, t - 1, q));
}
