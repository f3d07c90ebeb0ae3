#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qig/counting.hpp"
#include "qig/linalg.hpp"
#include "test_util.hpp"

using namespace qig;

namespace {
VectorQ vec(std::initializer_list<int> xs) {
    VectorQ v;
    for (int x : xs) v.push_back(FieldElement(x));
    return v;
}
} // namespace

TEST_CASE("rref canonical forms") {
    const FieldSpec F2 = build_field(2);

    std::vector<FieldElement> id3{1, 0, 0, 0, 1, 0, 0, 0, 1};
    auto m = id3;
    REQUIRE(rref_in_place(m, 3, 3, F2) == 3);
    REQUIRE(m == id3);

    // third row is the sum of the first two over GF(2)
    std::vector<FieldElement> dep{1, 1, 0, 0, 1, 1, 1, 0, 1};
    REQUIRE(rref_in_place(dep, 3, 3, F2) == 2);

    std::vector<FieldElement> zero(9, 0);
    auto z = zero;
    REQUIRE(rref_in_place(z, 3, 3, F2) == 0);
    REQUIRE(z == zero);

    std::vector<FieldElement> ragged{1, 0, 1};
    REQUIRE_THROWS_AS(rref_in_place(ragged, 2, 2, F2), std::invalid_argument);
}

TEST_CASE("span and membership") {
    const FieldSpec F2 = build_field(2);
    const std::vector<VectorQ> single{vec({1, 0, 0})};
    REQUIRE(span(single, 3, F2).dim == 1);

    const std::vector<VectorQ> dependent{vec({1, 1, 0}), vec({0, 1, 1}), vec({1, 0, 1})};
    const Subspace s = span(dependent, 3, F2);
    REQUIRE(s.dim == 2);

    const std::vector<VectorQ> empty;
    REQUIRE(span(empty, 3, F2).dim == 0);
    REQUIRE_THROWS_AS(span(empty, 0, F2), std::invalid_argument);

    REQUIRE(contains(s, vec({0, 0, 0}), F2));
    const std::vector<VectorQ> e12{vec({1, 0, 0}), vec({0, 1, 0})};
    const Subspace plane = span(e12, 3, F2);
    REQUIRE(contains(plane, vec({1, 0, 0}), F2));
    REQUIRE(!contains(plane, vec({0, 0, 1}), F2));
    REQUIRE_THROWS_AS(contains(plane, vec({1, 0}), F2), std::invalid_argument);
}

TEST_CASE("intersection dimensions") {
    const FieldSpec F2 = build_field(2);
    const Subspace e1 = span(std::vector<VectorQ>{vec({1, 0, 0})}, 3, F2);
    const Subspace e23 = span(std::vector<VectorQ>{vec({0, 1, 0}), vec({0, 0, 1})}, 3, F2);
    const Subspace e12 = span(std::vector<VectorQ>{vec({1, 0, 0}), vec({0, 1, 0})}, 3, F2);

    REQUIRE(intersection_dim(e12, e12, F2) == 2);
    REQUIRE(intersection_dim(e1, e23, F2) == 0);
    REQUIRE(intersection_dim(e12, e23, F2) == 1);

    const Subspace other{2, 1, {1, 0}};
    REQUIRE_THROWS_AS(intersection_dim(e1, other, F2), std::invalid_argument);
}

TEST_CASE("enumeration counts match the dedup brute force") {
    for (int q : {2, 3}) {
        const FieldSpec F = field_from_order(q);
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= n; ++k) {
                const auto subs = enumerate_subspaces(n, k, F);
                REQUIRE(subs.size() == test_util::brute_force_subspace_count(n, k, F));
            }
    }
    const FieldSpec F2 = build_field(2);
    REQUIRE(enumerate_subspaces(4, 2, F2).size() == 35);
    const FieldSpec F3 = build_field(3);
    REQUIRE(enumerate_subspaces(3, 1, F3).size() == 13);
    REQUIRE(enumerate_subspaces(3, 0, F3).size() == 1);
    REQUIRE(enumerate_subspaces(3, 0, F3)[0].dim == 0);
    REQUIRE_THROWS_AS(enumerate_subspaces(3, 4, F2), std::invalid_argument);
}

TEST_CASE("enumeration is duplicate-free RREF in the documented order") {
    const FieldSpec F3 = build_field(3);
    const auto subs = enumerate_subspaces(4, 2, F3);
    for (std::size_t i = 0; i < subs.size(); ++i) {
        auto work = subs[i].basis;
        REQUIRE(rref_in_place(work, subs[i].dim, subs[i].n, F3) == subs[i].dim);
        REQUIRE(work == subs[i].basis); // already canonical
        const SubspaceId id = subspace_id(subs[i], F3);
        REQUIRE(id.dim == 2);
        REQUIRE(id.rank_index == i);
        for (std::size_t j = i + 1; j < subs.size(); ++j) REQUIRE(!(subs[i] == subs[j]));
    }
}

TEST_CASE("span is canonical under permutation and rescaling of generators") {
    std::mt19937 rng(20240811);
    for (int q : {2, 3, 4}) {
        const FieldSpec F = field_from_order(q);
        const int n = 4;
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<VectorQ> gens(3, VectorQ(n));
            for (auto& g : gens)
                for (int i = 0; i < n; ++i) g[i] = FieldElement(rng() % q);
            const Subspace base = span(gens, n, F);

            std::shuffle(gens.begin(), gens.end(), rng);
            for (auto& g : gens) {
                const auto scale = FieldElement(1 + rng() % (q - 1));
                for (auto& x : g) x = F.mul(x, scale);
            }
            // add a random multiple of one generator to another
            const std::size_t a = rng() % gens.size(), b = rng() % gens.size();
            if (a != b) {
                const auto f = FieldElement(rng() % q);
                for (int i = 0; i < n; ++i) gens[a][i] = F.add(gens[a][i], F.mul(f, gens[b][i]));
            }
            REQUIRE(span(gens, n, F) == base);
        }
    }
}

TEST_CASE("dimension formula holds across random subspace pairs") {
    const FieldSpec F2 = build_field(2);
    for (int n : {3, 4}) {
        std::vector<Subspace> all;
        for (int k = 0; k <= n; ++k)
            for (auto& s : enumerate_subspaces(n, k, F2)) all.push_back(s);
        for (const auto& u : all)
            for (const auto& w : all) {
                std::vector<FieldElement> m;
                m.insert(m.end(), u.basis.begin(), u.basis.end());
                m.insert(m.end(), w.basis.begin(), w.basis.end());
                const int rank = rref_in_place(m, u.dim + w.dim, n, F2);
                REQUIRE(intersection_dim(u, w, F2) + rank == u.dim + w.dim);
            }
    }
}

TEST_CASE("subspace counts are symmetric in k and n-k") {
    for (int q : {2, 3}) {
        const FieldSpec F = field_from_order(q);
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= n; ++k)
                REQUIRE(enumerate_subspaces(n, k, F).size() == enumerate_subspaces(n, n - k, F).size());
    }
}

TEST_CASE("contains_subspace matches pairwise containment") {
    const FieldSpec F2 = build_field(2);
    const auto lines = enumerate_subspaces(3, 1, F2);
    const auto planes = enumerate_subspaces(3, 2, F2);
    for (const auto& l : lines)
        for (const auto& p : planes)
            REQUIRE(contains_subspace(p, l, F2) == (intersection_dim(p, l, F2) == 1));
}
