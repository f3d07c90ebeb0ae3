#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qig/counting.hpp"
#include "qig/graph_io.hpp"

using namespace qig;

namespace {
std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
}
struct TempFile {
    std::string path;
    explicit TempFile(const char* name) : path(std::string("qig_test_") + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};
} // namespace

TEST_CASE("cache round-trip reproduces the graph exactly") {
    const FieldSpec F2 = build_field(2);
    const IntersectionGraph G = build_graph(3, F2);
    TempFile f("roundtrip.qig");
    save_cache(G, f.path);
    const IntersectionGraph H = load_cache(f.path);
    REQUIRE(H.n == G.n);
    REQUIRE(H.field.p == 2);
    REQUIRE(H.field.e == 1);
    REQUIRE(H.nv() == G.nv());
    REQUIRE(H.dim_offset == G.dim_offset);
    for (std::size_t v = 0; v < G.nv(); ++v) {
        REQUIRE(H.vertices[v] == G.vertices[v]);
        REQUIRE(H.g.adj[v] == G.g.adj[v]);
    }
}

TEST_CASE("cache corruption is detected") {
    const FieldSpec F2 = build_field(2);
    const IntersectionGraph G = build_graph(3, F2);
    const std::string bytes = cache_bytes(G);

    SECTION("bad magic") {
        std::string b = bytes;
        b[0] = 'X';
        REQUIRE_THROWS_WITH(load_cache_bytes(b), Catch::Matchers::ContainsSubstring("magic"));
    }
    SECTION("version mismatch") {
        std::string b = bytes;
        b[4] = char(99);
        REQUIRE_THROWS_WITH(load_cache_bytes(b), Catch::Matchers::ContainsSubstring("version"));
    }
    SECTION("truncation") {
        REQUIRE_THROWS_AS(load_cache_bytes(bytes.substr(0, 8)), CacheError);
        REQUIRE_THROWS_AS(load_cache_bytes(bytes.substr(0, bytes.size() - 9)), CacheError);
    }
    SECTION("checksum failure") {
        std::string b = bytes;
        b[b.size() / 2] = char(~b[b.size() / 2]);
        REQUIRE_THROWS_WITH(load_cache_bytes(b), Catch::Matchers::ContainsSubstring("checksum"));
    }
}

TEST_CASE("dot export lists every vertex and edge") {
    const FieldSpec F2 = build_field(2);
    const IntersectionGraph G = build_graph(2, F2);
    std::ostringstream os;
    export_dot(G, os);
    const std::string dot = os.str();
    REQUIRE(dot.find("v0 [label=\"d1#0") != std::string::npos);
    REQUIRE(dot.find("v2 [label=\"d1#2") != std::string::npos);
    REQUIRE(dot.find("--") == std::string::npos); // 3 isolated vertices

    const IntersectionGraph g32 = build_graph(3, F2);
    std::ostringstream os2;
    export_dot(g32, os2);
    std::size_t edges = 0;
    for (std::size_t at = os2.str().find("--"); at != std::string::npos; at = os2.str().find("--", at + 1))
        ++edges;
    REQUIRE(edges == g32.g.edge_count());
}

TEST_CASE("json export is consistent with the counting module") {
    const FieldSpec F3 = build_field(3);
    const IntersectionGraph G = build_graph(3, F3);
    const nlohmann::json j = export_json(G);
    BigCount total = 0;
    for (int t = 1; t <= 2; ++t) total += gaussian_binomial(3, t, 3);
    REQUIRE(BigCount(j["vertex_count"].get<std::uint64_t>()) == total);
    REQUIRE(j["q"] == 3);
    REQUIRE(j["vertices"].size() == G.nv());
    REQUIRE(j["edges"].size() == G.g.edge_count());
}
