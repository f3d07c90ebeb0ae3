#pragma once

#include <cstdint>
#include <fstream>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

#include <zlib.h>

#include <json.hpp>

#include "qig/graph.hpp"

namespace qig {

inline constexpr std::uint16_t kCacheFormatVersion = 1;

namespace io_detail {

inline std::string basis_text(const Subspace& s) {
    std::string out = "[";
    for (int r = 0; r < s.dim; ++r) {
        if (r) out += "|";
        for (int c = 0; c < s.n; ++c) {
            if (c) out += ",";
            out += std::to_string(int(s.at(r, c)));
        }
    }
    out += "]";
    return out;
}

inline void put_u16(std::string& b, std::uint16_t v) {
    b.push_back(char(v & 0xff));
    b.push_back(char(v >> 8));
}
inline void put_u32(std::string& b, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) b.push_back(char((v >> (8 * i)) & 0xff));
}
inline std::uint16_t get_u16(const std::string& b, std::size_t at) {
    return std::uint16_t(std::uint8_t(b[at])) | std::uint16_t(std::uint8_t(b[at + 1])) << 8;
}
inline std::uint32_t get_u32(const std::string& b, std::size_t at) {
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | std::uint8_t(b[at + i]);
    return v;
}

} // namespace io_detail

// Graphviz export; vertex labels carry the class label d<dim>#<rank_index>
// and the RREF rows.
inline void export_dot(const IntersectionGraph& G, std::ostream& os) {
    os << "graph qig {\n";
    for (std::size_t v = 0; v < G.nv(); ++v)
        os << "  v" << v << " [label=\"" << G.label(v) << " " << io_detail::basis_text(G.vertices[v]) << "\"];\n";
    for (std::size_t v = 0; v < G.nv(); ++v)
        G.g.adj[v].for_each_set([&](std::size_t w) {
            if (w > v) os << "  v" << v << " -- v" << w << ";\n";
        });
    os << "}\n";
}

inline nlohmann::json export_json(const IntersectionGraph& G) {
    nlohmann::json j;
    j["format"] = "qig-graph";
    j["version"] = kCacheFormatVersion;
    j["n"] = G.n;
    j["p"] = G.field.p;
    j["e"] = G.field.e;
    j["q"] = G.field.q;
    j["vertex_count"] = G.nv();
    j["edge_count"] = G.g.edge_count();
    auto verts = nlohmann::json::array();
    for (std::size_t v = 0; v < G.nv(); ++v) {
        nlohmann::json jv;
        jv["id"] = v;
        jv["dim"] = G.dim_of(v);
        jv["rank_index"] = G.rank_index_of(v);
        jv["label"] = G.label(v);
        auto rows = nlohmann::json::array();
        const Subspace& s = G.vertices[v];
        for (int r = 0; r < s.dim; ++r) {
            auto row = nlohmann::json::array();
            for (int c = 0; c < s.n; ++c) row.push_back(int(s.at(r, c)));
            rows.push_back(std::move(row));
        }
        jv["basis"] = std::move(rows);
        verts.push_back(std::move(jv));
    }
    j["vertices"] = std::move(verts);
    auto edges = nlohmann::json::array();
    for (std::size_t v = 0; v < G.nv(); ++v)
        G.g.adj[v].for_each_set([&](std::size_t w) {
            if (w > v) edges.push_back(nlohmann::json::array({v, w}));
        });
    j["edges"] = std::move(edges);
    return j;
}

// Binary cache. Layout: magic "QIGR", format version u16, then n, p, e and
// the vertex count as little-endian u32, then per-vertex records (dim as u8,
// RREF entries as base-q digits one byte each), then the row-major adjacency
// bit matrix (bit v*V+i set iff v~i, LSB-first within each byte) padded to a
// byte boundary, then a CRC32 of all preceding bytes.
inline std::string cache_bytes(const IntersectionGraph& G) {
    std::string b;
    b += "QIGR";
    io_detail::put_u16(b, kCacheFormatVersion);
    io_detail::put_u32(b, std::uint32_t(G.n));
    io_detail::put_u32(b, std::uint32_t(G.field.p));
    io_detail::put_u32(b, std::uint32_t(G.field.e));
    const std::size_t V = G.nv();
    io_detail::put_u32(b, std::uint32_t(V));
    for (const Subspace& s : G.vertices) {
        b.push_back(char(s.dim));
        for (FieldElement x : s.basis) b.push_back(char(x));
    }
    std::string bits((V * V + 7) / 8, '\0');
    for (std::size_t v = 0; v < V; ++v)
        G.g.adj[v].for_each_set([&](std::size_t i) {
            const std::size_t k = v * V + i;
            bits[k >> 3] |= char(1u << (k & 7));
        });
    b += bits;
    const auto crc = std::uint32_t(::crc32(0, reinterpret_cast<const Bytef*>(b.data()), uInt(b.size())));
    io_detail::put_u32(b, crc);
    return b;
}

inline void save_cache(const IntersectionGraph& G, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw CacheError("cannot open cache file for writing: " + path);
    const std::string b = cache_bytes(G);
    os.write(b.data(), std::streamsize(b.size()));
    if (!os) throw CacheError("short write to cache file: " + path);
}

inline IntersectionGraph load_cache_bytes(const std::string& b) {
    constexpr std::size_t kHeader = 4 + 2 + 4 * 4;
    if (b.size() < kHeader + 4) throw CacheError("cache truncated: shorter than header");
    if (b.compare(0, 4, "QIGR") != 0) throw CacheError("cache magic mismatch (not a QIGR file)");
    const std::uint16_t ver = io_detail::get_u16(b, 4);
    if (ver != kCacheFormatVersion)
        throw CacheError("cache format version " + std::to_string(ver) + " unsupported (expected " +
                         std::to_string(kCacheFormatVersion) + ")");
    const auto crc_stored = io_detail::get_u32(b, b.size() - 4);
    const auto crc_actual =
        std::uint32_t(::crc32(0, reinterpret_cast<const Bytef*>(b.data()), uInt(b.size() - 4)));
    if (crc_stored != crc_actual) throw CacheError("cache checksum failure");

    const int n = int(io_detail::get_u32(b, 6));
    const int p = int(io_detail::get_u32(b, 10));
    const int e = int(io_detail::get_u32(b, 14));
    const std::size_t V = io_detail::get_u32(b, 18);

    IntersectionGraph G;
    G.n = n;
    G.field = build_field(p, e);
    G.dim_offset.assign(std::size_t(n) + 1, 0);

    std::size_t at = kHeader;
    int prev_dim = 0;
    for (std::size_t v = 0; v < V; ++v) {
        if (at + 1 > b.size() - 4) throw CacheError("cache truncated in vertex records");
        const int dim = std::uint8_t(b[at++]);
        if (dim < 1 || dim > n - 1) throw CacheError("cache vertex has dimension out of range");
        if (dim < prev_dim) throw CacheError("cache vertices out of dimension order");
        const std::size_t entries = std::size_t(dim) * n;
        if (at + entries > b.size() - 4) throw CacheError("cache truncated in vertex records");
        Subspace s;
        s.n = n;
        s.dim = dim;
        s.basis.resize(entries);
        for (std::size_t i = 0; i < entries; ++i) {
            const auto x = std::uint8_t(b[at + i]);
            if (x >= G.field.q) throw CacheError("cache vertex entry exceeds field order");
            s.basis[i] = FieldElement(x);
        }
        at += entries;
        while (prev_dim < dim) G.dim_offset[++prev_dim] = std::uint32_t(v);
        G.vertices.push_back(std::move(s));
    }
    while (prev_dim < n) G.dim_offset[++prev_dim] = std::uint32_t(V);

    const std::size_t bit_bytes = (V * V + 7) / 8;
    if (at + bit_bytes != b.size() - 4) throw CacheError("cache adjacency block has wrong size");
    G.g = BitGraph(V);
    for (std::size_t v = 0; v < V; ++v)
        for (std::size_t i = 0; i < V; ++i) {
            const std::size_t k = v * V + i;
            if (std::uint8_t(b[at + (k >> 3)]) >> (k & 7) & 1) G.g.adj[v].set(i);
        }
    G.index.reserve(V);
    for (std::size_t v = 0; v < V; ++v) G.index.emplace(G.vertices[v], std::uint32_t(v));
    return G;
}

inline IntersectionGraph load_cache(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw CacheError("cannot open cache file: " + path);
    std::string b((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    return load_cache_bytes(b);
}

} // namespace qig
