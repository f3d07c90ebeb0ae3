#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qig/gf.hpp"

namespace qig {

// Coordinate vector in GF(q)^n.
using VectorQ = std::vector<FieldElement>;

// A subspace of GF(q)^n, held as its unique reduced-row-echelon basis:
// pivots strictly increasing, pivot entries 1, zeros above and below pivots,
// rows ordered by pivot column. Two Subspace values are equal iff they are
// the same subspace.
struct Subspace {
    int n = 0;
    int dim = 0;
    std::vector<FieldElement> basis; // dim x n, row-major

    FieldElement at(int r, int c) const { return basis[std::size_t(r) * n + c]; }
    bool operator==(const Subspace&) const = default;
};

struct SubspaceHash {
    std::size_t operator()(const Subspace& s) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&h](std::uint64_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        mix(std::uint64_t(s.n));
        mix(std::uint64_t(s.dim));
        for (FieldElement x : s.basis) mix(x);
        return std::size_t(h);
    }
};

// Stable identity of a subspace within its (n, q) ambient: the dimension and
// the position in the deterministic enumeration order of that dimension class.
struct SubspaceId {
    int dim = 0;
    std::uint64_t rank_index = 0;
    bool operator==(const SubspaceId&) const = default;
};

// In-place Gauss-Jordan over GF(q). Returns the rank; on return the first
// `rank` rows are the RREF and the remaining rows are zero.
inline int rref_in_place(std::vector<FieldElement>& m, int rows, int cols, const FieldSpec& F) {
    if (int(m.size()) != rows * cols) throw std::invalid_argument("rref: ragged matrix");
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i) {
            if (m[std::size_t(i) * cols + c] != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols; ++j)
                std::swap(m[std::size_t(pr) * cols + j], m[std::size_t(r) * cols + j]);
        const FieldElement piv_inv = F.inv(m[std::size_t(r) * cols + c]);
        if (piv_inv != 1)
            for (int j = c; j < cols; ++j)
                m[std::size_t(r) * cols + j] = F.mul(m[std::size_t(r) * cols + j], piv_inv);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            const FieldElement f = m[std::size_t(i) * cols + c];
            if (f == 0) continue;
            for (int j = c; j < cols; ++j) {
                const FieldElement sub = F.mul(f, m[std::size_t(r) * cols + j]);
                m[std::size_t(i) * cols + j] = F.sub(m[std::size_t(i) * cols + j], sub);
            }
        }
        ++r;
    }
    return r;
}

inline Subspace make_subspace(std::vector<FieldElement> stacked, int rows, int n, const FieldSpec& F) {
    const int rank = rref_in_place(stacked, rows, n, F);
    stacked.resize(std::size_t(rank) * n);
    return Subspace{n, rank, std::move(stacked)};
}

// Span of a (possibly empty) generating set; canonical by construction.
inline Subspace span(std::span<const VectorQ> gens, int n, const FieldSpec& F) {
    if (n < 1) throw std::invalid_argument("span: empty ambient dimension");
    std::vector<FieldElement> m;
    m.reserve(gens.size() * n);
    for (const VectorQ& v : gens) {
        if (int(v.size()) != n) throw std::invalid_argument("span: vector length differs from ambient dimension");
        m.insert(m.end(), v.begin(), v.end());
    }
    return make_subspace(std::move(m), int(gens.size()), n, F);
}

// dim(u ∩ w) via the dimension formula: dim u + dim w − rank(u stacked on w).
inline int intersection_dim(const Subspace& u, const Subspace& w, const FieldSpec& F) {
    if (u.n != w.n) throw std::invalid_argument("intersection_dim: mismatched ambient space");
    std::vector<FieldElement> m;
    m.reserve(std::size_t(u.dim + w.dim) * u.n);
    m.insert(m.end(), u.basis.begin(), u.basis.end());
    m.insert(m.end(), w.basis.begin(), w.basis.end());
    const int rank = rref_in_place(m, u.dim + w.dim, u.n, F);
    return u.dim + w.dim - rank;
}

// Membership: appending x must not raise the rank.
inline bool contains(const Subspace& w, const VectorQ& x, const FieldSpec& F) {
    if (int(x.size()) != w.n) throw std::invalid_argument("contains: dimension mismatch");
    std::vector<FieldElement> m;
    m.reserve(std::size_t(w.dim + 1) * w.n);
    m.insert(m.end(), w.basis.begin(), w.basis.end());
    m.insert(m.end(), x.begin(), x.end());
    return rref_in_place(m, w.dim + 1, w.n, F) == w.dim;
}

// inner ⊆ outer.
inline bool contains_subspace(const Subspace& outer, const Subspace& inner, const FieldSpec& F) {
    if (outer.n != inner.n) throw std::invalid_argument("contains_subspace: dimension mismatch");
    if (inner.dim > outer.dim) return false;
    std::vector<FieldElement> m;
    m.reserve(std::size_t(outer.dim + inner.dim) * outer.n);
    m.insert(m.end(), outer.basis.begin(), outer.basis.end());
    m.insert(m.end(), inner.basis.begin(), inner.basis.end());
    return rref_in_place(m, outer.dim + inner.dim, outer.n, F) == outer.dim;
}

namespace linalg_detail {

// Free positions of an RREF shape with pivot columns `piv`: row-major list of
// (row, col) with col right of the row's pivot and not itself a pivot.
inline std::vector<std::pair<int, int>> free_positions(const std::vector<int>& piv, int n) {
    const int k = int(piv.size());
    std::vector<bool> is_piv(n, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::pair<int, int>> fp;
    for (int i = 0; i < k; ++i)
        for (int c = piv[i] + 1; c < n; ++c)
            if (!is_piv[c]) fp.emplace_back(i, c);
    return fp;
}

inline bool next_combination(std::vector<int>& comb, int n) {
    const int k = int(comb.size());
    int i = k - 1;
    while (i >= 0 && comb[i] == n - k + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    return true;
}

inline std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, const char* what) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (v > (std::uint64_t(1) << 62) / base)
            throw ResourceCapError(std::string(what) + ": enumeration size overflows 64 bits", "q^free", "2^62");
        v *= base;
    }
    return v;
}

} // namespace linalg_detail

// All k-dimensional subspaces of GF(q)^n, each exactly once, in the order
// that is the external vertex-id contract: pivot-column k-subsets in
// lexicographic order, then free entries counted row-major in base q (the
// first free position is the most significant digit).
inline std::vector<Subspace> enumerate_subspaces(int n, int k, const FieldSpec& F) {
    if (n < 1) throw std::invalid_argument("enumerate_subspaces: ambient dimension must be >= 1");
    if (k < 0 || k > n)
        throw std::invalid_argument("enumerate_subspaces: k = " + std::to_string(k) + " out of range [0, " +
                                    std::to_string(n) + "]");
    std::vector<Subspace> out;
    if (k == 0) {
        out.push_back(Subspace{n, 0, {}});
        return out;
    }
    const std::uint64_t q = std::uint64_t(F.q);
    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) piv[i] = i;
    do {
        const auto fp = linalg_detail::free_positions(piv, n);
        const std::size_t f = fp.size();
        const std::uint64_t total = linalg_detail::checked_pow(q, f, "enumerate_subspaces");
        std::vector<std::uint64_t> weight(f, 1); // weight[j] = q^(f-1-j)
        for (std::size_t j = f; j-- > 0;)
            if (j + 1 < f) weight[j] = weight[j + 1] * q;
        for (std::uint64_t m = 0; m < total; ++m) {
            Subspace s;
            s.n = n;
            s.dim = k;
            s.basis.assign(std::size_t(k) * n, 0);
            for (int i = 0; i < k; ++i) s.basis[std::size_t(i) * n + piv[i]] = 1;
            for (std::size_t j = 0; j < f; ++j)
                s.basis[std::size_t(fp[j].first) * n + fp[j].second] = FieldElement((m / weight[j]) % q);
            out.push_back(std::move(s));
        }
    } while (linalg_detail::next_combination(piv, n));
    return out;
}

// Position of `s` within enumerate_subspaces(s.n, s.dim): rank over all
// lexicographically earlier pivot sets plus the base-q numeral of the free
// entries. Inverse of the enumeration order, used to label vertices.
inline SubspaceId subspace_id(const Subspace& s, const FieldSpec& F) {
    if (s.dim == 0) return SubspaceId{0, 0};
    const int n = s.n;
    const int k = s.dim;
    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) {
        int c = 0;
        while (c < n && s.at(i, c) == 0) ++c;
        if (c == n) throw std::invalid_argument("subspace_id: zero row in basis");
        piv[i] = c;
    }
    const std::uint64_t q = std::uint64_t(F.q);
    std::uint64_t index = 0;
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (comb != piv) {
        index += linalg_detail::checked_pow(q, linalg_detail::free_positions(comb, n).size(), "subspace_id");
        if (!linalg_detail::next_combination(comb, n))
            throw std::invalid_argument("subspace_id: basis is not in RREF");
    }
    std::uint64_t numeral = 0;
    for (auto [r, c] : linalg_detail::free_positions(piv, n)) numeral = numeral * q + s.at(r, c);
    return SubspaceId{k, index + numeral};
}

} // namespace qig
