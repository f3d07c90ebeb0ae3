#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qig/errors.hpp"

namespace qig {

// An element of GF(q) is its index in [0, q). Index i encodes the polynomial
// over GF(p) whose base-p digits of i are the coefficients, constant term
// first. Index 0 is the additive identity, index 1 the multiplicative one.
using FieldElement = std::uint8_t;

inline constexpr int kDefaultFieldCap = 16;

// GF(p^e) with dense operation tables, immutable after build_field().
// Table lookup is the inner loop of all enumeration kernels, so everything
// is precomputed, including negation and inversion.
struct FieldSpec {
    int p = 2;
    int e = 1;
    int q = 2;
    std::vector<int> modulus; // monic, degree e, constant term first; empty when e == 1

    std::vector<FieldElement> add_tab; // q*q, row-major
    std::vector<FieldElement> mul_tab; // q*q, row-major
    std::vector<FieldElement> neg_tab; // q
    std::vector<FieldElement> inv_tab; // q; slot 0 is a 0 sentinel, never read

    FieldElement add(FieldElement a, FieldElement b) const {
        return add_tab[std::size_t(a) * q + b];
    }
    FieldElement mul(FieldElement a, FieldElement b) const {
        return mul_tab[std::size_t(a) * q + b];
    }
    FieldElement neg(FieldElement a) const { return neg_tab[a]; }
    FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
    FieldElement inv(FieldElement a) const {
        if (a == 0) throw std::domain_error("GF(" + std::to_string(q) + "): inv(0) is undefined");
        return inv_tab[a];
    }

    bool operator==(const FieldSpec& o) const {
        return p == o.p && e == o.e && q == o.q && modulus == o.modulus;
    }
};

inline bool is_prime(int m) {
    if (m < 2) return false;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) return false;
    return true;
}

namespace gf_detail {

// Polynomials over GF(p) as coefficient vectors, constant term first,
// trailing zeros allowed.
inline int poly_deg(const std::vector<int>& a) {
    for (int i = int(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

inline std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    std::vector<int> c(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    return c;
}

// Remainder of a mod m, m monic of degree dm.
inline std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int dm, int p) {
    for (int i = poly_deg(a); i >= dm; --i) {
        int c = a[i];
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j) {
            int k = i - dm + j;
            a[k] = ((a[k] - c * m[j]) % p + p) % p;
        }
    }
    a.resize(dm);
    return a;
}

// Exhaustive trial division by monic polynomials of degree 1..deg/2.
// Feasible because p^e stays within the small field cap.
inline bool poly_irreducible(const std::vector<int>& m, int p) {
    int dm = poly_deg(m);
    if (dm < 1) return false;
    for (int dd = 1; dd <= dm / 2; ++dd) {
        std::int64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (std::int64_t idx = 0; idx < count; ++idx) {
            std::vector<int> d(dd + 1, 0);
            std::int64_t t = idx;
            for (int i = 0; i < dd; ++i) {
                d[i] = int(t % p);
                t /= p;
            }
            d[dd] = 1;
            if (poly_deg(poly_mod(m, d, dd, p)) < 0) return false;
        }
    }
    return true;
}

inline std::vector<int> digits_of(int index, int p, int e) {
    std::vector<int> d(e, 0);
    for (int i = 0; i < e; ++i) {
        d[i] = index % p;
        index /= p;
    }
    return d;
}

inline int index_of(const std::vector<int>& digits, int p, int e) {
    int idx = 0;
    for (int i = e - 1; i >= 0; --i) idx = idx * p + (i < int(digits.size()) ? digits[i] : 0);
    return idx;
}

} // namespace gf_detail

// Irreducible moduli shipped for the prime-power orders under the default cap.
inline std::optional<std::vector<int>> builtin_modulus(int p, int e) {
    if (p == 2 && e == 2) return std::vector<int>{1, 1, 1};       // x^2 + x + 1
    if (p == 2 && e == 3) return std::vector<int>{1, 1, 0, 1};    // x^3 + x + 1
    if (p == 2 && e == 4) return std::vector<int>{1, 1, 0, 0, 1}; // x^4 + x + 1
    if (p == 3 && e == 2) return std::vector<int>{1, 0, 1};       // x^2 + 1
    return std::nullopt;
}

// Builds GF(p^e) with full operation tables. The modulus may be omitted for
// e == 1 (unused) and for the orders with a built-in modulus.
inline FieldSpec build_field(int p, int e = 1, std::span<const int> modulus = {},
                             int field_cap = kDefaultFieldCap) {
    if (!is_prime(p)) throw ConfigError("field characteristic p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw ConfigError("field extension degree must be >= 1");

    std::int64_t q64 = 1;
    for (int i = 0; i < e; ++i) {
        q64 *= p;
        if (q64 > 1 << 20) throw ResourceCapError("field order overflows the cap", "p^e", std::to_string(field_cap));
    }
    if (q64 > field_cap)
        throw ResourceCapError("field order " + std::to_string(q64) + " exceeds the cap " + std::to_string(field_cap),
                               std::to_string(q64), std::to_string(field_cap));
    const int q = int(q64);

    FieldSpec F;
    F.p = p;
    F.e = e;
    F.q = q;

    if (e > 1) {
        if (!modulus.empty()) {
            F.modulus.assign(modulus.begin(), modulus.end());
            if (int(F.modulus.size()) != e + 1)
                throw ConfigError("modulus must have degree e = " + std::to_string(e) +
                                  " (" + std::to_string(e + 1) + " coefficients)");
            for (int c : F.modulus)
                if (c < 0 || c >= p) throw ConfigError("modulus coefficients must lie in [0, p)");
            if (F.modulus[e] != 1) throw ConfigError("modulus must be monic");
            if (!gf_detail::poly_irreducible(F.modulus, p))
                throw ConfigError("modulus is reducible over GF(" + std::to_string(p) + ")");
        } else {
            auto m = builtin_modulus(p, e);
            if (!m)
                throw ConfigError("no built-in irreducible modulus for p=" + std::to_string(p) +
                                  ", e=" + std::to_string(e) + "; pass one explicitly");
            F.modulus = *m;
        }
    }

    F.add_tab.resize(std::size_t(q) * q);
    F.mul_tab.resize(std::size_t(q) * q);
    F.neg_tab.resize(q);
    F.inv_tab.assign(q, 0);

    using namespace gf_detail;
    for (int a = 0; a < q; ++a) {
        auto da = digits_of(a, p, e);
        for (int b = 0; b < q; ++b) {
            auto db = digits_of(b, p, e);
            std::vector<int> s(e);
            for (int i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p;
            F.add_tab[std::size_t(a) * q + b] = FieldElement(index_of(s, p, e));

            std::vector<int> prod = poly_mul(da, db, p);
            if (e > 1) prod = poly_mod(std::move(prod), F.modulus, e, p);
            prod.resize(e);
            F.mul_tab[std::size_t(a) * q + b] = FieldElement(index_of(prod, p, e));
        }
        std::vector<int> ng(e);
        for (int i = 0; i < e; ++i) ng[i] = (p - da[i]) % p;
        F.neg_tab[a] = FieldElement(index_of(ng, p, e));
    }
    for (int a = 1; a < q; ++a) {
        for (int b = 1; b < q; ++b) {
            if (F.mul_tab[std::size_t(a) * q + b] == 1) {
                F.inv_tab[a] = FieldElement(b);
                break;
            }
        }
        if (F.inv_tab[a] == 0)
            throw ConsistencyError("GF table build produced a non-invertible nonzero element");
    }
    return F;
}

// `-q` sugar: factor a prime power and build with the built-in modulus.
inline FieldSpec field_from_order(int q, int field_cap = kDefaultFieldCap) {
    if (q < 2) throw ConfigError("field order must be >= 2");
    int p = 2;
    while (q % p != 0) {
        ++p;
        if (p > q) throw ConfigError(std::to_string(q) + " is not a prime power");
    }
    int e = 0;
    int m = q;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    if (m != 1) throw ConfigError(std::to_string(q) + " is not a prime power");
    return build_field(p, e, {}, field_cap);
}

} // namespace qig
