#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "qig/errors.hpp"

namespace qig {

// Exact nonnegative counts; never rounded, never overflowed.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount big_pow(int base, long long exp) {
    if (exp < 0) throw std::invalid_argument("big_pow: negative exponent");
    BigCount v = 1;
    BigCount b = base;
    while (exp > 0) {
        if (exp & 1) v *= b;
        b *= b;
        exp >>= 1;
    }
    return v;
}

// Gaussian binomial [n t]_q: the number of t-dimensional subspaces of an
// n-dimensional space over GF(q). Zero outside t in {0,...,n}. Evaluated by
// incremental exact division; every prefix is itself a bracket, so each
// division is asserted to leave no remainder.
inline BigCount gaussian_binomial(int n, int t, int q) {
    if (n < 0) throw std::invalid_argument("gaussian_binomial: n must be >= 0");
    if (q < 2) throw std::invalid_argument("gaussian_binomial: q must be >= 2");
    if (t < 0 || t > n) return 0;
    BigCount v = 1;
    for (int i = 0; i < t; ++i) {
        v *= big_pow(q, n - i) - 1;
        const BigCount d = big_pow(q, i + 1) - 1;
        if (v % d != 0)
            throw ConsistencyError("gaussian_binomial(" + std::to_string(n) + "," + std::to_string(t) + "," +
                                   std::to_string(q) + "): nonzero remainder in exact division");
        v /= d;
    }
    return v;
}

// Count of t-dimensional subspaces meeting a fixed m-dimensional subspace
// only at 0: q^{mt} * [n-m, t]_q.
inline BigCount complement_count(int n, int m, int t, int q) {
    if (m < 0 || m > n || t < 0 || t > n)
        throw std::invalid_argument("complement_count: m, t must lie in [0, n]");
    return big_pow(q, std::int64_t(m) * t) * gaussian_binomial(n - m, t, q);
}

// Degree of an m-dimensional vertex of the intersection graph:
// sum_t [n t]_q  -  sum_t q^{mt} [n-m t]_q  -  2.
inline BigCount degree_formula(int n, int m, int q) {
    if (m < 1 || m > n - 1)
        throw std::invalid_argument("degree_formula: m must lie in [1, n-1]");
    BigCount total = 0;
    for (int t = 0; t <= n; ++t) total += gaussian_binomial(n, t, q);
    BigCount disjoint = 0;
    for (int t = 0; t <= n - m; ++t) disjoint += complement_count(n, m, t, q);
    return total - disjoint - 2;
}

// Closed-form predictions for the graph invariants. The omega/chi fields are
// populated only for the parity of n they apply to; the even-n bounds
// additionally require n >= 4 (at n = 2 the bound formula degenerates to an
// empty interval, see n2_edge_case).
struct PredictedInvariants {
    int n = 0;
    int q = 0;
    std::optional<BigCount> omega_odd;
    std::optional<BigCount> chi_odd;
    std::optional<BigCount> omega_even_lo;
    std::optional<BigCount> omega_even_hi;
    BigCount gamma;
    BigCount alpha;
    BigCount vertex_count;
    bool n2_edge_case = false;
};

inline PredictedInvariants predicted_invariants(int n, int q) {
    if (n < 2) throw std::invalid_argument("predicted_invariants: n must be >= 2");
    PredictedInvariants out;
    out.n = n;
    out.q = q;
    out.vertex_count = 0;
    for (int t = 1; t <= n - 1; ++t) out.vertex_count += gaussian_binomial(n, t, q);

    if (n % 2 == 1) {
        BigCount s = 0;
        for (int i = 1; i <= n / 2; ++i) s += gaussian_binomial(n, i, q);
        out.omega_odd = s;
        out.chi_odd = s;
    } else if (n >= 4) {
        BigCount s = 0;
        for (int i = 1; i <= n / 2 - 1; ++i) s += gaussian_binomial(n, i, q);
        out.omega_even_lo = s + gaussian_binomial(n - 1, (n - 2) / 2, q);
        out.omega_even_hi = s + gaussian_binomial(n, n / 2, q) - big_pow(q, std::int64_t(n) * n / 4) - 1;
    } else {
        out.n2_edge_case = true;
    }

    out.gamma = q + 1;
    const BigCount alpha_num = big_pow(q, n) - 1;
    if (alpha_num % (q - 1) != 0) throw ConsistencyError("(q^n - 1) not divisible by (q - 1)");
    out.alpha = alpha_num / (q - 1);
    return out;
}

} // namespace qig
