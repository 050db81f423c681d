#pragma once

// Minimum edge boundary theta(n,k) over k-subsets of Q_n, in closed form.
//
// For k = 2^{c_1} + ... + 2^{c_N} with c_1 < ... < c_N,
//
//   theta(n,k) = n*k - 2 * sum_{i=1..N} ( (N-i)*2^{c_i} + c_i*2^{c_i - 1} )
//
// (the c_i = 0 term contributes nothing). Valid for all 0 < k <= 2^n, with
// theta(n,0) = 0; no complement shortcut is needed or taken. Everything fits
// in int64 comfortably up to n ~ 60.

#include <cstdint>
#include <vector>
#include <stdexcept>

#include "bitops.hpp"
#include "vertex_set.hpp"

namespace hwl {

inline std::int64_t theta_opt(int n, std::int64_t k) {
    if (n < 1 || n > 60) throw std::invalid_argument("theta_opt: n out of range");
    if (k < 0 || k > (std::int64_t(1) << n)) throw std::invalid_argument("theta_opt: k out of range");
    if (k == 0) return 0;
    int cs[64], N = 0;
    for (int c = 0; c <= n; ++c)
        if ((k >> c) & 1) cs[N++] = c;
    std::int64_t s = 0;
    for (int i = 1; i <= N; ++i) {
        const int c = cs[i - 1];
        s += std::int64_t(N - i) << c;
        if (c > 0) s += std::int64_t(c) << (c - 1);
    }
    return std::int64_t(n) * k - 2 * s;
}

struct ThetaTable {
    int n = 0;
    std::vector<std::int64_t> v; // v[k] = theta(n,k), k = 0..2^n
};

inline ThetaTable theta_table(int n) {
    if (n < 1 || n > 26) throw std::invalid_argument("theta_table: n out of range");
    ThetaTable t;
    t.n = n;
    t.v.resize((std::size_t(1) << n) + 1);
    for (std::int64_t k = 0; k <= (std::int64_t(1) << n); ++k) t.v[std::size_t(k)] = theta_opt(n, k);
    return t;
}

// first k vertices of the reflected Gray order; achieves theta(n,k)
inline VertexSet canonical_cubal(int n, std::int64_t k) {
    if (k < 0 || k > (std::int64_t(1) << n)) throw std::invalid_argument("canonical_cubal: k out of range");
    VertexSet s(n);
    for (std::int64_t j = 0; j < k; ++j) s.set(gray_encode(std::uint64_t(j)));
    return s;
}

// theta(n, 2^{n-1}, t) for t <= 2^{n-3}:  2*theta(n-2, t) + 2^{n-1}.
// The closed form is proved for this clamped range; the bound pipeline relies
// on it only there.
inline std::int64_t theta_half_type(int n, std::int64_t t) {
    if (n < 3) throw std::invalid_argument("theta_half_type: need n >= 3");
    if (t < 0 || t > (std::int64_t(1) << (n - 3)))
        throw std::invalid_argument("theta_half_type: type out of clamped range");
    return 2 * theta_opt(n - 2, t) + (std::int64_t(1) << (n - 1));
}

} // namespace hwl
