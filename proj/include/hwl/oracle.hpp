#pragma once

// Exhaustive enumeration oracles over small cubes.  Everything here computes
// from the raw definitions (scan all subsets / all embeddings), deliberately
// sharing no code path with the closed-form layer it cross-checks.
//
// All subset scans fix vertex 0 inside the set: translation v -> v xor c is a
// cube automorphism, preserves boundary size and type, and any nonempty set
// translates to one containing 0, so minima are unaffected while the scan
// shrinks from C(2^n, k) to C(2^n - 1, k - 1).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "hwl/bitops.hpp"
#include "hwl/embedding.hpp"
#include "hwl/parallel.hpp"

namespace hwl {

// ---------------------------------------------------------------------------
// packed subset scans, n <= 5 (vertex v <-> bit v of a 32-bit mask)
// ---------------------------------------------------------------------------

// edges leaving the set: along coordinate bit b the neighbour pairs are
// (v, v + 2^b) for every v with bit b clear
inline int boundary_u32(int n, std::uint32_t s) {
    int total = 0;
    for (int b = 0; b < n; ++b)
        total += std::popcount((s ^ (s >> (1u << b))) & std::uint32_t(zero_bit_pattern(b)));
    return total;
}

// Type(S): minimum of |S intersect H| over all 2n half planes
inline int type_u32(int n, std::uint32_t s) {
    const int k = std::popcount(s);
    int t = k;
    for (int b = 0; b < n; ++b) {
        const int c = std::popcount(s & std::uint32_t(zero_bit_pattern(b)));
        t = std::min({t, c, k - c});
    }
    return t;
}

// minimum boundary of a k-subset grouped by exact type; -1 marks types no
// k-subset attains
struct TypeRow {
    int n = 0;
    std::int64_t k = 0;
    std::vector<std::int64_t> min_by_type; // index t = 0 .. 2^{n-2}
    std::int64_t min_all = -1;
};

inline TypeRow scan_type_row(int n, std::int64_t k, int threads = 0) {
    if (n < 2 || n > 5) throw std::domain_error("scan_type_row: need 2 <= n <= 5");
    const std::int64_t W = std::int64_t(1) << n;
    if (k < 0 || k > W / 2) throw std::domain_error("scan_type_row: need 0 <= k <= 2^{n-1}");
    const std::int64_t t_cap = W / 4;
    TypeRow row{n, k, std::vector<std::int64_t>(std::size_t(t_cap) + 1, -1), -1};
    if (k == 0) {
        row.min_by_type[0] = 0;
        row.min_all = 0;
        return row;
    }
    const std::int64_t total = std::int64_t(binom(int(W) - 1, int(k) - 1));
    std::vector<std::vector<std::int64_t>> parts(
        std::size_t(resolve_threads(threads)),
        std::vector<std::int64_t>(std::size_t(t_cap) + 1, -1));
    parallel_ranges(total, threads, [&](int chunk, std::int64_t rb, std::int64_t re) {
        auto& mins = parts[std::size_t(chunk)];
        std::uint64_t comb = unrank_combination(int(W) - 1, int(k) - 1, std::uint64_t(rb));
        for (std::int64_t r = rb; r < re; ++r) {
            const std::uint32_t mask = (std::uint32_t(comb) << 1) | 1u;
            const int b = boundary_u32(n, mask);
            auto& slot = mins[std::size_t(type_u32(n, mask))];
            if (slot < 0 || b < slot) slot = b;
            if (r + 1 < re) comb = gosper_next(comb);
        }
    });
    for (const auto& mins : parts)
        for (std::size_t t = 0; t <= std::size_t(t_cap); ++t) {
            if (mins[t] < 0) continue;
            auto& slot = row.min_by_type[t];
            if (slot < 0 || mins[t] < slot) slot = mins[t];
        }
    for (const auto v : row.min_by_type)
        if (v >= 0 && (row.min_all < 0 || v < row.min_all)) row.min_all = v;
    return row;
}

struct TypeTable {
    int n = 0;
    std::vector<TypeRow> rows; // k = 0 .. k_max

    std::int64_t at(std::int64_t k, std::int64_t t) const {
        const auto& r = rows.at(std::size_t(k));
        if (t < 0 || t >= std::int64_t(r.min_by_type.size())) return -1;
        return r.min_by_type[std::size_t(t)];
    }
    std::int64_t min_over_types(std::int64_t k) const { return rows.at(std::size_t(k)).min_all; }
};

inline TypeTable scan_type_table(int n, std::int64_t k_max, int threads = 0) {
    if (n < 2 || n > 5) throw std::domain_error("scan_type_table: need 2 <= n <= 5");
    const std::int64_t W = std::int64_t(1) << n;
    if (k_max < 0 || k_max > W / 2)
        throw std::domain_error("scan_type_table: need 0 <= k_max <= 2^{n-1}");
    TypeTable table;
    table.n = n;
    table.rows.reserve(std::size_t(k_max) + 1);
    for (std::int64_t k = 0; k <= k_max; ++k)
        table.rows.push_back(scan_type_row(n, k, threads));
    return table;
}

// minimum boundary over all k-subsets, straight from the definition
inline std::int64_t brute_theta(int n, std::int64_t k, int threads = 0) {
    if (n < 1 || n > 5) throw std::domain_error("brute_theta: need 1 <= n <= 5");
    const std::int64_t W = std::int64_t(1) << n;
    if (k < 0 || k > W) throw std::domain_error("brute_theta: k out of range");
    if (k == 0 || k == W) return 0;
    const std::int64_t total = std::int64_t(binom(int(W) - 1, int(k) - 1));
    std::vector<std::int64_t> parts(std::size_t(resolve_threads(threads)), -1);
    parallel_ranges(total, threads, [&](int chunk, std::int64_t rb, std::int64_t re) {
        std::uint64_t comb = unrank_combination(int(W) - 1, int(k) - 1, std::uint64_t(rb));
        std::int64_t best = -1;
        for (std::int64_t r = rb; r < re; ++r) {
            const std::uint32_t mask = (std::uint32_t(comb) << 1) | 1u;
            const int b = boundary_u32(n, mask);
            if (best < 0 || b < best) best = b;
            if (r + 1 < re) comb = gosper_next(comb);
        }
        parts[std::size_t(chunk)] = best;
    });
    std::int64_t best = -1;
    for (const auto v : parts)
        if (v >= 0 && (best < 0 || v < best)) best = v;
    return best;
}

// ---------------------------------------------------------------------------
// exhaustive circular wirelength, n <= 3
// ---------------------------------------------------------------------------

struct BruteWlResult {
    std::int64_t min_wl = -1;
    std::int64_t optima = 0;    // embeddings attaining the minimum, label 1 fixed
    Embedding first_witness;    // lexicographically first optimum
};

// scan all embeddings with eta(0) = 1 (rotating labels is a cycle isometry,
// so fixing where vertex 0 lands loses no minima)
inline BruteWlResult brute_min_cycle_wl(int n) {
    if (n < 2 || n > 3) throw std::domain_error("brute_min_cycle_wl: need 2 <= n <= 3");
    const std::int64_t N = std::int64_t(1) << n;
    std::vector<std::int64_t> rest(std::size_t(N) - 1);
    std::iota(rest.begin(), rest.end(), 2);
    BruteWlResult res;
    Embedding e;
    e.n = n;
    e.map.assign(std::size_t(N), 0);
    e.map[0] = 1;
    do {
        for (std::size_t v = 1; v < std::size_t(N); ++v) e.map[v] = rest[v - 1];
        const std::int64_t wl = wirelength(e, Host::cycle);
        if (res.min_wl < 0 || wl < res.min_wl) {
            res.min_wl = wl;
            res.optima = 1;
            res.first_witness = e;
        } else if (wl == res.min_wl) {
            ++res.optima;
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return res;
}

// ---------------------------------------------------------------------------
// seeded random objects (portable: raw mt19937_64 draws, no distributions)
// ---------------------------------------------------------------------------

inline std::uint64_t random_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

inline Embedding random_embedding(int n, std::mt19937_64& rng) {
    if (n < 1 || n > 24) throw std::domain_error("random_embedding: need 1 <= n <= 24");
    const std::size_t N = std::size_t(1) << n;
    Embedding e;
    e.n = n;
    e.map.resize(N);
    std::iota(e.map.begin(), e.map.end(), 1);
    for (std::size_t i = N - 1; i > 0; --i) { // Fisher-Yates
        const std::size_t j = std::size_t(random_below(rng, std::uint64_t(i) + 1));
        std::swap(e.map[i], e.map[j]);
    }
    return e;
}

inline VertexSet random_subset(int n, std::mt19937_64& rng) {
    VertexSet s = VertexSet::empty(n);
    const std::size_t N = std::size_t(1) << n;
    for (std::size_t v = 0; v < N; v += 64) {
        std::uint64_t w = rng();
        for (std::size_t b = 0; b < 64 && v + b < N; ++b)
            if ((w >> b) & 1u) s.set(v + b);
    }
    return s;
}

} // namespace hwl
