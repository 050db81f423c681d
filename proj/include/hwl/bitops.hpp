#pragma once

// Small word-level helpers shared by the set/boundary machinery and the
// enumeration oracle. Vertex convention everywhere: a vertex of Q_n is an
// integer v in [0, 2^n); coordinate x_i (1-based, x_1 first) is bit (n-i)
// of v, so x_1 is the most significant bit and lexicographic order of the
// coordinate strings equals numeric order of v.

#include <cstdint>
#include <bit>
#include <cassert>

namespace hwl {

inline int popcount64(std::uint64_t w) { return std::popcount(w); }

// reflected Gray code: rank j -> vertex, and its inverse (prefix parity)
inline std::uint64_t gray_encode(std::uint64_t j) { return j ^ (j >> 1); }

inline std::uint64_t gray_decode(std::uint64_t g) {
    std::uint64_t b = 0;
    while (g) { b ^= g; g >>= 1; }
    return b;
}

// word whose bit j is set iff bit b of j is zero, for b < 6; used to build
// half-plane masks and stride-b neighbour pairings inside a 64-bit word
inline std::uint64_t zero_bit_pattern(int b) {
    static constexpr std::uint64_t pat[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
        0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
    };
    assert(0 <= b && b < 6);
    return pat[b];
}

// next k-subset mask in colex order (Gosper). Caller iterates by count, not
// by sentinel: the increment past the last combination overflows.
inline std::uint64_t gosper_next(std::uint64_t x) {
    std::uint64_t u = x & (~x + 1);
    std::uint64_t v = x + u;
    return v + (((v ^ x) / u) >> 2);
}

// binomial table big enough for unranking 32-choose-16 style scans;
// magic-static init keeps first use thread-safe
struct BinomTable {
    std::uint64_t c[65][65] = {};
    BinomTable() {
        for (int i = 0; i <= 64; ++i) {
            c[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
        }
    }
};

inline std::uint64_t binom(int n, int k) {
    static const BinomTable t;
    if (k < 0 || k > n) return 0;
    return t.c[n][k];
}

// rank -> k-subset mask of an m-element ground set, colex order (matches the
// Gosper iteration order), combinatorial number system
inline std::uint64_t unrank_combination(int m, int k, std::uint64_t rank) {
    std::uint64_t mask = 0;
    for (int i = k; i >= 1; --i) {
        int c = i - 1;
        while (c + 1 < m && binom(c + 1, i) <= rank) ++c;
        rank -= binom(c, i);
        mask |= 1ull << c;
    }
    (void)m;
    return mask;
}

// splitmix64: per-index seed derivation for order-independent parallel sweeps
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace hwl
