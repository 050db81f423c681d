#pragma once

// Embeddings of Q_n into a cycle or path host with 2^n labelled slots.
// Host labels are 1-based internally; file I/O may declare another base and
// is normalized on load (json_io.hpp).

#include <cstdint>
#include <vector>
#include <stdexcept>
#include <string>

#include "bitops.hpp"
#include "vertex_set.hpp"
#include "theta.hpp"

namespace hwl {

enum class Host { cycle, path };

struct Embedding {
    int n = 0;
    std::vector<std::int32_t> map; // map[v] = host label in [1, 2^n]

    std::int64_t slots() const { return std::int64_t(1) << n; }

    void validate() const {
        if (n < 1 || n > VertexSet::max_dim) throw std::invalid_argument("Embedding: n out of range");
        const std::int64_t N = slots();
        if (std::int64_t(map.size()) != N) throw std::invalid_argument("Embedding: map size != 2^n");
        std::vector<bool> seen(std::size_t(N) + 1, false);
        for (auto L : map) {
            if (L < 1 || L > N || seen[std::size_t(L)])
                throw std::invalid_argument("Embedding: map is not a bijection onto 1..2^n");
            seen[std::size_t(L)] = true;
        }
    }

    // inv[L-1] = vertex with label L
    std::vector<std::int32_t> inverse() const {
        std::vector<std::int32_t> inv(map.size());
        for (std::size_t v = 0; v < map.size(); ++v) inv[std::size_t(map[v]) - 1] = std::int32_t(v);
        return inv;
    }
};

// xi_n: label of vertex v is (prefix parity of v's coordinates) + 1, which is
// exactly gray_decode(v) + 1; consecutive labels then differ in one bit
inline Embedding gray_embedding(int n) {
    if (n < 1 || n > VertexSet::max_dim) throw std::invalid_argument("gray_embedding: n out of range");
    Embedding e;
    e.n = n;
    e.map.resize(std::size_t(1) << n);
    for (std::uint64_t v = 0; v < (std::uint64_t(1) << n); ++v)
        e.map[std::size_t(v)] = std::int32_t(gray_decode(v)) + 1;
    return e;
}

// walk the cyclic half windows F_i = eta^{-1}({i..i+2^{n-1}-1}), i = 1..2^{n-1};
// calls fn(i, F_i)
template <class F>
void for_each_window(const Embedding& e, F fn) {
    const std::int64_t N = e.slots(), H = N / 2;
    const auto inv = e.inverse();
    VertexSet w(e.n);
    for (std::int64_t L = 1; L <= H; ++L) w.set(std::uint64_t(inv[std::size_t(L - 1)]));
    for (std::int64_t i = 1; i <= H; ++i) {
        fn(i, w);
        w.reset(std::uint64_t(inv[std::size_t(i - 1)]));
        w.set(std::uint64_t(inv[std::size_t((i + H - 1) % N)]));
    }
}

// Wirelength, computed two independent ways and cross-checked:
//  - distance sum over hypercube edges,
//  - cut sum: cycle hosts use the 2^{n-1} half windows, path hosts the
//    2^n - 1 prefixes.
// A disagreement means the artifact itself is broken, so it throws.
inline std::int64_t wirelength(const Embedding& e, Host host) {
    e.validate();
    if (host == Host::cycle && e.n < 2)
        throw std::invalid_argument("wirelength: cycle host needs n >= 2");
    const std::int64_t N = e.slots();

    std::int64_t dist = 0;
    for (std::int64_t v = 0; v < N; ++v)
        for (int b = 0; b < e.n; ++b) {
            const std::int64_t u = v ^ (std::int64_t(1) << b);
            if (u < v) continue;
            std::int64_t d = e.map[std::size_t(v)] - e.map[std::size_t(u)];
            if (d < 0) d = -d;
            dist += host == Host::cycle ? std::min(d, N - d) : d;
        }

    std::int64_t cut = 0;
    if (host == Host::cycle) {
        for_each_window(e, [&](std::int64_t, const VertexSet& w) { cut += boundary_size(w); });
    } else {
        const auto inv = e.inverse();
        VertexSet pre(e.n);
        for (std::int64_t L = 1; L < N; ++L) {
            pre.set(std::uint64_t(inv[std::size_t(L - 1)]));
            cut += boundary_size(pre);
        }
    }

    if (dist != cut)
        throw std::logic_error("wirelength: distance sum " + std::to_string(dist) +
                               " != cut sum " + std::to_string(cut));
    return dist;
}

} // namespace hwl
