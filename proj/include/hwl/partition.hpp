#pragma once

// Partition paths and type sequences. A partition path is the cyclic sequence
// of half windows F_1..F_{2^{n-1}} of an embedding; consecutive sets differ by
// a single swap and the wrap closes against the complement of F_1. Embeddings
// and partition paths are in bijection, and both directions are implemented.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "embedding.hpp"
#include "report.hpp"
#include "theta.hpp"
#include "vertex_set.hpp"

namespace hwl {

struct PartitionPath {
    int n = 0;
    std::vector<VertexSet> sets; // F_1..F_{2^{n-1}}

    void validate() const {
        if (n < 2 || n > VertexSet::max_dim) throw std::invalid_argument("PartitionPath: n out of range");
        const std::int64_t H = std::int64_t(1) << (n - 1);
        if (std::int64_t(sets.size()) != H) throw std::invalid_argument("PartitionPath: expected 2^{n-1} sets");
        for (std::int64_t i = 0; i < H; ++i) {
            if (sets[std::size_t(i)].dim() != n) throw std::invalid_argument("PartitionPath: dimension mismatch");
            if (sets[std::size_t(i)].count() != H)
                throw std::invalid_argument("PartitionPath: |F_" + std::to_string(i + 1) + "| != 2^{n-1}");
            const VertexSet& next = i + 1 < H ? sets[std::size_t(i + 1)] : sets[0];
            VertexSet delta = sets[std::size_t(i)] ^ next;
            // wrap compares against F_1^c, i.e. against ~F_1
            const std::int64_t want = i + 1 < H ? 2 : (std::int64_t(1) << n) - 2;
            if (delta.count() != want)
                throw std::invalid_argument("PartitionPath: step " + std::to_string(i + 1) + " is not a single swap");
        }
        auto sorted = sets;
        std::sort(sorted.begin(), sorted.end(), [](const VertexSet& a, const VertexSet& b) {
            return a.words() < b.words();
        });
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("PartitionPath: sets not pairwise distinct");
    }
};

inline PartitionPath partition_path(const Embedding& e) {
    e.validate();
    if (e.n < 2) throw std::invalid_argument("partition_path: need n >= 2");
    PartitionPath p;
    p.n = e.n;
    p.sets.reserve(std::size_t(1) << (e.n - 1));
    for_each_window(e, [&](std::int64_t, const VertexSet& w) { p.sets.push_back(w); });
    return p;
}

// inverse of partition_path: the vertex leaving F_i carries label i, the one
// entering carries i + 2^{n-1}
inline Embedding embedding_of(const PartitionPath& p) {
    p.validate();
    const std::int64_t H = std::int64_t(1) << (p.n - 1);
    Embedding e;
    e.n = p.n;
    e.map.assign(std::size_t(1) << p.n, 0);
    for (std::int64_t i = 0; i < H; ++i) {
        const VertexSet& cur = p.sets[std::size_t(i)];
        VertexSet next = i + 1 < H ? p.sets[std::size_t(i + 1)] : ~p.sets[0];
        VertexSet leave = cur ^ (cur & next);
        VertexSet enter = next ^ (cur & next);
        for (std::uint64_t v = 0; v < (std::uint64_t(1) << p.n); ++v) {
            if (leave.test(v)) e.map[std::size_t(v)] = std::int32_t(i + 1);
            if (enter.test(v)) e.map[std::size_t(v)] = std::int32_t(i + 1 + H);
        }
    }
    e.validate();
    return e;
}

struct TypeSequence {
    int n = 0;
    std::vector<std::int64_t> values; // values[i] = Type(F_{i+1})
};

inline TypeSequence type_sequence(const PartitionPath& p) {
    TypeSequence t;
    t.n = p.n;
    t.values.reserve(p.sets.size());
    for (const auto& s : p.sets) t.values.push_back(type_of(s));
    return t;
}

inline TypeSequence type_sequence(const Embedding& e) {
    TypeSequence t;
    t.n = e.n;
    t.values.reserve(std::size_t(1) << (e.n - 1));
    for_each_window(e, [&](std::int64_t, const VertexSet& w) { t.values.push_back(type_of(w)); });
    return t;
}

// Prop. 2.6: cyclic continuity plus at least two entries >= 2^{n-3}
inline bool check_type_sequence(const TypeSequence& t, std::string* why = nullptr) {
    if (t.n < 3) throw std::invalid_argument("check_type_sequence: need n >= 3");
    const std::int64_t H = std::int64_t(1) << (t.n - 1);
    const std::int64_t P = std::int64_t(1) << (t.n - 3);
    if (std::int64_t(t.values.size()) != H) {
        if (why) *why = "length != 2^{n-1}";
        return false;
    }
    std::int64_t peaks = 0;
    for (std::int64_t i = 0; i < H; ++i) {
        const std::int64_t a = t.values[std::size_t(i)], b = t.values[std::size_t((i + 1) % H)];
        if (a < 0 || a > (std::int64_t(1) << (t.n - 2))) {
            if (why) *why = "entry " + std::to_string(i + 1) + " out of [0, 2^{n-2}]";
            return false;
        }
        if (a - b > 1 || b - a > 1) {
            if (why) *why = "|t_" + std::to_string(i + 1) + " - t_" + std::to_string((i + 1) % H + 1) + "| > 1";
            return false;
        }
        if (a >= P) ++peaks;
    }
    if (peaks < 2) {
        if (why) *why = "fewer than two entries reach 2^{n-3}";
        return false;
    }
    return true;
}

// Eq. (12): T_G(i) = distance from i to the nearest of {1, 2^{n-2}+1} on the
// cyclic index range of period 2^{n-1}
inline std::int64_t gray_type_formula(int n, std::int64_t i) {
    const std::int64_t H = std::int64_t(1) << (n - 1);
    const std::int64_t Q1 = (std::int64_t(1) << (n - 2)) + 1;
    auto cyc = [H](std::int64_t d) { d = ((d % H) + H) % H; return std::min(d, H - d); };
    return std::min(cyc(i - 1), cyc(i - Q1));
}

// Gray-coding identities: Eq. (12) type sequence, theta(n,G_i) equal to the
// closed half-type form for every window, and the four half-plane images of
// section 2.4
inline IdentityReport gray_identities_check(int n) {
    if (n < 3 || n > 12) throw std::invalid_argument("gray_identities_check: need 3 <= n <= 12");
    IdentityReport rep;
    const Embedding g = gray_embedding(n);
    const std::int64_t H = std::int64_t(1) << (n - 1);

    for_each_window(g, [&](std::int64_t i, const VertexSet& w) {
        const std::int64_t t = type_of(w);
        if (t != gray_type_formula(n, i))
            rep.fail("T_G(" + std::to_string(i) + ") != Eq.(12) value");
        else if (boundary_size(w) != theta_half_type(n, t))
            rep.fail("theta(n,G_" + std::to_string(i) + ") != 2*theta(n-2," + std::to_string(t) + ") + 2^{n-1}");
    });

    // xi_n(H_{n,1,0}) = {1..2^{n-1}}, xi_n(H_{n,1,1}) = {2^{n-1}+1..2^n},
    // xi_n(H_{n,2,0}) = {1..2^{n-2}} u {2^n-2^{n-2}+1..2^n},
    // xi_n(H_{n,2,1}) = {2^{n-2}+1..2^n-2^{n-2}}
    const std::int64_t N = std::int64_t(1) << n, Qr = std::int64_t(1) << (n - 2);
    for (std::int64_t v = 0; v < N; ++v) {
        const std::int64_t L = g.map[std::size_t(v)];
        const bool x1 = ((v >> (n - 1)) & 1) != 0, x2 = ((v >> (n - 2)) & 1) != 0;
        if ((!x1) != (L <= H)) rep.fail("xi(H_{n,1,0}) image mismatch at vertex " + std::to_string(v));
        if (x1 != (L > H)) rep.fail("xi(H_{n,1,1}) image mismatch at vertex " + std::to_string(v));
        if ((!x2) != (L <= Qr || L > N - Qr)) rep.fail("xi(H_{n,2,0}) image mismatch at vertex " + std::to_string(v));
        if (x2 != (L > Qr && L <= N - Qr)) rep.fail("xi(H_{n,2,1}) image mismatch at vertex " + std::to_string(v));
    }
    return rep;
}

} // namespace hwl
