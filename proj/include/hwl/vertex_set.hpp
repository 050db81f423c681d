#pragma once

// VertexSet: a subset of V(Q_n) as a 2^n-bit mask over 64-bit words, plus the
// half-plane / boundary / type machinery built on it.
//
// Half planes: H_{n,i,a} = { v : x_i = a } for axis 1 <= i <= n, a in {0,1}.
// With x_1 = MSB, axis i corresponds to bit position b = n - i of the vertex
// integer. Type(S) = min over the 2n half planes of |S ∩ H|, which reduces to
// min over axes of min(c, |S| - c) with c = |S ∩ H_{n,i,0}|.
//
// boundary_size(S) = number of Q_n edges with exactly one endpoint in S,
// computed axis-by-axis as |S_0 Δ S_1| of the two (n-1)-dim shadows -- the
// multicut identity. Within a word the pairing at stride d = 2^b is a
// shift-xor; across words it pairs whole words.

#include <cstdint>
#include <cstddef>
#include <vector>
#include <string>
#include <stdexcept>
#include <utility>

#include "bitops.hpp"

namespace hwl {

class VertexSet {
public:
    static constexpr int max_dim = 24;

    explicit VertexSet(int n) : n_(check_dim(n)), w_(word_count(n)) {}

    static VertexSet empty(int n) { return VertexSet(n); }

    static VertexSet full(int n) {
        VertexSet s(n);
        for (auto& w : s.w_) w = ~0ull;
        s.trim();
        return s;
    }

    // H_{n,i,a}; axis i is 1-based from the most significant coordinate
    static VertexSet half_plane(int n, int axis, int side) {
        check_dim(n);
        if (axis < 1 || axis > n) throw std::invalid_argument("half_plane: axis out of range");
        if (side != 0 && side != 1) throw std::invalid_argument("half_plane: side must be 0/1");
        VertexSet s(n);
        const int b = n - axis;
        for (std::size_t w = 0; w < s.w_.size(); ++w) {
            if (b < 6) {
                std::uint64_t pat = zero_bit_pattern(b);
                s.w_[w] = side == 0 ? pat : ~pat;
            } else {
                bool zero = ((w >> (b - 6)) & 1u) == 0;
                s.w_[w] = (zero == (side == 0)) ? ~0ull : 0ull;
            }
        }
        s.trim();
        return s;
    }

    int dim() const { return n_; }
    std::uint64_t universe() const { return 1ull << n_; }

    bool test(std::uint64_t v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }
    void set(std::uint64_t v) { w_[v >> 6] |= 1ull << (v & 63); }
    void reset(std::uint64_t v) { w_[v >> 6] &= ~(1ull << (v & 63)); }
    void assign(std::uint64_t v, bool on) { on ? set(v) : reset(v); }

    std::int64_t count() const {
        std::int64_t c = 0;
        for (auto w : w_) c += popcount64(w);
        return c;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    VertexSet operator~() const {
        VertexSet r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }
    VertexSet& operator&=(const VertexSet& o) { bin(o, [](std::uint64_t a, std::uint64_t b) { return a & b; }); return *this; }
    VertexSet& operator|=(const VertexSet& o) { bin(o, [](std::uint64_t a, std::uint64_t b) { return a | b; }); return *this; }
    VertexSet& operator^=(const VertexSet& o) { bin(o, [](std::uint64_t a, std::uint64_t b) { return a ^ b; }); return *this; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

    // |S ∩ H_{n,i,0}|
    std::int64_t half_count(int axis) const {
        const int b = n_ - axis;
        std::int64_t c = 0;
        if (b < 6) {
            std::uint64_t pat = zero_bit_pattern(b);
            for (auto w : w_) c += popcount64(w & pat);
        } else {
            for (std::size_t w = 0; w < w_.size(); ++w)
                if (((w >> (b - 6)) & 1u) == 0) c += popcount64(w_[w]);
        }
        return c;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    static int check_dim(int n) {
        if (n < 1 || n > max_dim) throw std::invalid_argument("VertexSet: dimension out of range");
        return n;
    }
    static std::size_t word_count(int n) { return n >= 6 ? (std::size_t(1) << (n - 6)) : 1; }

    void trim() {
        if (n_ < 6) w_[0] &= (1ull << (1u << n_)) - 1;
    }
    template <class F> void bin(const VertexSet& o, F f) {
        if (n_ != o.n_) throw std::invalid_argument("VertexSet: dimension mismatch");
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] = f(w_[i], o.w_[i]);
    }

    int n_;
    std::vector<std::uint64_t> w_;
};

// ---------------------------------------------------------------- boundary

inline std::int64_t boundary_size(const VertexSet& s) {
    const int n = s.dim();
    const auto& w = s.words();
    std::int64_t total = 0;
    for (int b = 0; b < n; ++b) {
        if (b < 6) {
            const int d = 1 << b;
            const std::uint64_t pat = zero_bit_pattern(b);
            for (auto x : w) total += popcount64((x ^ (x >> d)) & pat);
        } else {
            const std::size_t dw = std::size_t(1) << (b - 6);
            for (std::size_t i = 0; i < w.size(); ++i)
                if (((i >> (b - 6)) & 1u) == 0) total += popcount64(w[i] ^ w[i + dw]);
        }
    }
    return total;
}

// Type(S) = min |S ∩ H| over all 2n half planes
inline std::int64_t type_of(const VertexSet& s) {
    const std::int64_t k = s.count();
    std::int64_t best = k;
    for (int axis = 1; axis <= s.dim(); ++axis) {
        std::int64_t c = s.half_count(axis);
        best = std::min(best, std::min(c, k - c));
    }
    return best;
}

// shadows S_0, S_1 of S along an axis: (n-1)-dim sets of the coordinate
// strings with x_axis deleted
inline std::pair<VertexSet, VertexSet> split_by_axis(const VertexSet& s, int axis) {
    const int n = s.dim();
    if (n < 2) throw std::invalid_argument("split_by_axis: need n >= 2");
    if (axis < 1 || axis > n) throw std::invalid_argument("split_by_axis: axis out of range");
    const int b = n - axis;
    VertexSet s0(n - 1), s1(n - 1);
    const std::uint64_t low = (1ull << b) - 1;
    for (std::uint64_t y = 0; y < (1ull << (n - 1)); ++y) {
        std::uint64_t v = ((y & ~low) << 1) | (y & low);
        if (s.test(v)) s0.set(y);
        if (s.test(v | (1ull << b))) s1.set(y);
    }
    return {s0, s1};
}

// hex round trip for the {"n":..,"bits":"0x.."} textual form
inline std::string to_hex(const VertexSet& s) {
    const auto& w = s.words();
    std::string out;
    bool lead = true;
    for (std::size_t i = w.size(); i-- > 0;) {
        for (int nib = 15; nib >= 0; --nib) {
            unsigned d = (w[i] >> (4 * nib)) & 0xf;
            if (lead && d == 0 && !(i == 0 && nib == 0)) continue;
            lead = false;
            out += "0123456789abcdef"[d];
        }
    }
    return "0x" + out;
}

inline VertexSet from_hex(int n, const std::string& hex) {
    std::string h = hex;
    if (h.rfind("0x", 0) == 0 || h.rfind("0X", 0) == 0) h = h.substr(2);
    if (h.empty()) throw std::invalid_argument("VertexSet: empty hex string");
    VertexSet s(n);
    std::uint64_t bits = std::uint64_t(1) << n;
    for (std::size_t i = 0; i < h.size(); ++i) {
        char c = h[h.size() - 1 - i];
        unsigned d;
        if (c >= '0' && c <= '9') d = unsigned(c - '0');
        else if (c >= 'a' && c <= 'f') d = unsigned(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') d = unsigned(c - 'A' + 10);
        else throw std::invalid_argument("VertexSet: bad hex digit");
        if (d && 4 * i >= bits) throw std::invalid_argument("VertexSet: hex mask exceeds 2^n bits");
        for (int bit = 0; bit < 4; ++bit)
            if (d & (1u << bit)) {
                std::uint64_t v = 4 * i + std::uint64_t(bit);
                if (v >= bits) throw std::invalid_argument("VertexSet: hex mask exceeds 2^n bits");
                s.set(v);
            }
    }
    return s;
}

} // namespace hwl
