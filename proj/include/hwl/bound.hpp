#pragma once

// The cycle lower bound, end to end.
//
// Any cyclic labeling eta of Q_n induces 2^{n-1} half windows F_i; the
// wirelength equals the sum of their boundaries, each of which is at least
// theta(n, 2^{n-1}, t_i) with t_i = Type(F_i).  The pipeline massages the
// type sequence through four stages -- clamp, align, rearrange, plateau --
// whose theta-hat sums never increase, until it reaches the ideal tent
// sequence s whose sum is exactly the Gray-code wirelength 3*2^{2n-3} -
// 2^{n-1}.  Every link of that chain is verified computationally on the
// concrete input; a failed link would be a counterexample and is reported,
// never patched over.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hwl/embedding.hpp"
#include "hwl/partition.hpp"
#include "hwl/report.hpp"
#include "hwl/theta.hpp"

namespace hwl {

// ---- clamped theta and the ideal sequence ----

// theta(n, 2^{n-1}, min(t, 2^{n-3})): a valid lower bound for
// theta(n, 2^{n-1}, t) on all of [0, 2^{n-2}], exact below the clamp.
inline std::int64_t theta_hat(int n, std::int64_t t) {
    if (n < 3) throw std::invalid_argument("theta_hat: need n >= 3");
    if (t < 0 || t > (std::int64_t(1) << (n - 2)))
        throw std::invalid_argument("theta_hat: type out of [0, 2^{n-2}]");
    const std::int64_t P = std::int64_t(1) << (n - 3);
    return theta_half_type(n, std::min(t, P));
}

// minimum circular wirelength, attained by the reflected Gray labeling
inline std::int64_t gray_cycle_wl(int n) {
    if (n < 2 || n > 31) throw std::invalid_argument("gray_cycle_wl: need 2 <= n <= 31");
    return 3 * (std::int64_t(1) << (2 * n - 3)) - (std::int64_t(1) << (n - 1));
}

// ideal tent sequence: s_i = 2^{n-3} - dist(i, {1, 2^{n-2}+1}) on the cyclic
// index range of period 2^{n-1}; a rearrangement of the Gray type sequence
inline TypeSequence s_sequence(int n) {
    if (n < 3) throw std::invalid_argument("s_sequence: need n >= 3");
    const std::int64_t H = std::int64_t(1) << (n - 1);
    const std::int64_t P = std::int64_t(1) << (n - 3);
    const std::int64_t Q = std::int64_t(1) << (n - 2);
    TypeSequence s;
    s.n = n;
    s.values.reserve(std::size_t(H));
    for (std::int64_t i = 1; i <= H; ++i) {
        std::int64_t d = H;
        for (std::int64_t p : {std::int64_t(1), Q + 1}) {
            std::int64_t a = i - p >= 0 ? i - p : p - i;
            d = std::min({d, a, H - a});
        }
        s.values.push_back(P - d);
    }
    return s;
}

// ---- stage 1: clamp ----

inline TypeSequence clamp_stage(const TypeSequence& t) {
    if (t.n < 3) throw std::invalid_argument("clamp_stage: need n >= 3");
    const std::int64_t P = std::int64_t(1) << (t.n - 3);
    TypeSequence out;
    out.n = t.n;
    out.values.reserve(t.values.size());
    for (std::int64_t v : t.values) out.values.push_back(std::min(v, P));
    return out;
}

// ---- stage 2: align ----

struct AlignResult {
    TypeSequence t2;
    std::string mode;         // "rotate", "reglue", or "arc"
    std::int64_t second_peak = 0; // 0-based index of the second distinguished peak
    std::vector<std::string> notes;
};

// Rearranges the clamped sequence so position 0 and the recorded second peak
// both hold 2^{n-3}.  Strategy, in order:
//   rotate  -- some peak pair is exactly 2^{n-2} apart: rotate one to front;
//   reglue  -- cut at every peak into blocks (each starting with a peak) and
//              reorder them so a chosen subset of total length 2^{n-2} comes
//              first (subset sum over block lengths); block boundaries are
//              peak-adjacent, so circular continuity survives;
//   arc     -- no exact split exists: rotate to the peak pair whose gap is
//              closest to 2^{n-2} and let the two arcs have unequal lengths.
// The last two leave a diagnostic note.
inline AlignResult align_stage(const TypeSequence& t1) {
    if (t1.n < 3) throw std::invalid_argument("align_stage: need n >= 3");
    const std::int64_t H = std::int64_t(1) << (t1.n - 1);
    const std::int64_t P = std::int64_t(1) << (t1.n - 3);
    const std::int64_t Q = std::int64_t(1) << (t1.n - 2);
    if (std::int64_t(t1.values.size()) != H)
        throw std::invalid_argument("align_stage: sequence length != 2^{n-1}");
    for (std::int64_t v : t1.values)
        if (v < 0 || v > P) throw std::invalid_argument("align_stage: sequence not clamped");

    std::vector<std::int64_t> peaks;
    for (std::int64_t i = 0; i < H; ++i)
        if (t1.values[std::size_t(i)] == P) peaks.push_back(i);
    if (peaks.size() < 2)
        throw std::invalid_argument("align_stage: fewer than two maximal entries");

    AlignResult res;
    res.t2.n = t1.n;
    auto rotate_to = [&](std::int64_t p) {
        res.t2.values.clear();
        res.t2.values.reserve(std::size_t(H));
        for (std::int64_t j = 0; j < H; ++j)
            res.t2.values.push_back(t1.values[std::size_t((p + j) % H)]);
    };

    for (std::int64_t p : peaks) {
        bool hit = false;
        for (std::int64_t q : peaks)
            if ((q - p + H) % H == Q) { hit = true; break; }
        if (hit) {
            rotate_to(p);
            res.mode = "rotate";
            res.second_peak = Q;
            return res;
        }
    }

    // blocks between consecutive peaks (cyclic); lengths sum to H
    struct Block { std::int64_t start, len; };
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < peaks.size(); ++i) {
        const std::int64_t a = peaks[i];
        const std::int64_t b = peaks[(i + 1) % peaks.size()];
        std::int64_t len = (b - a + H) % H;
        if (len == 0) len = H;
        blocks.push_back({a, len});
    }

    // 0/1 subset sum to Q over block lengths; dp[v] = (block, previous value)
    // at first insertion, so reconstruction returns the earliest-found subset
    std::vector<std::optional<std::pair<std::size_t, std::int64_t>>> dp(std::size_t(Q) + 1);
    std::vector<bool> reach(std::size_t(Q) + 1, false);
    reach[0] = true;
    for (std::size_t bi = 0; bi < blocks.size() && !reach[std::size_t(Q)]; ++bi) {
        std::vector<std::int64_t> snapshot;
        for (std::int64_t v = 0; v <= Q; ++v)
            if (reach[std::size_t(v)]) snapshot.push_back(v);
        for (std::int64_t v : snapshot) {
            const std::int64_t w = v + blocks[bi].len;
            if (w <= Q && !reach[std::size_t(w)]) {
                reach[std::size_t(w)] = true;
                dp[std::size_t(w)] = {bi, v};
            }
        }
    }
    if (reach[std::size_t(Q)]) {
        std::vector<bool> chosen(blocks.size(), false);
        for (std::int64_t v = Q; v != 0;) {
            const auto& [bi, prev] = *dp[std::size_t(v)];
            chosen[bi] = true;
            v = prev;
        }
        res.t2.values.clear();
        res.t2.values.reserve(std::size_t(H));
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
                if (chosen[bi] != (pass == 0)) continue;
                for (std::int64_t j = 0; j < blocks[bi].len; ++j)
                    res.t2.values.push_back(t1.values[std::size_t((blocks[bi].start + j) % H)]);
            }
        res.mode = "reglue";
        res.second_peak = Q;
        res.notes.push_back("align: no antipodal peak pair; reglued " +
                            std::to_string(blocks.size()) + " blocks");
        return res;
    }

    // no exact split: best-effort arc decomposition
    std::int64_t best_score = -1, best_peak = 0, best_len = 0;
    for (std::int64_t p : peaks)
        for (std::int64_t q : peaks) {
            if (p == q) continue;
            const std::int64_t L1 = (q - p + H) % H;
            if (L1 == 0) continue;
            const std::int64_t score = L1 > Q ? L1 - Q : Q - L1;
            if (best_score < 0 || score < best_score) {
                best_score = score;
                best_peak = p;
                best_len = L1;
            }
        }
    rotate_to(best_peak);
    res.mode = "arc";
    res.second_peak = best_len;
    res.notes.push_back("align: no length-2^{n-2} block subset; arc split at " +
                        std::to_string(best_len));
    return res;
}

// ---- stages 3 and 4: rearrange and plateau ----

namespace detail {

// Rewrites both arc interiors of an aligned sequence into the canonical shape
// down-ramp / middle / up-ramp (t3, a permutation of the interior) and the
// flattened variant with the middle pinned at the theta-hat-minimal interior
// value m1 (t4).  Circular continuity guarantees every value in (m1, 2^{n-3})
// occurs at least twice in the interior; a violation is reported, not assumed
// away.
struct ArcTransform {
    bool ok = true;
    std::vector<std::int64_t> t3, t4;
    std::vector<std::int64_t> m1; // per arc; -1 when the interior is empty
    std::vector<std::string> notes;
};

inline ArcTransform arc_transform(const TypeSequence& t2, std::int64_t second_peak) {
    if (t2.n < 3) throw std::invalid_argument("arc_transform: need n >= 3");
    const std::int64_t H = std::int64_t(1) << (t2.n - 1);
    const std::int64_t P = std::int64_t(1) << (t2.n - 3);
    if (std::int64_t(t2.values.size()) != H)
        throw std::invalid_argument("arc_transform: sequence length != 2^{n-1}");
    if (second_peak <= 0 || second_peak >= H)
        throw std::invalid_argument("arc_transform: second peak out of range");
    if (t2.values[0] != P || t2.values[std::size_t(second_peak)] != P)
        throw std::invalid_argument("arc_transform: endpoints must hold 2^{n-3}");

    ArcTransform out;
    out.t3 = t2.values;
    out.t4 = t2.values;
    const std::pair<std::int64_t, std::int64_t> arcs[] = {
        {0, second_peak}, {second_peak, H - second_peak}};
    for (const auto& [a0, L] : arcs) {
        if (L <= 1) { out.m1.push_back(-1); continue; }
        std::vector<std::int64_t> interior;
        interior.reserve(std::size_t(L - 1));
        for (std::int64_t j = 1; j < L; ++j)
            interior.push_back(t2.values[std::size_t((a0 + j) % H)]);

        std::int64_t m1 = interior[0];
        std::int64_t m1th = theta_hat(t2.n, m1);
        for (std::int64_t v : interior) {
            const std::int64_t th = theta_hat(t2.n, v);
            if (th < m1th || (th == m1th && v < m1)) { m1 = v; m1th = th; }
        }
        out.m1.push_back(m1);

        std::vector<std::int64_t> count(std::size_t(P) + 1, 0);
        for (std::int64_t v : interior) ++count[std::size_t(v)];
        bool feasible = true;
        for (std::int64_t v = m1 + 1; v < P; ++v) {
            if (count[std::size_t(v)] < 2) {
                out.notes.push_back("rearrange: value " + std::to_string(v) +
                                    " occurs " + std::to_string(count[std::size_t(v)]) +
                                    " time(s) in arc at " + std::to_string(a0) +
                                    ", need 2");
                feasible = false;
                break;
            }
            count[std::size_t(v)] -= 2;
        }
        if (!feasible) { out.ok = false; continue; }

        std::vector<std::int64_t> middle;
        for (std::int64_t v = P; v >= 0; --v)
            middle.insert(middle.end(), std::size_t(count[std::size_t(v)]), v);
        const std::int64_t ramp = P - m1 - 1; // length of each ramp
        if (std::int64_t(middle.size()) != L - 1 - 2 * std::max<std::int64_t>(ramp, 0)) {
            out.notes.push_back("rearrange: middle length mismatch in arc at " +
                                std::to_string(a0));
            out.ok = false;
            continue;
        }
        std::int64_t j = 1;
        for (std::int64_t v = P - 1; v > m1; --v, ++j) {
            out.t3[std::size_t((a0 + j) % H)] = v;
            out.t4[std::size_t((a0 + j) % H)] = v;
        }
        for (std::int64_t v : middle) {
            out.t3[std::size_t((a0 + j) % H)] = v;
            out.t4[std::size_t((a0 + j) % H)] = m1;
            ++j;
        }
        for (std::int64_t v = m1 + 1; v < P; ++v, ++j) {
            out.t3[std::size_t((a0 + j) % H)] = v;
            out.t4[std::size_t((a0 + j) % H)] = v;
        }
    }
    return out;
}

} // namespace detail

inline TypeSequence rearrange_stage(const TypeSequence& t2, std::int64_t second_peak) {
    auto tr = detail::arc_transform(t2, second_peak);
    if (!tr.ok)
        throw std::invalid_argument("rearrange_stage: " +
                                    (tr.notes.empty() ? std::string("infeasible") : tr.notes[0]));
    TypeSequence out;
    out.n = t2.n;
    out.values = std::move(tr.t3);
    return out;
}

inline TypeSequence plateau_stage(const TypeSequence& t3, std::int64_t second_peak) {
    auto tr = detail::arc_transform(t3, second_peak);
    if (!tr.ok)
        throw std::invalid_argument("plateau_stage: " +
                                    (tr.notes.empty() ? std::string("infeasible") : tr.notes[0]));
    TypeSequence out;
    out.n = t3.n;
    out.values = std::move(tr.t4);
    return out;
}

// ---- the report ----

struct StageSeries {
    std::string name;
    std::vector<std::int64_t> values;
    std::int64_t sum = 0; // sum of theta_hat over the values
};

struct PipelineReport {
    int n = 0;
    std::int64_t wl = -1; // -1 when built from a bare type sequence
    std::string align_mode;
    std::int64_t second_peak = 0;
    std::vector<std::int64_t> plateau; // m1 per arc, -1 for an empty interior
    std::vector<StageSeries> stages;   // t, t1, t2, t3, t4, s
    std::int64_t gray_total = 0;
    bool verdict = false;
    std::string trust; // "certified" for n >= 5, "formula-trusted" below
    std::vector<std::string> notes;

    const StageSeries& stage(const std::string& name) const {
        for (const auto& s : stages)
            if (s.name == name) return s;
        throw std::out_of_range("PipelineReport: no stage named " + name);
    }
};

// Runs the whole chain on a type sequence whose wirelength is already known
// (pass wl = -1 to skip the wirelength link, e.g. for synthetic sequences).
inline PipelineReport pipeline_report(const TypeSequence& t, std::int64_t wl = -1) {
    if (t.n < 3) throw std::invalid_argument("pipeline_report: need n >= 3");
    const std::int64_t H = std::int64_t(1) << (t.n - 1);
    if (std::int64_t(t.values.size()) != H)
        throw std::invalid_argument("pipeline_report: sequence length != 2^{n-1}");

    PipelineReport rep;
    rep.n = t.n;
    rep.wl = wl;
    rep.gray_total = gray_cycle_wl(t.n);
    rep.trust = t.n >= 5 ? "certified" : "formula-trusted";
    rep.verdict = true;

    auto hat_sum = [&](const std::vector<std::int64_t>& v) {
        std::int64_t s = 0;
        for (std::int64_t x : v) s += theta_hat(t.n, x);
        return s;
    };
    auto push = [&](const std::string& name, std::vector<std::int64_t> v) {
        rep.stages.push_back({name, std::move(v), 0});
        rep.stages.back().sum = hat_sum(rep.stages.back().values);
        return rep.stages.back().sum;
    };

    std::string why;
    if (!check_type_sequence(t, &why)) {
        rep.notes.push_back("type sequence invalid: " + why);
        rep.verdict = false;
        push("t", t.values);
        return rep;
    }

    const std::int64_t s_t = push("t", t.values);
    const TypeSequence t1 = clamp_stage(t);
    const std::int64_t s_t1 = push("t1", t1.values);

    AlignResult al = align_stage(t1);
    detail::ArcTransform tr = detail::arc_transform(al.t2, al.second_peak);
    if (!tr.ok && al.mode != "arc") {
        // retry with a best-effort arc split before declaring failure
        rep.notes.insert(rep.notes.end(), tr.notes.begin(), tr.notes.end());
        rep.notes.push_back("rearrange failed in " + al.mode + " mode; retrying as arcs");
        AlignResult arc = al;
        std::int64_t best_score = -1;
        const std::int64_t Q = std::int64_t(1) << (t.n - 2);
        std::vector<std::int64_t> peaks;
        const std::int64_t P = std::int64_t(1) << (t.n - 3);
        for (std::int64_t i = 0; i < H; ++i)
            if (t1.values[std::size_t(i)] == P) peaks.push_back(i);
        for (std::int64_t p : peaks)
            for (std::int64_t q : peaks) {
                if (p == q) continue;
                const std::int64_t L1 = (q - p + H) % H;
                const std::int64_t score = L1 > Q ? L1 - Q : Q - L1;
                if (best_score < 0 || score < best_score) {
                    best_score = score;
                    arc.second_peak = L1;
                    arc.t2.values.clear();
                    for (std::int64_t j = 0; j < H; ++j)
                        arc.t2.values.push_back(t1.values[std::size_t((p + j) % H)]);
                }
            }
        arc.mode = "arc";
        auto tr2 = detail::arc_transform(arc.t2, arc.second_peak);
        if (tr2.ok) { al = std::move(arc); tr = std::move(tr2); }
    }
    rep.align_mode = al.mode;
    rep.second_peak = al.second_peak;
    rep.plateau = tr.m1;
    rep.notes.insert(rep.notes.end(), al.notes.begin(), al.notes.end());
    rep.notes.insert(rep.notes.end(), tr.notes.begin(), tr.notes.end());

    // defensive: align must permute, endpoints must be peaks
    {
        std::vector<std::int64_t> a = t1.values, b = al.t2.values;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
            rep.notes.push_back("align: output is not a permutation of its input");
            rep.verdict = false;
        }
    }

    const std::int64_t s_t2 = push("t2", al.t2.values);
    if (!tr.ok) {
        rep.notes.push_back("rearrange infeasible; chain stops at t2");
        rep.verdict = false;
        push("s", s_sequence(t.n).values);
        return rep;
    }
    const std::int64_t s_t3 = push("t3", tr.t3);
    const std::int64_t s_t4 = push("t4", tr.t4);
    const std::int64_t s_s = push("s", s_sequence(t.n).values);

    // t3 must be a permutation of t2
    {
        std::vector<std::int64_t> a = al.t2.values, b = rep.stage("t3").values;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
            rep.notes.push_back("rearrange: output is not a permutation of its input");
            rep.verdict = false;
        }
    }

    auto link = [&](bool held, const std::string& what) {
        if (!held) {
            rep.notes.push_back("chain link failed: " + what);
            rep.verdict = false;
        }
    };
    if (wl >= 0) link(wl >= s_t, "WL >= sum theta_hat(t)");
    link(s_t >= s_t1, "sum theta_hat(t) >= sum theta_hat(t1)");
    link(s_t2 == s_t1, "sum theta_hat(t2) == sum theta_hat(t1)");
    link(s_t3 == s_t2, "sum theta_hat(t3) == sum theta_hat(t2)");
    link(s_t4 <= s_t3, "sum theta_hat(t4) <= sum theta_hat(t3)");
    link(s_s <= s_t4, "sum theta_hat(s) <= sum theta_hat(t4)");
    link(s_s == rep.gray_total, "sum theta_hat(s) == 3*2^{2n-3} - 2^{n-1}");
    return rep;
}

// Certifies WL(eta) >= 3*2^{2n-3} - 2^{n-1} for one concrete labeling: the
// wirelength is computed by two independent routes, every half-window
// boundary is checked against theta_hat of its type, and the stage chain is
// run on the actual type sequence.
inline PipelineReport lower_bound_report(const Embedding& e) {
    e.validate();
    if (e.n < 3) throw std::invalid_argument("lower_bound_report: need n >= 3");
    const std::int64_t wl = wirelength(e, Host::cycle);

    TypeSequence t;
    t.n = e.n;
    t.values.reserve(std::size_t(1) << (e.n - 1));
    std::vector<std::string> window_notes;
    for_each_window(e, [&](std::int64_t i, const VertexSet& w) {
        const std::int64_t type = type_of(w);
        const std::int64_t bnd = boundary_size(w);
        t.values.push_back(type);
        const std::int64_t hat = theta_hat(e.n, type);
        if (bnd < hat)
            window_notes.push_back("window " + std::to_string(i) + ": boundary " +
                                   std::to_string(bnd) + " < theta_hat " +
                                   std::to_string(hat));
    });

    PipelineReport rep = pipeline_report(t, wl);
    if (!window_notes.empty()) {
        rep.notes.insert(rep.notes.end(), window_notes.begin(), window_notes.end());
        rep.verdict = false;
    }
    return rep;
}

// ---- count identities ----

// Aggregate facts about the theta table itself: the full-row sum
// sum_{i=0}^{2^{n-1}} theta(n,i) = 2^{2n-2}, the running-mean bound
// (2k+1) theta(n,k) >= 2 sum_{i<=k} theta(n,i), and the ideal sequence
// summing to the Gray wirelength.
inline IdentityReport count_identities(int n_max) {
    if (n_max < 3) throw std::invalid_argument("count_identities: need n_max >= 3");
    IdentityReport rep;
    for (int n = 1; n <= n_max; ++n) {
        const std::int64_t half = std::int64_t(1) << (n - 1);
        std::int64_t total = 0;
        for (std::int64_t k = 0; k <= half; ++k) {
            const std::int64_t th = theta_opt(n, k);
            total += th;
            rep.check((2 * k + 1) * th >= 2 * total,
                      "running-mean bound fails at n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
        }
        rep.check(total == std::int64_t(1) << (2 * n - 2),
                  "half-row theta sum != 2^{2n-2} at n=" + std::to_string(n));
    }
    for (int n = 3; n <= n_max; ++n) {
        const TypeSequence s = s_sequence(n);
        std::int64_t total = 0;
        for (std::int64_t v : s.values) total += theta_hat(n, v);
        rep.check(total == gray_cycle_wl(n),
                  "ideal-sequence theta_hat sum != Gray wirelength at n=" + std::to_string(n));
    }
    return rep;
}

} // namespace hwl
