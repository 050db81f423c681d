// Acceptance run: one line per criterion, nonzero exit if any fails.
// Usage: acceptance [path-to-sample-embedding.json]

#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "hwl/bound.hpp"
#include "hwl/json_io.hpp"
#include "hwl/oracle.hpp"
#include "hwl/takagi.hpp"

using namespace hwl;

namespace {

int failures = 0;

void criterion(int id, const std::string& what, const std::function<bool(std::string&)>& run) {
    std::string detail;
    bool ok = false;
    try {
        ok = run(detail);
    } catch (const std::exception& ex) {
        detail = std::string("exception: ") + ex.what();
    }
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << what;
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
}

bool expect(std::string& detail, bool cond, const std::string& msg) {
    if (!cond && detail.empty()) detail = msg;
    return cond;
}

} // namespace

int main(int argc, char** argv) {
    const std::string sample_path = argc > 1 ? argv[1] : "data/sample_n6.json";

    criterion(1, "gray cycle wirelength matches the closed form for n=2..12", [](std::string& d) {
        bool ok = true;
        for (int n = 2; n <= 12; ++n)
            ok &= expect(d, wirelength(gray_embedding(n), Host::cycle) == gray_cycle_wl(n),
                         "mismatch at n=" + std::to_string(n));
        return ok;
    });

    criterion(2, "exhaustive minima: 4 at n=2, 20 at n=3", [](std::string& d) {
        return expect(d, brute_min_cycle_wl(2).min_wl == 4, "n=2") &
               expect(d, brute_min_cycle_wl(3).min_wl == 20, "n=3");
    });

    criterion(3, "typed-minimum table at n=5 matches and dominates the parabola",
              [](std::string& d) {
                  const TypeTable tab = scan_type_table(5, 16);
                  struct Cell {
                      std::int64_t k, t, theta;
                  };
                  const Cell cells[] = {
                      {10, 5, 30}, {11, 5, 31}, {12, 5, 32}, {13, 5, 31}, {14, 5, 30},
                      {15, 5, 29}, {16, 5, 26}, {12, 6, 32}, {13, 6, 33}, {14, 6, 32},
                      {15, 6, 33}, {16, 6, 30}, {14, 7, 34}, {15, 7, 33}, {16, 7, 34},
                      {16, 8, 32},
                  };
                  bool ok = true;
                  for (const auto& c : cells) {
                      ok &= expect(d, tab.at(c.k, c.t) == c.theta,
                                   "cell k=" + std::to_string(c.k) + " t=" + std::to_string(c.t));
                      ok &= expect(d,
                                   Rational(c.theta) >= 32 * parabola_f(Rational(c.k) / 32),
                                   "parabola bound at k=" + std::to_string(c.k));
                  }
                  return ok;
              });

    criterion(4, "dyadic grids: interior minimum 0, edge minimum near 0.003 and positive",
              [](std::string& d) {
                  const auto [interior, edge] = verify_dyadic_grids();
                  bool ok = expect(d, interior.pass && interior.min_gap == 0, "interior");
                  ok &= expect(d, edge.pass && edge.min_gap > 0, "edge sign");
                  ok &= expect(d,
                               edge.min_gap > Rational(25, 10000) &&
                                   edge.min_gap < Rational(35, 10000),
                               "edge magnitude");
                  ok &= expect(d, edge.argmin_i == 1962 && edge.argmin_j == 170,
                               "edge argmin");
                  std::cout << "  interior min gap = " << decimal_string(interior.min_gap)
                            << " at (" << interior.argmin_i << "," << interior.argmin_j << ")\n"
                            << "  edge min gap = " << rat_num(edge.min_gap) << "/"
                            << rat_den(edge.min_gap) << " = " << decimal_string(edge.min_gap)
                            << " at (" << edge.argmin_i << "," << edge.argmin_j << ")\n";
                  return ok;
              });

    criterion(5, "count identities and takagi lemma suite up to depth 12", [](std::string& d) {
        const IdentityReport counts = count_identities(12);
        bool ok = expect(d, counts.ok,
                         counts.failures.empty() ? "count identities" : counts.failures.front());
        const CheckSuite suite = lemma_suite_takagi(12, 40, 1000);
        for (const auto& c : suite.checks)
            ok &= expect(d, c.ok, c.name + (c.detail.empty() ? "" : ": " + c.detail));
        return ok;
    });

    criterion(6, "oracle equivalence and boundary decompositions", [](std::string& d) {
        bool ok = true;
        for (int n = 1; n <= 4 && ok; ++n)
            for (std::int64_t k = 0; k <= (std::int64_t(1) << n); ++k)
                ok &= expect(d, brute_theta(n, k) == theta_opt(n, k),
                             "brute mismatch n=" + std::to_string(n) + " k=" + std::to_string(k));
        for (std::int64_t k = 10; k <= 16 && ok; ++k)
            ok &= expect(d, brute_theta(5, k) == theta_opt(5, k),
                         "brute mismatch n=5 k=" + std::to_string(k));
        std::mt19937_64 rng(0xacce97u);
        for (int n = 2; n <= 6; ++n)
            for (int it = 0; it < 2000 && ok; ++it) {
                const VertexSet s = random_subset(n, rng);
                const std::int64_t bnd = boundary_size(s);
                std::int64_t cross_total = 0;
                for (int axis = 1; axis <= n; ++axis) {
                    const auto [s0, s1] = split_by_axis(s, axis);
                    const std::int64_t cross = (s0 ^ s1).count();
                    cross_total += cross;
                    ok &= expect(d, bnd == boundary_size(s0) + boundary_size(s1) + cross,
                                 "one-axis split identity");
                    ok &= expect(d,
                                 bnd >= theta_opt(n - 1, s0.count()) +
                                            theta_opt(n - 1, s1.count()) + cross,
                                 "one-axis split bound");
                }
                ok &= expect(d, bnd == cross_total, "axis decomposition");
            }
        return ok;
    });

    criterion(7, "random embeddings: verdict true and wirelength above the bound",
              [](std::string& d) {
                  bool ok = true;
                  for (int n : {5, 6}) {
                      const std::int64_t target = gray_cycle_wl(n);
                      for (std::uint64_t it = 0; it < 10000 && ok; ++it) {
                          std::mt19937_64 rng(splitmix64(0x5eedbeef + 1000003 * n + it));
                          const Embedding e = random_embedding(n, rng);
                          const PipelineReport rep = lower_bound_report(e);
                          ok &= expect(d, rep.verdict,
                                       "verdict false at n=" + std::to_string(n) + " it=" +
                                           std::to_string(it) +
                                           (rep.notes.empty() ? "" : ": " + rep.notes.front()));
                          ok &= expect(d, rep.wl >= target, "wl below bound");
                          std::string why;
                          ok &= expect(d, check_type_sequence(type_sequence(e), &why), why);
                      }
                  }
                  for (int n = 5; n <= 10 && ok; ++n) {
                      const PipelineReport rep = lower_bound_report(gray_embedding(n));
                      ok &= expect(d, rep.verdict, "gray verdict n=" + std::to_string(n));
                      for (const auto& st : rep.stages)
                          ok &= expect(d, st.sum == gray_cycle_wl(n),
                                       "gray not a fixed point at n=" + std::to_string(n));
                  }
                  return ok;
              });

    criterion(8, "bundled sample pipeline and gray type sequence", [&](std::string& d) {
        const Embedding e = embedding_from_json(load_json_file(sample_path));
        const PipelineReport rep = lower_bound_report(e);
        bool ok = expect(d, rep.stages.size() == 6, "six stage series");
        const std::int64_t st = rep.stage("t").sum, s1 = rep.stage("t1").sum,
                           s2 = rep.stage("t2").sum, s3 = rep.stage("t3").sum,
                           s4 = rep.stage("t4").sum, ss = rep.stage("s").sum;
        ok &= expect(d, st >= s1 && s1 == s2 && s2 == s3 && s4 <= s3 && ss <= s4,
                     "stage sums out of order");
        ok &= expect(d, ss == 1504, "final sum");
        ok &= expect(d, rep.verdict, "verdict");
        const TypeSequence g = type_sequence(gray_embedding(6));
        for (std::int64_t i = 1; i <= 32; ++i)
            ok &= expect(d, g.values[std::size_t(i - 1)] == gray_type_formula(6, i),
                         "gray type sequence at i=" + std::to_string(i));
        return ok;
    });

    if (failures == 0) {
        std::cout << "all criteria passed" << std::endl;
        return 0;
    }
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
}
