#include <catch2/catch_amalgamated.hpp>

#include "hwl/takagi.hpp"
#include "hwl/theta.hpp"

using namespace hwl;

namespace {
Rational rat(std::int64_t num, std::int64_t den) { return Rational(num) / den; }
}

TEST_CASE("tent maps") {
    REQUIRE(takagi_delta(1, rat(1, 2)) == rat(1, 2));
    REQUIRE(takagi_delta(2, rat(1, 4)) == rat(1, 4));
    REQUIRE(takagi_delta(4, rat(3, 8)) == 0);
    // depth i+1 tent vanishes at all dyadics of depth i
    for (int i = 1; i <= 8; ++i)
        for (std::int64_t k = 0; k <= (std::int64_t(1) << i); ++k)
            REQUIRE(takagi_delta(i + 1, rat(k, std::int64_t(1) << i)) == 0);
    REQUIRE_THROWS_AS(takagi_delta(1, Rational(2)), std::domain_error);
}

TEST_CASE("takagi partial sums") {
    for (int n = 1; n <= 12; ++n) REQUIRE(takagi_m(n, rat(1, 2)) == rat(1, 2));
    REQUIRE(takagi_m(12, rat(171, 4096)) == rat(427, 2048));
    REQUIRE(takagi_m(12, rat(171, 4096)) - 2 * rat(171, 4096) == rat(1, 8));
    REQUIRE(takagi_m(12, rat(1877, 4096)) == rat(5, 8));
    REQUIRE(takagi_m(12, rat(1963, 4096)) == rat(597, 1024));
}

TEST_CASE("dyadic takagi values equal scaled theta") {
    for (int n = 1; n <= 10; ++n) {
        const std::int64_t N = std::int64_t(1) << n;
        const auto md = takagi_m_dyadic(n, N);
        for (std::int64_t k = 0; k <= N; ++k) {
            REQUIRE(md[std::size_t(k)] == takagi_m(n, rat(k, N)));
            REQUIRE(md[std::size_t(k)] * N == theta_opt(n, k));
        }
    }
}

TEST_CASE("comparison parabola") {
    REQUIRE(parabola_f(rat(1, 2)) == rat(3, 4));
    REQUIRE(parabola_f(rat(1, 4)) == rat(5, 28));
    REQUIRE(parabola_f(rat(1, 5)) < 0);
    for (std::int64_t i = 0; i <= 16; ++i)
        REQUIRE(parabola_f(rat(i, 16)) == parabola_f(1 - rat(i, 16)));
}

TEST_CASE("bound surface") {
    for (std::int64_t k = 0; k <= 16; ++k)
        REQUIRE(takagi_a(8, rat(k, 16), Rational(0)) == takagi_m(8, rat(k, 16)));
    REQUIRE(takagi_a(12, rat(1, 2), rat(171, 4096)) == rat(3, 4));
    REQUIRE(takagi_a(12, rat(1, 2), rat(170, 4096)) == rat(767, 1024));
    REQUIRE(takagi_a(12, rat(1, 2), rat(170, 4096)) < parabola_f(rat(1, 2)));
    REQUIRE_THROWS_AS(takagi_a(4, rat(1, 4), rat(1, 2)), std::domain_error);
}

TEST_CASE("lemma constants") {
    const LemmaConstants c12 = lemma_constants(12);
    REQUIRE(c12.alpha == 171);
    REQUIRE(c12.y == rat(171, 4096));
    REQUIRE(c12.p == rat(1877, 4096));
    const LemmaConstants c6 = lemma_constants(6);
    REQUIRE(c6.alpha == 3);
    REQUIRE(theta_opt(6, 3) == 14);
    REQUIRE(theta_opt(6, 3) - 2 * 3 == 8);
    REQUIRE(theta_opt(5, 14) == 20);
    REQUIRE(lemma_constants(3).alpha == 1);
    REQUIRE(theta_opt(3, 1) - 2 == 1);
}

TEST_CASE("takagi lemma suite") {
    const CheckSuite suite = lemma_suite_takagi(12, 40, 1000);
    for (const auto& c : suite.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.ok);
    }
    REQUIRE(suite.ok());
}

TEST_CASE("dyadic grid scans") {
    const auto [interior, edge] = verify_dyadic_grids();

    REQUIRE(interior.region == "a12-interior");
    REQUIRE_FALSE(interior.strict);
    REQUIRE(interior.cells == 552270);
    REQUIRE(interior.min_gap == 0);
    REQUIRE(interior.min_count == 7);
    REQUIRE(interior.argmin_i == 2047);
    REQUIRE(interior.argmin_j == 171);
    REQUIRE(interior.pass);

    REQUIRE(edge.region == "a12-edge");
    REQUIRE(edge.strict);
    REQUIRE(edge.cells == 1145);
    REQUIRE(edge.min_gap == rat(6329, 1835008));
    REQUIRE(edge.argmin_i == 1962);
    REQUIRE(edge.argmin_j == 170);
    REQUIRE(edge.pass);
    // the paper prints this minimum as 0.003
    REQUIRE(edge.min_gap > rat(25, 10000));
    REQUIRE(edge.min_gap < rat(35, 10000));
}

TEST_CASE("critical window grids") {
    struct Expect {
        int n;
        std::int64_t cells, count, ai, aj;
    };
    const Expect table[] = {
        {3, 3, 1, 4, 1},
        {4, 12, 2, 8, 1},
        {5, 33, 2, 16, 2},
        {6, 147, 3, 32, 3},
    };
    for (const auto& ex : table) {
        const GridReport rep = verify_critical_window(ex.n);
        INFO("n=" << ex.n);
        REQUIRE(rep.region == "critical-window-n" + std::to_string(ex.n));
        REQUIRE(rep.cells == ex.cells);
        REQUIRE(rep.min_gap == 0);
        REQUIRE(rep.min_count == ex.count);
        REQUIRE(rep.argmin_i == ex.ai);
        REQUIRE(rep.argmin_j == ex.aj);
        REQUIRE(rep.pass);
        REQUIRE(rep.theta_cells == -1); // no oracle wired
    }
}

TEST_CASE("critical window full depth") {
    const GridReport rep = verify_critical_window(12);
    REQUIRE(rep.cells == 564480);
    REQUIRE(rep.min_gap == 0);
    REQUIRE(rep.min_count == 6);
    REQUIRE(rep.argmin_i == 2048);
    REQUIRE(rep.argmin_j == 171);
    REQUIRE(rep.pass);
}

TEST_CASE("grid scans are thread-count independent") {
    const auto [i1, e1] = verify_dyadic_grids(1);
    const auto [i3, e3] = verify_dyadic_grids(3);
    REQUIRE(i1.min_gap == i3.min_gap);
    REQUIRE(i1.argmin_i == i3.argmin_i);
    REQUIRE(i1.argmin_j == i3.argmin_j);
    REQUIRE(i1.min_count == i3.min_count);
    REQUIRE(e1.min_gap == e3.min_gap);
    REQUIRE(e1.argmin_i == e3.argmin_i);
    const GridReport w2 = verify_critical_window(8, {}, 2);
    const GridReport w5 = verify_critical_window(8, {}, 5);
    REQUIRE(w2.min_gap == w5.min_gap);
    REQUIRE(w2.argmin_i == w5.argmin_i);
    REQUIRE(w2.argmin_j == w5.argmin_j);
    REQUIRE(w2.cells == w5.cells);
}
