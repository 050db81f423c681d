#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "hwl/oracle.hpp"
#include "hwl/theta.hpp"
#include "hwl/vertex_set.hpp"

using namespace hwl;

namespace {

// the expensive n=5 scan runs once per process
const TypeTable& table5() {
    static const TypeTable t = scan_type_table(5, 16);
    return t;
}

using Row = std::map<std::int64_t, std::int64_t>;

void require_row(const TypeTable& tab, std::int64_t k, const Row& want) {
    const auto& row = tab.rows.at(std::size_t(k)).min_by_type;
    for (std::int64_t t = 0; t < std::int64_t(row.size()); ++t) {
        const auto it = want.find(t);
        INFO("k=" << k << " t=" << t);
        REQUIRE(row[std::size_t(t)] == (it == want.end() ? -1 : it->second));
    }
}

} // namespace

TEST_CASE("typed minima at n=3") {
    const TypeTable tab = scan_type_table(3, 4);
    require_row(tab, 1, {{0, 3}});
    require_row(tab, 2, {{0, 4}, {1, 6}});
    require_row(tab, 3, {{0, 5}, {1, 7}});
    require_row(tab, 4, {{0, 4}, {1, 6}, {2, 8}});
    for (std::int64_t k = 0; k <= 4; ++k)
        REQUIRE(tab.min_over_types(k) == theta_opt(3, k));
}

TEST_CASE("typed minima at n=4") {
    const TypeTable tab = scan_type_table(4, 8);
    require_row(tab, 1, {{0, 4}});
    require_row(tab, 2, {{0, 6}, {1, 8}});
    require_row(tab, 3, {{0, 8}, {1, 10}});
    require_row(tab, 4, {{0, 8}, {1, 12}, {2, 12}});
    require_row(tab, 5, {{0, 10}, {1, 12}, {2, 14}});
    require_row(tab, 6, {{0, 10}, {1, 12}, {2, 14}, {3, 16}});
    require_row(tab, 7, {{0, 10}, {1, 12}, {2, 12}, {3, 16}});
    require_row(tab, 8, {{0, 8}, {1, 12}, {2, 12}, {3, 16}, {4, 16}});
    for (std::int64_t k = 0; k <= 8; ++k)
        REQUIRE(tab.min_over_types(k) == theta_opt(4, k));
    // the half row realizes the closed form up to the clamp point
    for (std::int64_t t = 0; t <= 2; ++t)
        REQUIRE(tab.at(8, t) == theta_half_type(4, t));
}

TEST_CASE("brute theta agrees with the formula") {
    for (int n = 1; n <= 4; ++n)
        for (std::int64_t k = 0; k <= (std::int64_t(1) << n); ++k)
            REQUIRE(brute_theta(n, k) == theta_opt(n, k));
}

TEST_CASE("n=5 scan: untyped minima and the tenth row") {
    const TypeTable& tab = table5();
    for (std::int64_t k = 0; k <= 16; ++k)
        REQUIRE(tab.min_over_types(k) == theta_opt(5, k));
    const std::int64_t row10[] = {20, 22, 24, 26, 28, 30};
    for (std::int64_t t = 0; t <= 8; ++t)
        REQUIRE(tab.at(10, t) == (t <= 5 ? row10[t] : -1));
}

TEST_CASE("n=5 scan: high-type block") {
    const TypeTable& tab = table5();
    const std::int64_t t5[] = {30, 31, 32, 31, 30, 29, 26}; // k = 10..16
    for (std::int64_t k = 10; k <= 16; ++k) REQUIRE(tab.at(k, 5) == t5[k - 10]);
    const std::int64_t t6[] = {32, 33, 32, 33, 30}; // k = 12..16
    for (std::int64_t k = 12; k <= 16; ++k) REQUIRE(tab.at(k, 6) == t6[k - 12]);
    const std::int64_t t7[] = {34, 33, 34}; // k = 14..16
    for (std::int64_t k = 14; k <= 16; ++k) REQUIRE(tab.at(k, 7) == t7[k - 14]);
    REQUIRE(tab.at(16, 8) == 32);
}

TEST_CASE("n=5 scan: half row matches the closed form") {
    const TypeTable& tab = table5();
    for (std::int64_t t = 0; t <= 4; ++t)
        REQUIRE(tab.at(16, t) == theta_half_type(5, t));
}

TEST_CASE("typed minima split bound") {
    // theta(n,k,t) >= theta(n-1,t) + theta(n-1,k-t) + k - 2t on attained cells
    auto check = [](const TypeTable& tab, int n) {
        for (std::int64_t k = 1; k < std::int64_t(tab.rows.size()); ++k) {
            const auto& row = tab.rows[std::size_t(k)].min_by_type;
            for (std::int64_t t = 0; t < std::int64_t(row.size()); ++t) {
                if (row[std::size_t(t)] < 0) continue;
                INFO("n=" << n << " k=" << k << " t=" << t);
                REQUIRE(row[std::size_t(t)] >=
                        theta_opt(n - 1, t) + theta_opt(n - 1, k - t) + k - 2 * t);
            }
        }
    };
    check(scan_type_table(3, 4), 3);
    check(scan_type_table(4, 8), 4);
    check(table5(), 5);
}

TEST_CASE("scan is thread-count independent") {
    const TypeTable a = scan_type_table(4, 8, 1);
    const TypeTable b = scan_type_table(4, 8, 3);
    for (std::int64_t k = 0; k <= 8; ++k) {
        REQUIRE(a.rows[std::size_t(k)].min_by_type == b.rows[std::size_t(k)].min_by_type);
        REQUIRE(a.min_over_types(k) == b.min_over_types(k));
    }
}

TEST_CASE("exhaustive cycle minima at tiny n") {
    const BruteWlResult r2 = brute_min_cycle_wl(2);
    REQUIRE(r2.min_wl == 4);
    REQUIRE(r2.optima == 2);
    const BruteWlResult r3 = brute_min_cycle_wl(3);
    REQUIRE(r3.min_wl == 20);
    REQUIRE(r3.optima == 96);
    REQUIRE(r3.first_witness.map == std::vector<std::int32_t>{1, 2, 3, 4, 7, 8, 5, 6});
    REQUIRE(wirelength(r3.first_witness, Host::cycle) == 20);
}

TEST_CASE("random generators are well formed") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 50; ++it) {
        random_embedding(6, rng).validate();
        const VertexSet s = random_subset(6, rng);
        REQUIRE(s.count() <= 64);
    }
    std::mt19937_64 a(7), b(7);
    for (int it = 0; it < 20; ++it)
        REQUIRE(random_embedding(5, a).map == random_embedding(5, b).map);
    for (std::uint64_t bound : {1ull, 7ull, 100ull})
        for (int it = 0; it < 200; ++it) REQUIRE(random_below(rng, bound) < bound);
}
