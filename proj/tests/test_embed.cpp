#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hwl/bound.hpp"
#include "hwl/embedding.hpp"
#include "hwl/oracle.hpp"
#include "hwl/partition.hpp"

using namespace hwl;

TEST_CASE("gray embedding small cases") {
    const Embedding g1 = gray_embedding(1);
    REQUIRE(g1.map == std::vector<std::int32_t>{1, 2});
    const Embedding g2 = gray_embedding(2);
    REQUIRE(g2.map[0b00] == 1);
    REQUIRE(g2.map[0b01] == 2);
    REQUIRE(g2.map[0b11] == 3);
    REQUIRE(g2.map[0b10] == 4);
    REQUIRE(gray_embedding(3).map[0b111] == 6);
}

TEST_CASE("gray embedding is a hamilton cycle") {
    for (int n = 1; n <= 10; ++n) {
        const auto inv = gray_embedding(n).inverse();
        const std::int64_t N = std::int64_t(1) << n;
        for (std::int64_t i = 0; i < N; ++i)
            REQUIRE(popcount64(std::uint64_t(inv[std::size_t(i)] ^
                                              inv[std::size_t((i + 1) % N)])) == 1);
    }
}

TEST_CASE("wirelength examples") {
    REQUIRE(wirelength(gray_embedding(3), Host::cycle) == 20);
    Embedding id2;
    id2.n = 2;
    id2.map = {1, 2, 3, 4};
    REQUIRE(wirelength(id2, Host::cycle) == 6);
    REQUIRE(wirelength(gray_embedding(1), Host::path) == 1);
}

TEST_CASE("gray cycle wirelength matches the closed form") {
    for (int n = 2; n <= 12; ++n)
        REQUIRE(wirelength(gray_embedding(n), Host::cycle) == gray_cycle_wl(n));
}

TEST_CASE("gray path wirelength sums the theta column") {
    // Gray prefixes are cubal, so the path cut sum collapses to
    // sum_k theta(n,k) = 2^{2n-1} - 2^{n-1}
    for (int n = 1; n <= 8; ++n)
        REQUIRE(wirelength(gray_embedding(n), Host::path) ==
                (std::int64_t(1) << (2 * n - 1)) - (std::int64_t(1) << (n - 1)));
}

TEST_CASE("partition path windows and round trip") {
    const PartitionPath p2 = partition_path(gray_embedding(2));
    REQUIRE(p2.sets.size() == 2);
    REQUIRE(p2.sets[0] == from_hex(2, "0x3"));  // {00, 01}
    REQUIRE(p2.sets[1] == from_hex(2, "0xa"));  // {01, 11}
    std::mt19937_64 rng(0x5eed5u);
    for (int it = 0; it < 100; ++it) {
        const Embedding e = random_embedding(5, rng);
        const PartitionPath p = partition_path(e);
        p.validate();
        REQUIRE(embedding_of(p).map == e.map);
        std::int64_t cut = 0;
        for (const auto& s : p.sets) cut += boundary_size(s);
        REQUIRE(cut == wirelength(e, Host::cycle));
    }
}

TEST_CASE("window swap distance is a metric") {
    std::mt19937_64 rng(0xd157a6ceu);
    const Embedding e = random_embedding(6, rng);
    const PartitionPath p = partition_path(e);
    auto dd = [](const VertexSet& u, const VertexSet& w) { return (u ^ w).count(); };
    const std::size_t m = p.sets.size();
    for (int it = 0; it < 500; ++it) {
        const auto& u = p.sets[random_below(rng, m)];
        const auto& v = p.sets[random_below(rng, m)];
        const auto& w = p.sets[random_below(rng, m)];
        REQUIRE(dd(u, w) <= dd(u, v) + dd(v, w));
        REQUIRE(dd(u, v) == dd(v, u));
        REQUIRE((dd(u, v) == 0) == (u == v));
    }
    // adjacent windows differ by one swap
    for (std::size_t i = 0; i + 1 < m; ++i) REQUIRE(dd(p.sets[i], p.sets[i + 1]) == 2);
}

TEST_CASE("gray type sequence follows the tent formula") {
    const TypeSequence t4 = type_sequence(gray_embedding(4));
    REQUIRE(t4.values == std::vector<std::int64_t>{0, 1, 2, 1, 0, 1, 2, 1});
    for (int n = 3; n <= 12; ++n) {
        const TypeSequence t = type_sequence(gray_embedding(n));
        for (std::int64_t i = 1; i <= std::int64_t(t.values.size()); ++i)
            REQUIRE(t.values[std::size_t(i - 1)] == gray_type_formula(n, i));
        std::string why;
        REQUIRE(check_type_sequence(t, &why));
    }
}

TEST_CASE("type sequence continuity on random embeddings") {
    std::mt19937_64 rng(0x7e57u);
    for (int n : {5, 6}) {
        for (int it = 0; it < 200; ++it) {
            const TypeSequence t = type_sequence(random_embedding(n, rng));
            std::string why;
            INFO(why);
            REQUIRE(check_type_sequence(t, &why));
        }
    }
}

TEST_CASE("gray identities") {
    for (int n = 3; n <= 12; ++n) {
        const IdentityReport rep = gray_identities_check(n);
        INFO((rep.failures.empty() ? std::string() : rep.failures.front()));
        REQUIRE(rep.ok);
    }
    // boundary sizes of the first and the peak window at n=6
    const PartitionPath p = partition_path(gray_embedding(6));
    REQUIRE(boundary_size(p.sets[0]) == 32);
    REQUIRE(boundary_size(p.sets[8]) == 48);
}
