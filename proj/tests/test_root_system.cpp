#include <doctest.h>

#include "lie/root_system.hpp"

using namespace lie;

TEST_CASE("positive root counts") {
    struct Row { const char* name; int count; };
    const Row rows[] = {
        {"A1", 1}, {"A5", 15}, {"A8", 36}, {"B2", 4}, {"B6", 36}, {"C3", 9}, {"C6", 36},
        {"D3", 6}, {"D7", 42}, {"G2", 6},  {"F4", 24}, {"E6", 36}, {"E7", 63}, {"E8", 120},
    };
    for (const auto& r : rows) {
        auto rs = RootSystem::generate(AlgebraId::parse(r.name));
        CHECK(rs.positive_count() == r.count);
        CHECK(rs.algebra().dim() == rs.algebra().rank + 2 * r.count);
        for (const auto& root : rs.positive_roots())
            for (int c : root) CHECK(c >= 0);
    }
}

TEST_CASE("subsystem counts") {
    auto e6 = RootSystem::generate(AlgebraId::parse("E6"));
    CHECK(e6.subsystem_pos_count({0}) == 1);
    CHECK(e6.subsystem_pos_count({}) == 0);

    auto f4 = RootSystem::generate(AlgebraId::parse("F4"));
    CHECK(f4.subsystem_pos_count({1, 2}) == 4);  // the B2 sub-diagram

    auto e8 = RootSystem::generate(AlgebraId::parse("E8"));
    auto d7 = e8.subsets_matching("D7");
    REQUIRE_FALSE(d7.empty());
    for (const auto& s : d7) CHECK(e8.subsystem_pos_count(s) == 42);
}

TEST_CASE("sub-diagram typing") {
    auto f4 = RootSystem::generate(AlgebraId::parse("F4"));
    auto b2 = f4.subset_type({1, 2});
    REQUIRE(b2.size() == 1);
    CHECK(b2.front().kind == AlgebraKind::B);
    CHECK(b2.front().rank == 2);

    auto short_a1 = f4.subset_type({3});
    REQUIRE(short_a1.size() == 1);
    CHECK(short_a1.front().kind == AlgebraKind::A);
    CHECK(short_a1.front().tilde);

    auto long_a1 = f4.subset_type({0});
    CHECK_FALSE(long_a1.front().tilde);

    CHECK(f4.subsets_matching("B3").size() == 1);
    CHECK(f4.subsets_matching("C3").size() == 1);
    CHECK_FALSE(f4.subsets_matching("A1+Ã1").empty());  // A1 + Ã1

    auto e7 = RootSystem::generate(AlgebraId::parse("E7"));
    CHECK_FALSE(e7.subsets_matching("(3A1)'").empty());
    CHECK_FALSE(e7.subsets_matching("E6").empty());
    auto d4 = e7.subsets_matching("D4");
    REQUIRE_FALSE(d4.empty());
    for (const auto& s : d4) CHECK(e7.subsystem_pos_count(s) == 12);
}

TEST_CASE("every subset of a classical diagram types consistently") {
    auto d5 = RootSystem::generate(AlgebraId::parse("D5"));
    for (unsigned mask = 0; mask < 32; ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < 5; ++i)
            if (mask & (1u << i)) subset.push_back(i);
        int total = 0;
        for (const auto& f : d5.subset_type(subset)) total += factor_positive_roots(f);
        CHECK(total == d5.subsystem_pos_count(subset));
    }
}
