#include <doctest.h>

#include <stdexcept>

#include <set>

#include "lie/exceptional.hpp"

using namespace lie;

TEST_CASE("row counts and headline rows") {
    CHECK(exc_rows(AlgebraId::parse("G2")).size() == 4);
    CHECK(exc_rows(AlgebraId::parse("F4")).size() == 12);
    CHECK(exc_rows(AlgebraId::parse("E6")).size() == 17);
    CHECK(exc_rows(AlgebraId::parse("E7")).size() == 32);
    CHECK(exc_rows(AlgebraId::parse("E8")).size() == 41);

    const auto& g2 = exc_rows(AlgebraId::parse("G2"));
    CHECK(g2.front().name == "Ø");
    CHECK(g2.front().s_count == 0);
    CHECK(g2.front().pos_roots == 0);
    CHECK(g2.back().rigid_dims == std::vector<int>{8, 6, 0});

    bool found_b2 = false;
    for (const auto& row : exc_rows(AlgebraId::parse("F4")))
        if (row.name == "B2") {
            found_b2 = true;
            CHECK(row.s_count == 2);
            CHECK(row.pos_roots == 4);
            CHECK(row.rigid_dims == std::vector<int>{4, 0});
        }
    CHECK(found_b2);

    int primed = 0;
    for (const auto& row : exc_rows(AlgebraId::parse("E7")))
        if (row.name == "(3A1)'" || row.name == "(3A1)''") {
            ++primed;
            CHECK(row.s_count == 3);
            CHECK(row.pos_roots == 3);
            CHECK(row.rigid_dims == std::vector<int>{0});
        }
    CHECK(primed == 2);
}

TEST_CASE("rigid dimension sets") {
    CHECK(exc_rigid_dims(AlgebraId::parse("G2")) == std::vector<int>{8, 6, 0});
    CHECK(exc_rigid_dims(AlgebraId::parse("F4")) == std::vector<int>{36, 34, 28, 22, 16, 0});
    CHECK(exc_rigid_dims(AlgebraId::parse("E6")) == std::vector<int>{54, 40, 22, 0});
    CHECK(exc_rigid_dims(AlgebraId::parse("E7")) ==
          std::vector<int>{92, 90, 82, 70, 64, 52, 34, 0});
    CHECK(exc_rigid_dims(AlgebraId::parse("E8")) ==
          std::vector<int>{202, 200, 188, 182, 176, 172, 168, 164, 162, 154, 146, 136, 128, 112,
                           92, 58, 0});
}

TEST_CASE("recomputed sheet dimensions") {
    auto find_row = [](const AlgebraId& alg, const std::string& name) {
        const auto& rows = exc_rows(alg);
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (rows[static_cast<size_t>(i)].name == name) return i;
        FAIL("row not found: ", name);
        return -1;
    };

    auto e7 = AlgebraId::parse("E7");
    int d4 = find_row(e7, "D4");
    std::set<std::pair<int, int>> got;  // (p, sheet_dim)
    for (const auto& sd : exc_sheet_dims(e7))
        if (sd.row_index == d4) got.insert({sd.rigid_dim, sd.sheet_dim});
    CHECK(got == std::set<std::pair<int, int>>{{16, 121}, {10, 115}, {0, 105}});

    auto f4 = AlgebraId::parse("F4");
    int empty = find_row(f4, "Ø");
    for (const auto& sd : exc_sheet_dims(f4))
        if (sd.row_index == empty) {
            CHECK(sd.d_sp == 48);
            CHECK(sd.sheet_dim == 52);
        }

    auto e8 = AlgebraId::parse("E8");
    int pi_row = find_row(e8, "E8");
    for (const auto& sd : exc_sheet_dims(e8))
        if (sd.row_index == pi_row) CHECK(sd.d_sp == sd.rigid_dim);
}

TEST_CASE("pair counts") {
    auto count = [](const char* name) {
        return exc_sheet_dims(AlgebraId::parse(name)).size();
    };
    CHECK(count("G2") == 6);
    CHECK(count("F4") == 20);
    CHECK(count("E6") == 24);
    CHECK(count("E7") == 54);
    CHECK(count("E8") == 91);
}

TEST_CASE("levi name parsing") {
    CHECK(parse_levi_name("Ø").empty());
    auto f = parse_levi_name("A3+A2+A1");
    REQUIRE(f.size() == 3);
    CHECK(f[0].rank == 3);
    CHECK(f[2].rank == 1);

    auto m = parse_levi_name("2A2+2A1");
    CHECK(m.size() == 4);

    auto primed = parse_levi_name("(3A1)''");
    CHECK(primed.size() == 3);
    for (const auto& x : primed) CHECK(x.rank == 1);

    auto tilde = parse_levi_name("Ã1+A2");  // Ã1+A2
    REQUIRE(tilde.size() == 2);
    CHECK(tilde[0].tilde);
    CHECK_FALSE(tilde[1].tilde);

    auto e6 = parse_levi_name("E6+A1");
    REQUIRE(e6.size() == 2);
    CHECK(e6[0].kind == AlgebraKind::E6);

    CHECK_THROWS_AS(parse_levi_name("Q7"), std::invalid_argument);
    CHECK_THROWS_AS(parse_levi_name("A"), std::invalid_argument);
}

TEST_CASE("documented errata") {
    const auto& errata = exc_known_errata();
    REQUIRE(errata.size() == 2);
    CHECK(errata[0].algebra == "E6");
    CHECK(errata[0].column == "III");
    CHECK(errata[0].printed == 56);
    CHECK(errata[0].value == 36);
    CHECK(errata[1].algebra == "E8");
    CHECK(errata[1].column == "V");
    CHECK(errata[1].printed == 64);
    CHECK(errata[1].value == 164);
}
