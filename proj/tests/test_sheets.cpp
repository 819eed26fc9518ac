#include <doctest.h>

#include <stdexcept>

#include <map>
#include <set>

#include "lie/sheets.hpp"

using namespace lie;

namespace {

const LeviClassical& classical_levi(const Sheet& s) { return std::get<LeviClassical>(s.levi); }

}  // namespace

TEST_CASE("sl6 sheets") {
    auto sheets = enumerate_sheets(AlgebraId::parse("sl6"));
    CHECK(sheets.size() == 11);
    bool found = false;
    for (const auto& s : sheets)
        if (s.induced_orbit && s.induced_orbit->partition == Partition{3, 2, 1}) {
            found = true;
            CHECK(s.sheet_dim == 24);
            CHECK(s.orbit_dim == 22);
            CHECK(s.center_dim == 2);
            CHECK(classical_levi(s).blocks == Partition{3, 2, 1});  // dual of [3,2,1]
        }
    CHECK(found);
    std::set<Partition> induced;
    for (const auto& s : sheets) induced.insert(s.induced_orbit->partition);
    CHECK(induced.size() == 11);  // one sheet per nilpotent orbit
}

TEST_CASE("so12 sheets over one orbit") {
    auto sheets = enumerate_sheets(AlgebraId::parse("so12"));
    std::vector<Sheet> hits;
    for (const auto& s : sheets)
        if (s.induced_orbit && s.induced_orbit->partition == Partition{3, 3, 1, 1, 1, 1, 1, 1})
            hits.push_back(s);
    REQUIRE(hits.size() == 2);
    std::set<std::pair<Partition, int>> keys;
    for (const auto& s : hits) {
        CHECK(s.sheet_dim == 35);
        keys.insert({classical_levi(s).blocks, classical_levi(s).residual});
    }
    CHECK(keys == std::set<std::pair<Partition, int>>{{Partition{2}, 8}, {Partition{1}, 10}});
}

TEST_CASE("so8 orbit in sheets of two different dimensions") {
    // The uniform-dimension claim fails here: gl2 x so4 and gl3 x gl1 have
    // equal dimension, so both induce the unique 18-dimensional orbit.
    auto sheets = enumerate_sheets(AlgebraId::parse("so8"));
    std::set<int> dims;
    for (const auto& s : sheets)
        if (s.induced_orbit && s.induced_orbit->partition == Partition{3, 3, 1, 1})
            dims.insert(s.sheet_dim);
    CHECK(dims == std::set<int>{19, 20});
}

TEST_CASE("labeled sheets in so8") {
    auto sheets = enumerate_sheets(AlgebraId::parse("so8"));
    std::map<Partition, std::set<std::optional<OrbitLabel>>> labels;
    int split_levis = 0;
    for (const auto& s : sheets) {
        REQUIRE(s.induced_orbit);
        labels[s.induced_orbit->partition].insert(s.induced_orbit->label);
        if (classical_levi(s).label) ++split_levis;
    }
    CHECK(split_levis == 4);  // ([4];0) and ([2,2];0), twice each
    CHECK(labels[Partition{4, 4}] ==
          std::set<std::optional<OrbitLabel>>{OrbitLabel::I, OrbitLabel::II});
    CHECK(labels[Partition{2, 2, 2, 2}] ==
          std::set<std::optional<OrbitLabel>>{OrbitLabel::I, OrbitLabel::II});
    CHECK(labels[Partition{7, 1}] == std::set<std::optional<OrbitLabel>>{std::nullopt});
}

TEST_CASE("strata") {
    auto a5 = stratum(AlgebraId::parse("A5"), 12);
    CHECK(a5.dim_gm == 27);
    CHECK(a5.sheet_count == 2);
    std::set<int> dims;
    for (const auto& s : a5.sheets) dims.insert(s.sheet_dim);
    CHECK(dims == std::set<int>{26, 27});

    auto b3 = stratum(AlgebraId::parse("B3"), 4);
    CHECK(b3.sheet_count == 1);
    CHECK(b3.dim_gm == 8);
    CHECK(b3.sheets.front().rigid_dim == 8);  // the rigid orbit is its own sheet

    auto e6 = stratum(AlgebraId::parse("E6"), 33);
    CHECK(e6.sheet_count == 2);
    std::multiset<int> e6_dims;
    for (const auto& s : e6.sheets) e6_dims.insert(s.sheet_dim);
    CHECK(e6_dims == std::multiset<int>{69, 70});

    auto f4 = stratum(AlgebraId::parse("F4"), 20);
    std::multiset<int> f4_dims;
    for (const auto& s : f4.sheets) f4_dims.insert(s.sheet_dim);
    CHECK(f4_dims == std::multiset<int>{41, 41, 42});

    CHECK(stratum(AlgebraId::parse("B3"), 3).sheet_count == 0);  // 6 is not in N_g
    CHECK(stratum(AlgebraId::parse("B3"), 3).dim_gm == 0);
}

TEST_CASE("full tables") {
    auto a5 = full_table(AlgebraId::parse("A5"));
    std::vector<int> dims;
    for (const auto& r : a5) dims.push_back(r.dim_gm);
    CHECK(dims == std::vector<int>{35, 32, 29, 27, 24, 20, 17, 11, 0});

    auto g2 = full_table(AlgebraId::parse("G2"));
    std::vector<std::pair<int, int>> got;
    for (const auto& r : g2) got.push_back({r.orbit_dim, r.dim_gm});
    CHECK(got == std::vector<std::pair<int, int>>{{12, 14}, {10, 11}, {8, 8}, {6, 6}, {0, 0}});

    auto f4 = full_table(AlgebraId::parse("F4"));
    std::vector<int> f4_dims;
    for (const auto& r : f4) f4_dims.push_back(r.dim_gm);
    CHECK(f4_dims == std::vector<int>{52, 49, 46, 44, 42, 39, 37, 34, 31, 28, 22, 16, 0});

    auto b2 = full_table(AlgebraId::parse("B2"));
    std::vector<std::pair<int, int>> b2_pairs;
    for (const auto& r : b2) b2_pairs.push_back({r.orbit_dim, r.dim_gm});
    CHECK(b2_pairs == std::vector<std::pair<int, int>>{{8, 10}, {6, 7}, {4, 4}, {0, 0}});
}

TEST_CASE("sheet counts per algebra") {
    CHECK(enumerate_sheets(AlgebraId::parse("G2")).size() == 6);
    CHECK(enumerate_sheets(AlgebraId::parse("F4")).size() == 20);
    CHECK(enumerate_sheets(AlgebraId::parse("E6")).size() == 24);
    CHECK(enumerate_sheets(AlgebraId::parse("E7")).size() == 54);
    CHECK(enumerate_sheets(AlgebraId::parse("E8")).size() == 91);
}

TEST_CASE("every nilpotent orbit lies in at least one sheet") {
    for (const char* name : {"A4", "B3", "B5", "C3", "C6", "D4", "D5", "D6"}) {
        auto alg = AlgebraId::parse(name);
        std::set<NilpotentOrbit> covered;
        for (const auto& s : enumerate_sheets(alg)) {
            REQUIRE(s.induced_orbit);
            covered.insert(*s.induced_orbit);
        }
        for (const auto& o : nilpotent_orbits(alg)) CHECK(covered.count(o) == 1);
    }
}

TEST_CASE("sheet identity counts pairs, not induced orbits") {
    // Two sheets of so12 share the induced orbit [3,3,1^6]; the pair count
    // exceeds the orbit count.
    auto alg = AlgebraId::parse("D6");
    auto sheets = enumerate_sheets(alg);
    std::set<NilpotentOrbit> orbits;
    for (const auto& s : sheets) orbits.insert(*s.induced_orbit);
    CHECK(sheets.size() > orbits.size());
}

TEST_CASE("jordan classes") {
    auto c3 = jordan_classes(AlgebraId::parse("C3"));
    bool found = false, found_rigid = false;
    for (const auto& jc : c3) {
        if (jc.levi.blocks == Partition{1} && jc.levi.residual == 4 && jc.gl_orbits.size() == 1 &&
            jc.residual_orbit && jc.residual_orbit->partition == Partition{2, 2}) {
            found = true;
            CHECK_FALSE(jc.dense_in_sheet);  // [2,2] is not rigid in sp4 (z = 1)
        }
        if (jc.levi.blocks == Partition{1} && jc.levi.residual == 4 && jc.residual_orbit &&
            jc.residual_orbit->partition == Partition{2, 1, 1}) {
            found_rigid = true;
            CHECK(jc.dense_in_sheet);  // [2,1^2] is rigid in sp4
        }
        if (jc.levi.blocks.empty() && jc.levi.residual == 6) {
            // Full Levi: the class of an orbit is the orbit itself.
            CHECK(jc.dim == orbit_dim_bcd(jc.residual_orbit->partition, AlgebraId::parse("C3")));
            CHECK(jc.dense_in_sheet == is_rigid(jc.residual_orbit->partition, Epsilon::minus));
        }
    }
    CHECK(found);
    CHECK(found_rigid);

    // Dense classes are exactly the sheets.
    int dense = 0;
    for (const auto& jc : c3)
        if (jc.dense_in_sheet) ++dense;
    CHECK(dense == static_cast<int>(enumerate_sheets(AlgebraId::parse("C3")).size()));

    // Type A: pair counting against the product formula.
    auto a3 = jordan_classes(AlgebraId::parse("A3"));
    size_t expected = 0;
    for (const auto& blocks : partitions(4)) {
        // multiset choices of one partition per block
        std::map<int, int> mult;
        for (int b : blocks.parts()) ++mult[b];
        size_t ways = 1;
        for (auto [b, c] : mult) {
            // (p(b) + c - 1 choose c)
            size_t pb = partitions(b).size(), num = 1, den = 1;
            for (int i = 0; i < c; ++i) {
                num *= pb + static_cast<size_t>(c - 1 - i);
                den *= static_cast<size_t>(i + 1);
            }
            ways *= num / den;
        }
        expected += ways;
    }
    CHECK(a3.size() == expected);
    CHECK_THROWS_AS(jordan_classes(AlgebraId::parse("F4")), std::invalid_argument);
}

TEST_CASE("jordan class dimensions agree with sheets on dense data") {
    for (const char* name : {"B3", "C3", "D4"}) {
        auto alg = AlgebraId::parse(name);
        std::map<std::tuple<Partition, int, std::optional<OrbitLabel>, Partition>, int> sheet_dims;
        for (const auto& s : enumerate_sheets(alg)) {
            const auto& lc = std::get<LeviClassical>(s.levi);
            sheet_dims[{lc.blocks, lc.residual, lc.label, s.rigid_orbit->partition}] = s.sheet_dim;
        }
        for (const auto& jc : jordan_classes(alg)) {
            if (!jc.dense_in_sheet) continue;
            auto key = std::make_tuple(jc.levi.blocks, jc.levi.residual, jc.levi.label,
                                       jc.residual_orbit->partition);
            REQUIRE(sheet_dims.count(key) == 1);
            CHECK(sheet_dims[key] == jc.dim);
        }
    }
}

TEST_CASE("codimension three") {
    CHECK(check_codim3(AlgebraId::parse("A5")));
    CHECK(check_codim3(AlgebraId::parse("B2")));
    CHECK(check_codim3(AlgebraId::parse("E8")));
    CHECK_THROWS_AS(check_codim3(AlgebraId::parse("A1")), std::invalid_argument);

    auto top = stratum(AlgebraId::parse("D5"), AlgebraId::parse("D5").d_g());
    CHECK(top.sheet_count == 1);
    CHECK(top.dim_gm == 45);
}

TEST_CASE("levi classes enumerate the block data") {
    auto b2 = levi_classes(AlgebraId::parse("B2"));
    // (;5), ([1];3), ([2];1), ([1,1];1) -- residual 5,3,1 only (odd N).
    CHECK(b2.size() == 4);
    for (const auto& l : b2) CHECK((2 * l.blocks.total() + l.residual) == 5);

    auto d4 = levi_classes(AlgebraId::parse("D4"));
    int split = 0, plain = 0;
    for (const auto& l : d4) {
        CHECK(l.residual != 2);
        l.label ? ++split : ++plain;
    }
    CHECK(split == 4);
    CHECK(plain == 7);
}
