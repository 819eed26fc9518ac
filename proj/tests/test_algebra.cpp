#include <doctest.h>

#include <stdexcept>

#include "lie/algebra.hpp"

using namespace lie;

TEST_CASE("algebra parsing and synonyms") {
    CHECK(AlgebraId::parse("A5") == AlgebraId::make(AlgebraKind::A, 5));
    CHECK(AlgebraId::parse("sl6") == AlgebraId::make(AlgebraKind::A, 5));
    CHECK(AlgebraId::parse("so7") == AlgebraId::make(AlgebraKind::B, 3));
    CHECK(AlgebraId::parse("sp6") == AlgebraId::make(AlgebraKind::C, 3));
    CHECK(AlgebraId::parse("so12") == AlgebraId::make(AlgebraKind::D, 6));
    CHECK(AlgebraId::parse("so5") == AlgebraId::make(AlgebraKind::B, 2));
    CHECK(AlgebraId::parse("G2").kind == AlgebraKind::G2);
    CHECK(AlgebraId::parse("E8").rank == 8);
    CHECK_THROWS_AS(AlgebraId::parse("so4"), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraId::parse("so2"), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraId::parse("sp7"), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraId::parse("E9"), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraId::parse("D2"), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraId::parse(""), std::invalid_argument);
    CHECK(AlgebraId::parse("D3") == AlgebraId::make(AlgebraKind::D, 3));  // so6 accepted
}

TEST_CASE("derived constants") {
    struct Row { const char* name; int dim, rank, n_std; };
    const Row rows[] = {
        {"A5", 35, 5, 6}, {"B3", 21, 3, 7}, {"C3", 21, 3, 6}, {"D6", 66, 6, 12},
    };
    for (const auto& r : rows) {
        auto a = AlgebraId::parse(r.name);
        CHECK(a.dim() == r.dim);
        CHECK(a.rank == r.rank);
        CHECK(a.standard_rep_size() == r.n_std);
    }
    CHECK(AlgebraId::parse("G2").dim() == 14);
    CHECK(AlgebraId::parse("F4").dim() == 52);
    CHECK(AlgebraId::parse("E6").dim() == 78);
    CHECK(AlgebraId::parse("E7").dim() == 133);
    CHECK(AlgebraId::parse("E8").dim() == 248);
    CHECK(AlgebraId::parse("B3").epsilon() == Epsilon::plus);
    CHECK(AlgebraId::parse("C3").epsilon() == Epsilon::minus);
    CHECK(AlgebraId::parse("D6").epsilon() == Epsilon::plus);
    CHECK(AlgebraId::parse("E8").d_g() == 120);
    CHECK(AlgebraId::parse("A5").long_name() == "sl6");
    CHECK(AlgebraId::parse("D6").long_name() == "so12");
}
