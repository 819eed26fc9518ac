#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lie/algebra.hpp"
#include "lie/collapse.hpp"
#include "lie/exceptional.hpp"
#include "lie/orbits.hpp"
#include "lie/rigidity.hpp"

namespace lie {

/// Reference into the exceptional Levi tables.
struct ExcLeviRef {
    AlgebraId algebra;
    int row_index = 0;
    std::string name;

    auto operator<=>(const ExcLeviRef&) const = default;
};

using LeviRef = std::variant<LeviClassical, ExcLeviRef>;

/// A sheet, keyed by its (Levi class, rigid orbit) data. For exceptional
/// algebras the rigid orbit and the induced orbit are known by dimension
/// only; classical kinds carry full partitions.
struct Sheet {
    LeviRef levi;
    std::optional<NilpotentOrbit> rigid_orbit;
    int rigid_dim = 0;
    std::optional<NilpotentOrbit> induced_orbit;
    int orbit_dim = 0;   // 2m of the unique nilpotent orbit in the sheet
    int center_dim = 0;  // dim of the Levi's center (its gl-block count)
    int sheet_dim = 0;   // orbit_dim + center_dim

    auto operator<=>(const Sheet&) const = default;
};

/// All sheets of g^(m) for one m, with the max convention dim(empty) = 0.
struct StratumReport {
    int m = 0;
    int orbit_dim = 0;  // 2m
    std::vector<Sheet> sheets;
    int dim_gm = 0;
    int sheet_count = 0;

    auto operator<=>(const StratumReport&) const = default;
};

/// Every sheet of the algebra, ordered by descending orbit dimension, then
/// descending sheet dimension, then a canonical Levi key.
std::vector<Sheet> enumerate_sheets(const AlgebraId& alg);

StratumReport stratum(const AlgebraId& alg, int m);

/// One report per 2m in orbit_dims(alg), descending.
std::vector<StratumReport> full_table(const AlgebraId& alg);

/// A Jordan class: a Levi class with an arbitrary nilpotent orbit on it.
/// Classical kinds only.
struct JordanClass {
    LeviClassical levi;
    std::vector<Partition> gl_orbits;            // aligned with levi.blocks
    std::optional<NilpotentOrbit> residual_orbit;  // absent for type A
    int dim = 0;
    bool dense_in_sheet = false;
};

std::vector<JordanClass> jordan_classes(const AlgebraId& alg);

/// Every sheet of the stratum at m = d_g - 1 has dimension dim g - 3.
/// Requires dim g > rk g + 3; throws std::invalid_argument otherwise.
bool check_codim3(const AlgebraId& alg);

/// All Levi classes of a classical B/C/D algebra (deduplicated block data,
/// split I/II classes included).
std::vector<LeviClassical> levi_classes(const AlgebraId& alg);

}  // namespace lie
