#pragma once

#include <optional>
#include <vector>

#include "lie/algebra.hpp"
#include "lie/partitions.hpp"

namespace lie {

/// A nilpotent orbit, identified by its partition. The label distinguishes
/// the two orbits attached to a very even partition in type D.
struct NilpotentOrbit {
    Partition partition;
    std::optional<OrbitLabel> label;

    auto operator<=>(const NilpotentOrbit&) const = default;
};

/// 2m(p) in sl_N: N^2 - sum of squared dual parts. Requires p.total() == n_std.
int orbit_dim_a(const Partition& p, int n_std);

/// 2m(p) in so_N / sp_N where N = p.total(); p must lie in P_eps(N).
/// Valid for every N >= 0, including the degenerate tails of induction chains.
int orbit_dim_eps(const Partition& p, Epsilon eps);

/// Dispatch on a B/C/D algebra; validates p against the algebra's (N, eps).
int orbit_dim_bcd(const Partition& p, const AlgebraId& alg);

/// Dimension of so_N (eps = plus) or sp_N (eps = minus) as abstract reductive
/// algebras of the degenerate sizes too: (N^2 -+ N)/2.
int form_algebra_dim(int n_std, Epsilon eps);

/// N_g: the sorted set of nilpotent orbit dimensions. Classical kinds are
/// enumerated; exceptional kinds use the embedded table data.
std::vector<int> orbit_dims(const AlgebraId& alg);

/// All nilpotent orbits of a classical algebra, descending dimension.
/// Very even partitions in type D appear twice, labeled I and II.
std::vector<NilpotentOrbit> nilpotent_orbits(const AlgebraId& alg);

}  // namespace lie
