#pragma once

#include <optional>
#include <vector>

#include "lie/algebra.hpp"
#include "lie/collapse.hpp"
#include "lie/orbits.hpp"
#include "lie/partitions.hpp"

namespace lie {

/// One elementary transformation: case 'a' subtracts 2 from the first
/// `index` parts; case 'b' subtracts 2 from the first index-1 parts and 1
/// from parts index, index+1. Case (b) at j = 1 needs no condition on d_0
/// (boundary treated as +infinity).
struct ElementaryStep {
    int index = 0;
    char case_tag = 'a';
    Partition result;

    auto operator<=>(const ElementaryStep&) const = default;
};

/// The smallest-index applicable transformation, or nullopt when p lies in
/// P*_eps(N) (no situation occurs).
std::optional<ElementaryStep> elementary_step(const Partition& p, Epsilon eps);

/// Membership in P*_eps(N): (i) successive parts differ by at most 1, and
/// (ii) no part v with eps * (-1)^v == -1 has multiplicity exactly 2.
bool is_rigid(const Partition& p, Epsilon eps);

/// Spec-shaped wrapper. Kind A: rigid iff the zero partition [1^N].
bool is_rigid(const Partition& p, const AlgebraId& alg);

/// Trace of the full process from p down to its rigid core, together with
/// the Levi class it exhibits p as induced from.
struct RigidityCertificate {
    int z = 0;
    std::vector<ElementaryStep> steps;
    LeviClassical levi;      // blocks = step indices (sorted), residual = core total
    Partition rigid_core;    // the fixed point of the process
};

RigidityCertificate z_of(const Partition& p, Epsilon eps);

/// Kind A: z = d_1 - 1, levi blocks = dual(p), rigid core = zero partition.
RigidityCertificate z_of(const Partition& p, const AlgebraId& alg);

/// All rigid nilpotent orbits of a classical algebra with their dimensions,
/// descending dimension. Rigid partitions are never very even, so no labels.
struct RigidOrbit {
    NilpotentOrbit orbit;
    int dim = 0;
};
std::vector<RigidOrbit> rigid_orbits(const AlgebraId& alg);

}  // namespace lie
