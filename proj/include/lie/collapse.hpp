#pragma once

#include <optional>
#include <vector>

#include "lie/algebra.hpp"
#include "lie/orbits.hpp"
#include "lie/partitions.hpp"

namespace lie {

/// Conjugacy class of a Levi subalgebra of a classical algebra.
/// For B/C/D ambient (N, eps): gl blocks plus a same-type factor on R
/// coordinates, 2*sum(blocks) + R = N, and R != 2 when eps = +1.
/// For type A ambient: blocks form a composition of N and residual = 0.
/// The label is carried only by gl-only classes (R = 0) of so_{4n} whose
/// blocks are all even; those split into two conjugacy classes.
struct LeviClassical {
    Partition blocks;
    int residual = 0;
    std::optional<OrbitLabel> label;

    int block_count() const { return blocks.size(); }

    auto operator<=>(const LeviClassical&) const = default;
};

/// Whether a gl-only Levi class of so_{2n} splits into two classes (I/II):
/// residual 0, all blocks even (so the ambient size is divisible by 4).
bool levi_splits(const LeviClassical& levi, Epsilon eps);

/// dim of the Levi inside so_N/sp_N: sum of gl-block squares plus the
/// same-type factor's dimension.
int levi_dim(const LeviClassical& levi, Epsilon eps);

/// The unique largest partition of P_eps(N) dominated by p, computed by the
/// local rewrite loop: take the largest part q of the wrong parity class with
/// odd multiplicity, lower its last occurrence by one and raise the first
/// later part below q-1 (appending a zero if needed).
Partition collapse(const Partition& p, Epsilon eps);

/// Spec-shaped wrapper; alg must be B, C or D and p.total() == N.
Partition collapse(const Partition& p, const AlgebraId& alg);

/// Induction through the maximal Levi gl_l x m of so_N/sp_N (N = f.total()+2l):
/// add 2 to the first l parts of f (zero-extended) and collapse. The optional
/// levi_label is consulted only in the r = 0 label rule for so_{4n}.
NilpotentOrbit induce_max(int l, const NilpotentOrbit& f, Epsilon eps,
                          std::optional<OrbitLabel> levi_label = std::nullopt);

/// Iterated induce_max over the Levi's gl blocks, smallest block first.
/// f lives in the residual factor; the gl blocks carry the zero orbit.
NilpotentOrbit induce_chain(const LeviClassical& levi, const NilpotentOrbit& f, Epsilon eps);

/// Type A: the zero orbit induced from the Levi with the given gl blocks has
/// partition dual(blocks).
Partition richardson_a(const LeviClassical& levi, int n_std);

}  // namespace lie
