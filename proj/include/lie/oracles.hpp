#pragma once

#include <optional>
#include <vector>

#include "lie/algebra.hpp"
#include "lie/collapse.hpp"
#include "lie/partitions.hpp"

namespace lie {
/// Independent reference implementations used by the verify suites and the
/// tests. Nothing here touches the collapse / induction / rigidity code
/// paths they are meant to check.
namespace oracle {

/// The dominance-maximum definition of the collapse: the unique largest
/// element of P_eps(N) dominated by p, found by exhaustive enumeration.
/// Returns nullopt if no candidate dominates all others (never happens;
/// uniqueness is part of what the caller asserts).
std::optional<Partition> dominance_max_collapse(const Partition& p, Epsilon eps);

/// Jordan type of a generic element of O_f + nilradical for the parabolic
/// of so_N / sp_N attached to a classical Levi (gl blocks + same-type
/// residual carrying the orbit f). Works with explicit matrices; ranks of
/// powers are taken modulo a large prime over several random samples.
Partition induced_jordan_type(const LeviClassical& levi, const Partition& f, Epsilon eps);

/// Same for sl_N: generic Jordan type of the nilradical of the block
/// parabolic (zero orbit on every block).
Partition richardson_jordan_type_a(const Partition& blocks);

}  // namespace oracle
}  // namespace lie
