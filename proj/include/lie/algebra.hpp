#pragma once

#include <optional>
#include <string>

#include "lie/partitions.hpp"

namespace lie {

enum class AlgebraKind { A, B, C, D, G2, F4, E6, E7, E8 };

bool is_classical(AlgebraKind k);

/// A simple Lie algebra designator. Classical kinds carry a rank
/// (A: >=1, B: >=2, C: >=2, D: >=3), exceptional kinds have it fixed.
struct AlgebraId {
    AlgebraKind kind;
    int rank;

    static AlgebraId make(AlgebraKind kind, int rank);

    /// "A5", "B3", ..., "G2", "E8" and synonyms "sl6", "so7", "sp6", "so12".
    /// Throws std::invalid_argument on anything else.
    static AlgebraId parse(const std::string& text);

    bool classical() const { return is_classical(kind); }
    bool exceptional() const { return !classical(); }

    int dim() const;
    int positive_roots() const { return (dim() - rank) / 2; }

    /// Size N of the standard representation (classical kinds only).
    int standard_rep_size() const;
    /// Form sign for B/C/D.
    Epsilon epsilon() const;

    /// (dim g - rk g) / 2; index of g equals its rank.
    int d_g() const { return (dim() - rank) / 2; }

    std::string name() const;       // "D6"
    std::string long_name() const;  // "so12" for classical, name() otherwise

    auto operator<=>(const AlgebraId&) const = default;
};

enum class OrbitLabel { I, II };

inline OrbitLabel flipped(OrbitLabel l) { return l == OrbitLabel::I ? OrbitLabel::II : OrbitLabel::I; }

std::string to_string(OrbitLabel l);

}  // namespace lie
