#pragma once

#include <vector>

#include "lie/algebra.hpp"
#include "lie/exceptional.hpp"

namespace lie {

/// Positive roots of a simple root system, kept as integer coefficient
/// vectors over the simple roots (Bourbaki numbering). Inner products go
/// through an integer Gram matrix, so everything is exact.
class RootSystem {
public:
    static RootSystem generate(const AlgebraId& alg);

    const AlgebraId& algebra() const { return alg_; }
    int rank() const { return alg_.rank; }
    const std::vector<std::vector<int>>& positive_roots() const { return positive_; }
    int positive_count() const { return static_cast<int>(positive_.size()); }

    /// |Delta+ ∩ Delta^S|: positive roots supported on the subset S of
    /// simple-root indices (0-based).
    int subsystem_pos_count(const std::vector<int>& subset) const;

    /// (alpha_i, alpha_j) in the scaled integer normalization.
    int gram(int i, int j) const { return gram_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }

    /// Type of the sub-diagram spanned by a connected subset; tilde marks
    /// all-short A factors in F4/G2.
    std::vector<LeviNameFactor> subset_type(const std::vector<int>& subset) const;

    /// All subsets of simple roots realizing the factor multiset of an
    /// exceptional-table row name.
    std::vector<std::vector<int>> subsets_matching(const std::string& levi_name) const;

private:
    AlgebraId alg_{AlgebraKind::A, 1};
    std::vector<std::vector<int>> gram_;
    std::vector<std::vector<int>> positive_;
};

}  // namespace lie
