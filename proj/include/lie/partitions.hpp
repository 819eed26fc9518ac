#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace lie {

/// Sign of the bilinear form: +1 symmetric (so_N), -1 symplectic (sp_N).
enum class Epsilon : int { plus = +1, minus = -1 };

inline int sign(Epsilon eps) { return static_cast<int>(eps); }
inline Epsilon other(Epsilon eps) { return eps == Epsilon::plus ? Epsilon::minus : Epsilon::plus; }

/// Weakly decreasing sequence of positive integers. Only positive parts are
/// stored; part(i) reads 0 past the end. The empty partition is the unique
/// partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    int total() const { return total_; }            // the partitioned integer
    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 0-based part access; indices >= size() read 0.
    int part(int i) const {
        return (i >= 0 && i < size()) ? parts_[static_cast<size_t>(i)] : 0;
    }
    int largest() const { return part(0); }

    const std::vector<int>& parts() const { return parts_; }

    /// Multiplicity of the value v among the parts.
    int multiplicity(int v) const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int total_ = 0;
};

/// Transpose of the Young diagram: s_i = #{ j : parts[j] >= i }.
Partition dual(const Partition& p);

/// Dominance order: every prefix sum of p is >= that of q.
/// Requires p.total() == q.total(); throws std::invalid_argument otherwise.
bool dominates(const Partition& p, const Partition& q);

/// All partitions of n in reverse-lexicographic order, largest first.
std::vector<Partition> partitions(int n);

/// P_eps(n): partitions where every part v with (-1)^v == eps has even
/// multiplicity. Same order as partitions(n).
std::vector<Partition> partitions_eps(int n, Epsilon eps);

/// Membership test matching partitions_eps.
bool in_p_eps(const Partition& p, Epsilon eps);

/// All parts even, each with even multiplicity.
bool is_very_even(const Partition& p);

/// "[3,2,1]" style, exactly what the JSON form looks like.
std::string to_string(const Partition& p);

/// Exponent display, e.g. "[3^2,1^6]"; "[]" for the empty partition.
std::string to_exponent_string(const Partition& p);

/// Accepts "[3,2,1]", "3,2,1" and exponent notation "3^2,1^6".
/// Throws std::invalid_argument on malformed input.
Partition parse_partition(const std::string& text);

}  // namespace lie
