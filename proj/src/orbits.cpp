#include "lie/orbits.hpp"

#include <algorithm>
#include <stdexcept>

#include "lie/exceptional.hpp"

namespace lie {

int orbit_dim_a(const Partition& p, int n_std) {
    if (p.total() != n_std)
        throw std::invalid_argument("orbit_dim_a: partition total differs from N");
    Partition s = dual(p);
    int sum_sq = 0;
    for (int v : s.parts()) sum_sq += v * v;
    return n_std * n_std - sum_sq;
}

int form_algebra_dim(int n_std, Epsilon eps) {
    return eps == Epsilon::plus ? (n_std * n_std - n_std) / 2 : (n_std * n_std + n_std) / 2;
}

int orbit_dim_eps(const Partition& p, Epsilon eps) {
    if (!in_p_eps(p, eps))
        throw std::invalid_argument("orbit_dim_eps: partition not in P_eps(N): " + to_string(p));
    Partition s = dual(p);
    int sum_sq = 0;
    for (int v : s.parts()) sum_sq += v * v;
    int r_odd = 0;
    for (int v : p.parts())
        if (v % 2 == 1) ++r_odd;
    int corr = sum_sq - sign(eps) * r_odd;
    if (corr % 2 != 0) throw std::logic_error("orbit_dim_eps: odd correction term");
    return form_algebra_dim(p.total(), eps) - corr / 2;
}

int orbit_dim_bcd(const Partition& p, const AlgebraId& alg) {
    if (alg.kind != AlgebraKind::B && alg.kind != AlgebraKind::C && alg.kind != AlgebraKind::D)
        throw std::invalid_argument("orbit_dim_bcd: kinds B, C, D only");
    if (p.total() != alg.standard_rep_size())
        throw std::invalid_argument("orbit_dim_bcd: partition total differs from N");
    return orbit_dim_eps(p, alg.epsilon());
}

std::vector<int> orbit_dims(const AlgebraId& alg) {
    std::vector<int> dims;
    if (alg.exceptional()) {
        for (const auto& sd : exc_sheet_dims(alg)) dims.push_back(sd.d_sp);
    } else if (alg.kind == AlgebraKind::A) {
        int n_std = alg.standard_rep_size();
        for (const auto& p : partitions(n_std)) dims.push_back(orbit_dim_a(p, n_std));
    } else {
        for (const auto& p : partitions_eps(alg.standard_rep_size(), alg.epsilon()))
            dims.push_back(orbit_dim_eps(p, alg.epsilon()));
    }
    std::sort(dims.begin(), dims.end());
    dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
    return dims;
}

std::vector<NilpotentOrbit> nilpotent_orbits(const AlgebraId& alg) {
    if (!alg.classical())
        throw std::invalid_argument("nilpotent_orbits: classical kinds only");
    std::vector<NilpotentOrbit> out;
    int n_std = alg.standard_rep_size();
    if (alg.kind == AlgebraKind::A) {
        for (auto& p : partitions(n_std)) out.push_back({std::move(p), std::nullopt});
    } else {
        for (auto& p : partitions_eps(n_std, alg.epsilon())) {
            if (alg.kind == AlgebraKind::D && is_very_even(p)) {
                out.push_back({p, OrbitLabel::I});
                out.push_back({std::move(p), OrbitLabel::II});
            } else {
                out.push_back({std::move(p), std::nullopt});
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [&](const NilpotentOrbit& a, const NilpotentOrbit& b) {
        int da = alg.kind == AlgebraKind::A ? orbit_dim_a(a.partition, n_std)
                                            : orbit_dim_eps(a.partition, alg.epsilon());
        int db = alg.kind == AlgebraKind::A ? orbit_dim_a(b.partition, n_std)
                                            : orbit_dim_eps(b.partition, alg.epsilon());
        if (da != db) return da > db;
        return a.partition > b.partition;
    });
    return out;
}

}  // namespace lie
