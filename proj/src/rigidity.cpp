#include "lie/rigidity.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace lie {

namespace {

bool case_b_parity(int value, Epsilon eps) {
    // eps * (-1)^value == -1: odd values for eps=+1, even for eps=-1.
    return (value % 2 == 1) == (eps == Epsilon::plus);
}

}  // namespace

bool is_rigid(const Partition& p, Epsilon eps) {
    if (!in_p_eps(p, eps))
        throw std::invalid_argument("is_rigid: partition not in P_eps(N): " + to_string(p));
    for (int i = 0; i < p.size(); ++i)
        if (p.part(i) > p.part(i + 1) + 1) return false;
    for (int i = 0; i < p.size(); ++i) {
        int v = p.part(i);
        if (case_b_parity(v, eps) && p.multiplicity(v) == 2) return false;
    }
    return true;
}

bool is_rigid(const Partition& p, const AlgebraId& alg) {
    if (alg.kind == AlgebraKind::A) {
        if (p.total() != alg.standard_rep_size())
            throw std::invalid_argument("is_rigid: partition total differs from N");
        return p.largest() <= 1;
    }
    if (p.total() != alg.standard_rep_size())
        throw std::invalid_argument("is_rigid: partition total differs from N");
    return is_rigid(p, alg.epsilon());
}

std::optional<ElementaryStep> elementary_step(const Partition& p, Epsilon eps) {
    if (!in_p_eps(p, eps))
        throw std::invalid_argument("elementary_step: partition not in P_eps(N): " + to_string(p));
    for (int j = 1; j <= p.size(); ++j) {
        int dj = p.part(j - 1);
        bool case_a = dj >= p.part(j) + 2;
        bool case_b = !case_a && dj == p.part(j) && p.part(j) > p.part(j + 1) &&
                      (j == 1 || p.part(j - 2) > dj) && case_b_parity(dj, eps);
        if (!case_a && !case_b) continue;

        std::vector<int> w = p.parts();
        if (case_a) {
            for (int i = 0; i < j; ++i) w[static_cast<size_t>(i)] -= 2;
        } else {
            for (int i = 0; i + 1 < j; ++i) w[static_cast<size_t>(i)] -= 2;
            w[static_cast<size_t>(j - 1)] -= 1;
            w[static_cast<size_t>(j)] -= 1;
        }
        Partition result(std::move(w));
        assert(result.total() == p.total() - 2 * j);
        assert(in_p_eps(result, eps));
        return ElementaryStep{j, case_a ? 'a' : 'b', std::move(result)};
    }
    return std::nullopt;
}

RigidityCertificate z_of(const Partition& p, Epsilon eps) {
    RigidityCertificate cert;
    Partition current = p;
    while (auto step = elementary_step(current, eps)) {
        current = step->result;
        cert.steps.push_back(std::move(*step));
    }
    cert.z = static_cast<int>(cert.steps.size());
    assert(is_rigid(current, eps));

    std::vector<int> blocks;
    for (const auto& s : cert.steps) blocks.push_back(s.index);
    std::sort(blocks.begin(), blocks.end(), std::greater<>());
    cert.levi = LeviClassical{Partition(std::move(blocks)), current.total(), std::nullopt};
    cert.rigid_core = std::move(current);

    if (levi_splits(cert.levi, eps)) {
        // Pick the label that makes the chain reproduce p's I-labeled twin.
        cert.levi.label = OrbitLabel::I;
        NilpotentOrbit back = induce_chain(cert.levi, {cert.rigid_core, std::nullopt}, eps);
        if (back.label == OrbitLabel::II) cert.levi.label = OrbitLabel::II;
    }
    return cert;
}

RigidityCertificate z_of(const Partition& p, const AlgebraId& alg) {
    if (p.total() != alg.standard_rep_size())
        throw std::invalid_argument("z_of: partition total differs from N");
    if (alg.kind == AlgebraKind::A) {
        RigidityCertificate cert;
        cert.z = p.largest() - 1;
        if (p.empty()) cert.z = 0;
        cert.levi = LeviClassical{dual(p), 0, std::nullopt};
        cert.rigid_core = Partition(std::vector<int>(static_cast<size_t>(p.total()), 1));
        return cert;
    }
    return z_of(p, alg.epsilon());
}

std::vector<RigidOrbit> rigid_orbits(const AlgebraId& alg) {
    if (!alg.classical())
        throw std::invalid_argument("rigid_orbits: classical kinds only (see exc_rigid_dims)");
    std::vector<RigidOrbit> out;
    int n_std = alg.standard_rep_size();
    if (alg.kind == AlgebraKind::A) {
        out.push_back({{Partition(std::vector<int>(static_cast<size_t>(n_std), 1)), std::nullopt}, 0});
        return out;
    }
    for (const auto& p : partitions_eps(n_std, alg.epsilon())) {
        if (!is_rigid(p, alg.epsilon())) continue;
        assert(!is_very_even(p));
        out.push_back({{p, std::nullopt}, orbit_dim_eps(p, alg.epsilon())});
    }
    std::sort(out.begin(), out.end(), [](const RigidOrbit& a, const RigidOrbit& b) {
        if (a.dim != b.dim) return a.dim > b.dim;
        return a.orbit.partition > b.orbit.partition;
    });
    return out;
}

}  // namespace lie
