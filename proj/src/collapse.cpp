#include "lie/collapse.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace lie {

bool levi_splits(const LeviClassical& levi, Epsilon eps) {
    if (eps != Epsilon::plus || levi.residual != 0 || levi.blocks.empty()) return false;
    for (int b : levi.blocks.parts())
        if (b % 2 != 0) return false;
    return true;
}

int levi_dim(const LeviClassical& levi, Epsilon eps) {
    int d = form_algebra_dim(levi.residual, eps);
    for (int b : levi.blocks.parts()) d += b * b;
    return d;
}

namespace {

bool wrong_parity(int v, Epsilon eps) {
    // Parts whose multiplicity P_eps constrains: even parts for eps=+1,
    // odd parts for eps=-1.
    return (v % 2 == 0) == (eps == Epsilon::plus);
}

}  // namespace

Partition collapse(const Partition& p, Epsilon eps) {
    if (eps == Epsilon::minus && p.total() % 2 != 0)
        throw std::invalid_argument("collapse: P_eps is empty for odd totals and eps = -1");
    std::vector<int> w = p.parts();
    for (;;) {
        int q = 0;
        for (int v : w) {
            if (!wrong_parity(v, eps)) continue;
            int mult = static_cast<int>(std::count(w.begin(), w.end(), v));
            if (mult % 2 != 0) q = std::max(q, v);
        }
        if (q == 0) break;

        auto last = std::find(w.rbegin(), w.rend(), q);
        size_t i = static_cast<size_t>(std::distance(w.begin(), last.base())) - 1;
        w[i] = q - 1;
        size_t j = i + 1;
        while (j < w.size() && w[j] >= q - 1) ++j;
        if (j == w.size()) w.push_back(0);
        w[j] += 1;
    }
    while (!w.empty() && w.back() == 0) w.pop_back();
    return Partition(std::move(w));
}

Partition collapse(const Partition& p, const AlgebraId& alg) {
    if (p.total() != alg.standard_rep_size())
        throw std::invalid_argument("collapse: partition total differs from N");
    return collapse(p, alg.epsilon());
}

NilpotentOrbit induce_max(int l, const NilpotentOrbit& f, Epsilon eps,
                          std::optional<OrbitLabel> levi_label) {
    if (l < 1) throw std::invalid_argument("induce_max: block size must be >= 1");
    if (!in_p_eps(f.partition, eps))
        throw std::invalid_argument("induce_max: orbit partition not in P_eps: " +
                                    to_string(f.partition));
    int r = f.partition.total();
    int n_std = r + 2 * l;

    std::vector<int> tilde = f.partition.parts();
    if (static_cast<int>(tilde.size()) < l) tilde.resize(static_cast<size_t>(l), 0);
    for (int i = 0; i < l; ++i) tilde[static_cast<size_t>(i)] += 2;
    Partition induced = collapse(Partition(std::move(tilde)), eps);
    assert(induced.total() == n_std);

    NilpotentOrbit out{induced, std::nullopt};
    if (eps == Epsilon::plus && n_std % 4 == 0 && is_very_even(induced)) {
        if (r != 0) {
            // A very even result from a nonzero residual forces a very even f;
            // the induced orbit inherits its label (none stays none).
            out.label = f.label;
        } else if (levi_label) {
            out.label = (n_std / 4) % 2 == 0 ? *levi_label : flipped(*levi_label);
        }
    }
    return out;
}

NilpotentOrbit induce_chain(const LeviClassical& levi, const NilpotentOrbit& f, Epsilon eps) {
    if (f.partition.total() != levi.residual)
        throw std::invalid_argument("induce_chain: orbit does not live in the residual factor");
    if (eps == Epsilon::plus && levi.residual == 2)
        throw std::invalid_argument("induce_chain: residual 2 is not a Levi class when eps = +1");

    NilpotentOrbit acc = f;
    std::vector<int> order = levi.blocks.parts();
    std::sort(order.begin(), order.end());  // smallest block first
    bool first = true;
    for (int block : order) {
        acc = induce_max(block, acc, eps, first ? levi.label : std::nullopt);
        first = false;
    }
    return acc;
}

Partition richardson_a(const LeviClassical& levi, int n_std) {
    if (levi.residual != 0)
        throw std::invalid_argument("richardson_a: type A Levi classes have residual 0");
    if (levi.blocks.total() != n_std)
        throw std::invalid_argument("richardson_a: blocks must sum to N");
    return dual(levi.blocks);
}

}  // namespace lie
