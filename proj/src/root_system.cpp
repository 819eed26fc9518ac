#include "lie/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace lie {

namespace {

// Integer Gram matrices of the simple roots, Bourbaki numbering. Each
// irreducible type is scaled so that all entries are integers; only the
// ratios matter (Cartan integers are scale-free).
std::vector<std::vector<int>> gram_matrix(const AlgebraId& alg) {
    int n = alg.rank;
    std::vector<std::vector<int>> g(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    auto edge = [&](int i, int j, int v) {
        g[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
        g[static_cast<size_t>(j)][static_cast<size_t>(i)] = v;
    };
    auto chain = [&](int upto, int v) {
        for (int i = 0; i + 1 < upto; ++i) edge(i, i + 1, v);
    };
    auto diag = [&](int i, int v) { g[static_cast<size_t>(i)][static_cast<size_t>(i)] = v; };

    switch (alg.kind) {
        case AlgebraKind::A:
            for (int i = 0; i < n; ++i) diag(i, 2);
            chain(n, -1);
            break;
        case AlgebraKind::B:  // alpha_n short
            for (int i = 0; i < n; ++i) diag(i, i == n - 1 ? 1 : 2);
            chain(n, -1);
            break;
        case AlgebraKind::C:  // alpha_n long
            for (int i = 0; i < n; ++i) diag(i, i == n - 1 ? 4 : 2);
            chain(n - 1, -1);
            edge(n - 2, n - 1, -2);
            break;
        case AlgebraKind::D:  // fork at node n-2 (0-based n-3)
            for (int i = 0; i < n; ++i) diag(i, 2);
            chain(n - 1, -1);
            edge(n - 3, n - 1, -1);
            break;
        case AlgebraKind::G2:  // alpha_1 short, alpha_2 long
            diag(0, 2);
            diag(1, 6);
            edge(0, 1, -3);
            break;
        case AlgebraKind::F4:  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            diag(0, 4);
            diag(1, 4);
            diag(2, 2);
            diag(3, 2);
            edge(0, 1, -2);
            edge(1, 2, -2);
            edge(2, 3, -1);
            break;
        case AlgebraKind::E6:
        case AlgebraKind::E7:
        case AlgebraKind::E8:
            // Bourbaki: 1-3, 2-4, 3-4, 4-5, 5-6 [, 6-7 [, 7-8]]
            for (int i = 0; i < n; ++i) diag(i, 2);
            edge(0, 2, -1);
            edge(1, 3, -1);
            edge(2, 3, -1);
            for (int i = 3; i + 1 < n; ++i) edge(i, i + 1, -1);
            break;
    }
    return g;
}

int expected_positive_count(const AlgebraId& alg) { return alg.positive_roots(); }

}  // namespace

RootSystem RootSystem::generate(const AlgebraId& alg) {
    RootSystem rs;
    rs.alg_ = alg;
    rs.gram_ = gram_matrix(alg);
    int n = alg.rank;

    auto inner = [&](const std::vector<int>& a, int i) {
        int v = 0;
        for (int j = 0; j < n; ++j) v += a[static_cast<size_t>(j)] * rs.gram(j, i);
        return v;
    };

    std::set<std::vector<int>> roots;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i)] = 1;
        roots.insert(std::move(e));
    }

    // Close upward along root strings: r + alpha_i is a root iff
    // p - <r, alpha_i^vee> >= 1, where p is the depth of the string below r.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> snapshot(roots.begin(), roots.end());
        for (const auto& r : snapshot) {
            for (int i = 0; i < n; ++i) {
                int cartan = 2 * inner(r, i) / rs.gram(i, i);
                int p = 0;
                std::vector<int> down = r;
                for (;;) {
                    down[static_cast<size_t>(i)] -= 1;
                    if (roots.count(down) == 0) break;
                    ++p;
                }
                if (p - cartan >= 1) {
                    std::vector<int> up = r;
                    up[static_cast<size_t>(i)] += 1;
                    if (roots.insert(std::move(up)).second) grew = true;
                }
            }
        }
    }

    rs.positive_.assign(roots.begin(), roots.end());
    if (rs.positive_count() != expected_positive_count(alg))
        throw std::logic_error("root generation produced the wrong count for " + alg.name());
    return rs;
}

int RootSystem::subsystem_pos_count(const std::vector<int>& subset) const {
    std::vector<bool> in(static_cast<size_t>(rank()), false);
    for (int i : subset) {
        if (i < 0 || i >= rank()) throw std::invalid_argument("subsystem_pos_count: bad index");
        in[static_cast<size_t>(i)] = true;
    }
    int count = 0;
    for (const auto& r : positive_) {
        bool supported = true;
        for (int j = 0; j < rank(); ++j)
            if (r[static_cast<size_t>(j)] != 0 && !in[static_cast<size_t>(j)]) supported = false;
        if (supported) ++count;
    }
    return count;
}

std::vector<LeviNameFactor> RootSystem::subset_type(const std::vector<int>& subset) const {
    int long_norm = 0;
    for (int i = 0; i < rank(); ++i) long_norm = std::max(long_norm, gram(i, i));

    std::vector<int> todo = subset;
    std::vector<LeviNameFactor> factors;
    std::set<int> remaining(todo.begin(), todo.end());
    while (!remaining.empty()) {
        // Peel off one connected component.
        std::vector<int> comp{*remaining.begin()};
        remaining.erase(remaining.begin());
        for (size_t k = 0; k < comp.size(); ++k) {
            for (auto it = remaining.begin(); it != remaining.end();) {
                if (gram(comp[k], *it) != 0) {
                    comp.push_back(*it);
                    it = remaining.erase(it);
                } else {
                    ++it;
                }
            }
        }
        int k = static_cast<int>(comp.size());
        int m = subsystem_pos_count(comp);
        int shorts = 0;
        for (int i : comp)
            if (gram(i, i) < long_norm) ++shorts;

        LeviNameFactor f;
        f.rank = k;
        f.tilde = false;
        bool mixed = shorts > 0 && shorts < k;
        if (mixed) {
            if (k == 2 && m == 4) f.kind = AlgebraKind::B;  // B2 = C2; the tables write B2
            else if (k == 2 && m == 6) f.kind = AlgebraKind::G2;
            else if (m == k * k) f.kind = shorts == 1 ? AlgebraKind::B : AlgebraKind::C;
            else if (k == 4 && m == 24) f.kind = AlgebraKind::F4;
            else throw std::logic_error("unrecognized mixed-length component");
        } else if (m == k * (k + 1) / 2) {
            f.kind = AlgebraKind::A;
            f.tilde = shorts == k && shorts > 0;
        } else if (m == k * (k - 1)) {
            f.kind = AlgebraKind::D;
        } else if (k == 6 && m == 36) {
            f.kind = AlgebraKind::E6;
        } else if (k == 7 && m == 63) {
            f.kind = AlgebraKind::E7;
        } else if (k == 8 && m == 120) {
            f.kind = AlgebraKind::E8;
        } else {
            throw std::logic_error("unrecognized component type");
        }
        factors.push_back(f);
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

std::vector<std::vector<int>> RootSystem::subsets_matching(const std::string& levi_name) const {
    auto want = parse_levi_name(levi_name);
    // D3 sub-diagrams type as A3; normalize the wanted multiset the same way.
    for (auto& f : want)
        if (f.kind == AlgebraKind::D && f.rank == 3) f.kind = AlgebraKind::A;
    std::sort(want.begin(), want.end());

    std::vector<std::vector<int>> hits;
    for (unsigned mask = 0; mask < (1u << rank()); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < rank(); ++i)
            if (mask & (1u << i)) subset.push_back(i);
        if (subset_type(subset) == want) hits.push_back(std::move(subset));
    }
    return hits;
}

}  // namespace lie
