#include "lie/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace lie {
namespace oracle {

std::optional<Partition> dominance_max_collapse(const Partition& p, Epsilon eps) {
    std::vector<Partition> candidates;
    for (const auto& q : partitions_eps(p.total(), eps))
        if (dominates(p, q)) candidates.push_back(q);
    for (const auto& top : candidates) {
        bool max = true;
        for (const auto& q : candidates)
            if (!dominates(top, q)) { max = false; break; }
        if (max) return top;
    }
    return std::nullopt;
}

namespace {

constexpr int64_t kPrime = 2147483647;  // 2^31 - 1

struct Matrix {
    int n = 0;
    std::vector<int64_t> a;

    explicit Matrix(int n_) : n(n_), a(static_cast<size_t>(n_) * static_cast<size_t>(n_), 0) {}
    int64_t& at(int i, int j) { return a[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)]; }
    int64_t at(int i, int j) const { return a[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)]; }
};

int64_t mod(int64_t v) {
    v %= kPrime;
    return v < 0 ? v + kPrime : v;
}

Matrix mul(const Matrix& x, const Matrix& y) {
    Matrix z(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            int64_t v = x.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < x.n; ++j)
                z.at(i, j) = mod(z.at(i, j) + v * y.at(k, j));
        }
    return z;
}

int64_t pow_mod(int64_t b, int64_t e) {
    int64_t r = 1;
    b = mod(b);
    while (e > 0) {
        if (e & 1) r = mod(r * b);
        b = mod(b * b);
        e >>= 1;
    }
    return r;
}

int rank_mod_p(Matrix m) {
    int rank = 0;
    for (int col = 0; col < m.n && rank < m.n; ++col) {
        int pivot = -1;
        for (int row = rank; row < m.n; ++row)
            if (m.at(row, col) != 0) { pivot = row; break; }
        if (pivot < 0) continue;
        for (int j = 0; j < m.n; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        int64_t inv = pow_mod(m.at(rank, col), kPrime - 2);
        for (int row = rank + 1; row < m.n; ++row) {
            int64_t factor = mod(m.at(row, col) * inv);
            if (factor == 0) continue;
            for (int j = col; j < m.n; ++j)
                m.at(row, j) = mod(m.at(row, j) - factor * m.at(rank, j));
        }
        ++rank;
    }
    return rank;
}

Partition jordan_type(const Matrix& x) {
    std::vector<int> ranks{x.n};
    Matrix power = x;
    while (true) {
        int r = rank_mod_p(power);
        ranks.push_back(r);
        if (r == 0) break;
        power = mul(power, x);
        if (static_cast<int>(ranks.size()) > x.n + 2)
            throw std::logic_error("induction oracle: sampled element is not nilpotent");
    }
    std::vector<int> col_lengths;  // #{parts >= k} = rank(x^{k-1}) - rank(x^k)
    for (size_t k = 1; k < ranks.size(); ++k)
        if (int c = ranks[k - 1] - ranks[k]; c > 0) col_lengths.push_back(c);
    return dual(Partition(std::move(col_lengths)));
}

struct Lcg {
    uint64_t state;
    explicit Lcg(uint64_t seed) : state(seed) {}
    int next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<int>((state >> 33) % 19) + 1;  // 1..19
    }
};

/// Bilinear form given by a signed pairing of basis vectors.
struct PairedForm {
    std::vector<int> partner;  // partner[i] pairs with i
    std::vector<int> sgn;      // B(e_i, e_partner[i]) = sgn[i]
};

}  // namespace

Partition induced_jordan_type(const LeviClassical& levi, const Partition& f, Epsilon eps) {
    if (f.total() != levi.residual)
        throw std::invalid_argument("induction oracle: orbit must live in the residual");

    // Layout: A-coordinates of each gl block, middle coordinates, then the
    // dual A*-coordinates in reverse block order. Weight positive on A parts,
    // 0 on the middle, negative on A* parts.
    const auto& blocks = levi.blocks.parts();
    int s_count = static_cast<int>(blocks.size());
    int r = levi.residual;
    int n = 2 * levi.blocks.total() + r;

    std::vector<int> weight(static_cast<size_t>(n), 0);
    std::vector<std::vector<int>> a_coords(blocks.size()), astar_coords(blocks.size());
    int at = 0;
    for (int k = 0; k < s_count; ++k)
        for (int i = 0; i < blocks[static_cast<size_t>(k)]; ++i) {
            weight[static_cast<size_t>(at)] = s_count - k;
            a_coords[static_cast<size_t>(k)].push_back(at++);
        }
    std::vector<int> middle;
    for (int i = 0; i < r; ++i) middle.push_back(at++);
    for (int k = s_count - 1; k >= 0; --k)
        for (int i = 0; i < blocks[static_cast<size_t>(k)]; ++i) {
            weight[static_cast<size_t>(at)] = -(s_count - k);
            astar_coords[static_cast<size_t>(k)].push_back(at++);
        }

    PairedForm form{std::vector<int>(static_cast<size_t>(n), -1), std::vector<int>(static_cast<size_t>(n), 0)};
    auto pair_up = [&](int i, int j, int sij, int sji) {
        form.partner[static_cast<size_t>(i)] = j;
        form.partner[static_cast<size_t>(j)] = i;
        form.sgn[static_cast<size_t>(i)] = sij;
        form.sgn[static_cast<size_t>(j)] = sji;
    };
    // Hyperbolic pairs for the gl blocks: B(a, a*) = 1, B(a*, a) = eps.
    for (int k = 0; k < s_count; ++k)
        for (size_t i = 0; i < a_coords[static_cast<size_t>(k)].size(); ++i)
            pair_up(a_coords[static_cast<size_t>(k)][i], astar_coords[static_cast<size_t>(k)][i], 1, sign(eps));

    // Middle: explicit nilpotent of Jordan type f inside so_r / sp_r.
    // Parts of the parity matching eps get a single block with the
    // alternating antidiagonal form; the others come in hyperbolic pairs.
    Matrix y(n);
    {
        std::vector<int> single, paired;
        for (int v : f.parts())
            ((v % 2 == 1) == (eps == Epsilon::plus) ? single : paired).push_back(v);
        if (paired.size() % 2 != 0)
            throw std::invalid_argument("induction oracle: partition not in P_eps");
        size_t m_at = 0;
        auto take = [&](int count) {
            std::vector<int> c;
            for (int i = 0; i < count; ++i) c.push_back(middle[m_at++]);
            return c;
        };
        for (int d : single) {
            auto c = take(d);
            for (int i = 0; i < d; ++i) {
                int j = d - 1 - i;  // antidiagonal partner within the block
                pair_up(c[static_cast<size_t>(i)], c[static_cast<size_t>(j)],
                        i % 2 == 0 ? 1 : -1, j % 2 == 0 ? 1 : -1);
                if (i + 1 < d) y.at(c[static_cast<size_t>(i + 1)], c[static_cast<size_t>(i)]) = 1;
            }
        }
        for (size_t t = 0; t + 1 < paired.size(); t += 2) {
            if (paired[t] != paired[t + 1])
                throw std::invalid_argument("induction oracle: partition not in P_eps");
            int d = paired[t];
            auto u = take(d), v = take(d);
            for (int i = 0; i < d; ++i) {
                pair_up(u[static_cast<size_t>(i)], v[static_cast<size_t>(i)], 1, sign(eps));
                if (i + 1 < d) {
                    y.at(u[static_cast<size_t>(i + 1)], u[static_cast<size_t>(i)]) = 1;
                    y.at(v[static_cast<size_t>(i)], v[static_cast<size_t>(i + 1)]) = kPrime - 1;  // -1
                }
            }
        }
    }

    // Self-check: y^T B + B y = 0 for B(e_i, e_partner[i]) = sgn[i].
    {
        Matrix b(n);
        for (int i = 0; i < n; ++i) b.at(i, form.partner[static_cast<size_t>(i)]) = mod(form.sgn[static_cast<size_t>(i)]);
        Matrix yt(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) yt.at(i, j) = y.at(j, i);
        Matrix lhs = mul(yt, b), rhs = mul(b, y);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (mod(lhs.at(i, j) + rhs.at(i, j)) != 0)
                    throw std::logic_error("induction oracle: embedded orbit left the algebra");
    }

    // Nilradical basis through X = B^{-1} S, S skew (eps=+1) or symmetric:
    // X^(ij) has entries at (partner(i), j) and (partner(j), i); it raises the
    // weight grading iff -weight(i) > weight(j).
    struct Gen { int r1, c1; int64_t v1; int r2, c2; int64_t v2; };
    std::vector<Gen> nilradical;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (eps == Epsilon::plus && i >= j) continue;  // skew: i < j
            if (eps == Epsilon::minus && i > j) continue;  // symmetric: i <= j
            if (-weight[static_cast<size_t>(i)] <= weight[static_cast<size_t>(j)]) continue;
            // S = E_ij - eps_s E_ji with eps_s = +1 (skew) / -1 (symmetric);
            // B^{-1} e_i = sgn[i]^{-1}-scaled partner: with sgn in {+-1},
            // (B^{-1})_{partner(i), i} = 1 / B(e_partner(i), e_i) = sgn[partner(i)].
            Gen g{};
            g.r1 = form.partner[static_cast<size_t>(i)];
            g.c1 = j;
            g.v1 = mod(form.sgn[static_cast<size_t>(g.r1)]);
            g.r2 = form.partner[static_cast<size_t>(j)];
            g.c2 = i;
            int64_t s2 = eps == Epsilon::plus ? -1 : 1;
            g.v2 = mod(s2 * form.sgn[static_cast<size_t>(g.r2)]);
            if (g.r1 == g.r2 && g.c1 == g.c2) g.v1 = mod(g.v1 + g.v2), g.v2 = 0;
            nilradical.push_back(g);
        }
    }
    int expected = (form_algebra_dim(n, eps) - levi_dim(levi, eps)) / 2;
    if (static_cast<int>(nilradical.size()) != expected)
        throw std::logic_error("induction oracle: nilradical dimension mismatch");

    Partition best;
    Lcg rng(0x5eed5eedULL + static_cast<uint64_t>(n) * 977);
    for (int trial = 0; trial < 4; ++trial) {
        Matrix x = y;
        for (const auto& g : nilradical) {
            int64_t c = rng.next();
            x.at(g.r1, g.c1) = mod(x.at(g.r1, g.c1) + c * g.v1);
            if (g.v2 != 0) x.at(g.r2, g.c2) = mod(x.at(g.r2, g.c2) + c * g.v2);
        }
        Partition t = jordan_type(x);
        if (best.empty() || (t != best && dominates(t, best))) best = t;
    }
    return best;
}

Partition richardson_jordan_type_a(const Partition& blocks) {
    int n = blocks.total();
    std::vector<int> level(static_cast<size_t>(n), 0);
    int at = 0;
    for (int k = 0; k < blocks.size(); ++k)
        for (int i = 0; i < blocks.part(k); ++i) level[static_cast<size_t>(at++)] = k;

    Partition best;
    Lcg rng(0xa11ceULL + static_cast<uint64_t>(n));
    for (int trial = 0; trial < 4; ++trial) {
        Matrix x(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (level[static_cast<size_t>(i)] < level[static_cast<size_t>(j)]) x.at(i, j) = rng.next();
        Partition t = jordan_type(x);
        if (best.empty() || (t != best && dominates(t, best))) best = t;
    }
    return best;
}

}  // namespace oracle
}  // namespace lie
