#include "lie/sheets.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace lie {

namespace {

Partition zero_partition(int n) {
    return Partition(std::vector<int>(static_cast<size_t>(n), 1));
}

struct SheetKey {
    int neg_orbit_dim;
    int neg_sheet_dim;
    int levi_kind;  // 0 classical, 1 exceptional
    std::vector<int> blocks;
    int residual;
    int label;  // 0 none, 1 I, 2 II
    std::vector<int> rigid;
    int row_index;
    int rigid_dim;

    auto operator<=>(const SheetKey&) const = default;
};

SheetKey key_of(const Sheet& s) {
    SheetKey k{};
    k.neg_orbit_dim = -s.orbit_dim;
    k.neg_sheet_dim = -s.sheet_dim;
    if (const auto* lc = std::get_if<LeviClassical>(&s.levi)) {
        k.levi_kind = 0;
        k.blocks = lc->blocks.parts();
        k.residual = lc->residual;
        k.label = lc->label ? (*lc->label == OrbitLabel::I ? 1 : 2) : 0;
        if (s.rigid_orbit) k.rigid = s.rigid_orbit->partition.parts();
        k.row_index = 0;
    } else {
        const auto& er = std::get<ExcLeviRef>(s.levi);
        k.levi_kind = 1;
        k.row_index = er.row_index;
        k.residual = 0;
        k.label = 0;
    }
    k.rigid_dim = s.rigid_dim;
    return k;
}

}  // namespace

std::vector<LeviClassical> levi_classes(const AlgebraId& alg) {
    if (alg.kind != AlgebraKind::B && alg.kind != AlgebraKind::C && alg.kind != AlgebraKind::D)
        throw std::invalid_argument("levi_classes: kinds B, C, D only");
    Epsilon eps = alg.epsilon();
    int n_std = alg.standard_rep_size();
    std::vector<LeviClassical> out;
    for (int s = 0; 2 * s <= n_std; ++s) {
        int residual = n_std - 2 * s;
        if (eps == Epsilon::plus && residual == 2) continue;
        for (const auto& blocks : partitions(s)) {
            LeviClassical levi{blocks, residual, std::nullopt};
            if (levi_splits(levi, eps)) {
                levi.label = OrbitLabel::I;
                out.push_back(levi);
                levi.label = OrbitLabel::II;
                out.push_back(levi);
            } else {
                out.push_back(std::move(levi));
            }
        }
    }
    return out;
}

std::vector<Sheet> enumerate_sheets(const AlgebraId& alg) {
    std::vector<Sheet> out;

    if (alg.exceptional()) {
        const auto& rows = exc_rows(alg);
        for (const auto& sd : exc_sheet_dims(alg)) {
            Sheet s;
            s.levi = ExcLeviRef{alg, sd.row_index, rows[static_cast<size_t>(sd.row_index)].name};
            s.rigid_dim = sd.rigid_dim;
            s.orbit_dim = sd.d_sp;
            s.center_dim = alg.rank - rows[static_cast<size_t>(sd.row_index)].s_count;
            s.sheet_dim = sd.sheet_dim;
            out.push_back(std::move(s));
        }
    } else if (alg.kind == AlgebraKind::A) {
        int n_std = alg.standard_rep_size();
        for (const auto& d : partitions(n_std)) {
            Sheet s;
            s.levi = LeviClassical{dual(d), 0, std::nullopt};
            s.rigid_orbit = NilpotentOrbit{zero_partition(n_std), std::nullopt};
            s.rigid_dim = 0;
            s.induced_orbit = NilpotentOrbit{d, std::nullopt};
            s.orbit_dim = orbit_dim_a(d, n_std);
            s.center_dim = d.largest() - 1;
            s.sheet_dim = s.orbit_dim + s.center_dim;
            out.push_back(std::move(s));
        }
    } else {
        Epsilon eps = alg.epsilon();
        int g_dim = alg.dim();
        for (const auto& levi : levi_classes(alg)) {
            for (const auto& q : partitions_eps(levi.residual, eps)) {
                if (!is_rigid(q, eps)) continue;
                Sheet s;
                s.levi = levi;
                s.rigid_orbit = NilpotentOrbit{q, std::nullopt};
                s.rigid_dim = orbit_dim_eps(q, eps);
                s.induced_orbit = induce_chain(levi, *s.rigid_orbit, eps);
                s.orbit_dim = orbit_dim_eps(s.induced_orbit->partition, eps);
                s.center_dim = levi.block_count();
                s.sheet_dim = s.orbit_dim + s.center_dim;
                assert(s.orbit_dim == g_dim - levi_dim(levi, eps) + s.rigid_dim);
                out.push_back(std::move(s));
            }
        }
        (void)g_dim;
    }

    std::sort(out.begin(), out.end(),
              [](const Sheet& a, const Sheet& b) { return key_of(a) < key_of(b); });
    return out;
}

StratumReport stratum(const AlgebraId& alg, int m) {
    if (m < 0) throw std::invalid_argument("stratum: m must be nonnegative");
    StratumReport report;
    report.m = m;
    report.orbit_dim = 2 * m;
    for (auto& s : enumerate_sheets(alg))
        if (s.orbit_dim == 2 * m) report.sheets.push_back(std::move(s));
    report.sheet_count = static_cast<int>(report.sheets.size());
    report.dim_gm = 0;
    for (const auto& s : report.sheets) report.dim_gm = std::max(report.dim_gm, s.sheet_dim);
    return report;
}

std::vector<StratumReport> full_table(const AlgebraId& alg) {
    auto sheets = enumerate_sheets(alg);
    auto dims = orbit_dims(alg);
    std::vector<StratumReport> out;
    for (auto it = dims.rbegin(); it != dims.rend(); ++it) {
        StratumReport report;
        report.orbit_dim = *it;
        report.m = *it / 2;
        for (const auto& s : sheets)
            if (s.orbit_dim == *it) report.sheets.push_back(s);
        report.sheet_count = static_cast<int>(report.sheets.size());
        report.dim_gm = 0;
        for (const auto& s : report.sheets) report.dim_gm = std::max(report.dim_gm, s.sheet_dim);
        out.push_back(std::move(report));
    }
    return out;
}

namespace {

/// Multisets of orbit choices across groups of equal gl blocks, so that
/// conjugate data is enumerated once.
void orbit_multisets(const std::vector<int>& blocks, size_t at,
                     std::vector<std::vector<Partition>>& acc_groups,
                     std::vector<std::vector<Partition>>& out) {
    if (at == blocks.size()) {
        std::vector<Partition> flat;
        for (const auto& g : acc_groups) flat.insert(flat.end(), g.begin(), g.end());
        out.push_back(std::move(flat));
        return;
    }
    size_t end = at;
    while (end < blocks.size() && blocks[end] == blocks[at]) ++end;
    size_t count = end - at;
    auto choices = partitions(blocks[at]);

    // Combinations with repetition, nonincreasing choice indices.
    std::vector<size_t> pick(count, 0);
    for (;;) {
        std::vector<Partition> group;
        for (size_t idx : pick) group.push_back(choices[idx]);
        acc_groups.push_back(std::move(group));
        orbit_multisets(blocks, end, acc_groups, out);
        acc_groups.pop_back();

        size_t j = count;
        while (j > 0) {
            --j;
            if (pick[j] + 1 < choices.size()) {
                ++pick[j];
                for (size_t k = j + 1; k < count; ++k) pick[k] = pick[j];
                break;
            }
            if (j == 0) return;
        }
    }
}

std::vector<std::vector<Partition>> gl_orbit_choices(const Partition& blocks) {
    std::vector<std::vector<Partition>> out;
    std::vector<std::vector<Partition>> acc;
    orbit_multisets(blocks.parts(), 0, acc, out);
    return out;
}

}  // namespace

std::vector<JordanClass> jordan_classes(const AlgebraId& alg) {
    if (!alg.classical())
        throw std::invalid_argument("jordan_classes: classical kinds only");
    std::vector<JordanClass> out;
    int n_std = alg.standard_rep_size();
    int g_dim = alg.dim();

    if (alg.kind == AlgebraKind::A) {
        for (const auto& blocks : partitions(n_std)) {
            if (blocks.empty()) continue;
            int levi_sq = 0;
            for (int b : blocks.parts()) levi_sq += b * b;
            for (auto& choice : gl_orbit_choices(blocks)) {
                JordanClass jc;
                jc.levi = LeviClassical{blocks, 0, std::nullopt};
                int orbit_dim = 0;
                bool all_zero = true;
                for (size_t i = 0; i < choice.size(); ++i) {
                    orbit_dim += orbit_dim_a(choice[i], blocks.part(static_cast<int>(i)));
                    if (choice[i].largest() > 1) all_zero = false;
                }
                jc.gl_orbits = std::move(choice);
                // dim l = sum b_k^2 - 1 inside sl_N; center dim = #blocks - 1.
                jc.dim = (g_dim - (levi_sq - 1)) + orbit_dim + (blocks.size() - 1);
                jc.dense_in_sheet = all_zero;
                out.push_back(std::move(jc));
            }
        }
        return out;
    }

    Epsilon eps = alg.epsilon();
    for (const auto& levi : levi_classes(alg)) {
        std::vector<NilpotentOrbit> residual_orbits;
        for (const auto& q : partitions_eps(levi.residual, eps)) {
            if (alg.kind == AlgebraKind::D && is_very_even(q)) {
                residual_orbits.push_back({q, OrbitLabel::I});
                residual_orbits.push_back({q, OrbitLabel::II});
            } else {
                residual_orbits.push_back({q, std::nullopt});
            }
        }
        for (const auto& choice : gl_orbit_choices(levi.blocks)) {
            int gl_dim = 0;
            bool gl_zero = true;
            for (size_t i = 0; i < choice.size(); ++i) {
                gl_dim += orbit_dim_a(choice[i], levi.blocks.part(static_cast<int>(i)));
                if (choice[i].largest() > 1) gl_zero = false;
            }
            for (const auto& q : residual_orbits) {
                JordanClass jc;
                jc.levi = levi;
                jc.gl_orbits = choice;
                jc.residual_orbit = q;
                int orbit_dim = gl_dim + orbit_dim_eps(q.partition, eps);
                jc.dim = (g_dim - levi_dim(levi, eps)) + orbit_dim + levi.block_count();
                jc.dense_in_sheet = gl_zero && is_rigid(q.partition, eps);
                out.push_back(std::move(jc));
            }
        }
    }
    return out;
}

bool check_codim3(const AlgebraId& alg) {
    if (alg.dim() <= alg.rank + 3)
        throw std::invalid_argument("check_codim3: requires dim g > rk g + 3");
    auto report = stratum(alg, alg.d_g() - 1);
    if (report.sheets.empty()) return false;
    for (const auto& s : report.sheets)
        if (s.sheet_dim != alg.dim() - 3) return false;
    return true;
}

}  // namespace lie
