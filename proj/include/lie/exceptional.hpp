#pragma once

#include <string>
#include <vector>

#include "lie/algebra.hpp"

namespace lie {

/// One Levi-class row of the exceptional tables. Columns I-IV are the data
/// used for computation; printed_dsp / printed_sheet_dims transcribe the
/// published columns V and VI verbatim and are kept only for verification.
struct ExcLeviRow {
    AlgebraId algebra;
    std::string name;               // column I, e.g. "D4", "Ã1", "(3A1)'"
    int s_count = 0;                // column II, #S
    int pos_roots = 0;              // column III, #Delta+^S
    std::vector<int> rigid_dims;    // column IV, descending
    std::vector<int> printed_dsp;        // column V as published
    std::vector<int> printed_sheet_dims; // column VI as published
};

/// Full transcription for one exceptional algebra; validated on first load.
const std::vector<ExcLeviRow>& exc_rows(const AlgebraId& alg);

struct ExcSheetDim {
    int row_index = 0;
    int rigid_dim = 0;   // p
    int d_sp = 0;        // dim g - rk g - 2 * pos_roots + p
    int sheet_dim = 0;   // d_sp + (rk g - s_count)
};

/// Recomputed columns V and VI for every (row, p) pair, in table order.
std::vector<ExcSheetDim> exc_sheet_dims(const AlgebraId& alg);

/// R_g for an exceptional algebra: the S = Pi row's rigid_dims.
std::vector<int> exc_rigid_dims(const AlgebraId& alg);

/// A cell where the published table deviates from recomputation (or from a
/// provable input value). The fixture stores corrected inputs and verbatim
/// outputs; every V/VI recomputation mismatch must appear in this list.
struct TableErratum {
    std::string algebra;
    std::string row;
    std::string column;
    int printed = 0;
    int value = 0;       // recomputed / corrected
    std::string note;
};

const std::vector<TableErratum>& exc_known_errata();

/// One parsed factor of a Levi name: "2A2" contributes two {A,2} entries.
struct LeviNameFactor {
    AlgebraKind kind;
    int rank = 0;
    bool tilde = false;  // short-root variant (F4, G2 only)

    auto operator<=>(const LeviNameFactor&) const = default;
};

/// Parses column-I names ("A3+A2+A1", "(3A1)''", "Ã1+A2", "Ø").
std::vector<LeviNameFactor> parse_levi_name(const std::string& name);

/// Positive-root count of one factor (A_k: k(k+1)/2, B/C_k: k^2, ...).
int factor_positive_roots(const LeviNameFactor& f);

}  // namespace lie
