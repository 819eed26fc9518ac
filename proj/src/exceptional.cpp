#include "lie/exceptional.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lie {

namespace {

const char* kFixture =
#include "exceptional_tables.inc"
    ;

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& tok : split(s, '/')) out.push_back(std::stoi(tok));
    return out;
}

void validate_row(const ExcLeviRow& row) {
    auto where = [&] { return row.algebra.name() + " row " + row.name; };
    auto factors = parse_levi_name(row.name);
    int rank_sum = 0, pos_sum = 0;
    for (const auto& f : factors) {
        rank_sum += f.rank;
        pos_sum += factor_positive_roots(f);
    }
    if (rank_sum != row.s_count)
        throw std::logic_error(where() + ": #S disagrees with the factor ranks");
    if (pos_sum != row.pos_roots)
        throw std::logic_error(where() + ": positive-root count disagrees with the factors");
    if (row.s_count > row.algebra.rank)
        throw std::logic_error(where() + ": #S exceeds the rank");
    if (row.rigid_dims.empty() || row.rigid_dims.back() != 0)
        throw std::logic_error(where() + ": rigid dims must end with the zero orbit");
    if (!std::is_sorted(row.rigid_dims.rbegin(), row.rigid_dims.rend()))
        throw std::logic_error(where() + ": rigid dims must be descending");
    if (row.printed_dsp.size() != row.rigid_dims.size() ||
        row.printed_sheet_dims.size() != row.rigid_dims.size())
        throw std::logic_error(where() + ": columns IV, V, VI must have equal length");
}

std::map<AlgebraKind, std::vector<ExcLeviRow>> load_fixture() {
    std::map<AlgebraKind, std::vector<ExcLeviRow>> tables;
    std::stringstream ss{std::string(kFixture)};
    std::string line;
    while (std::getline(ss, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto fields = split(line, '|');
        if (fields.size() != 7) throw std::logic_error("exceptional fixture: bad record: " + line);
        ExcLeviRow row;
        row.algebra = AlgebraId::parse(fields[0]);
        row.name = fields[1];
        row.s_count = std::stoi(fields[2]);
        row.pos_roots = std::stoi(fields[3]);
        row.rigid_dims = parse_int_list(fields[4]);
        row.printed_dsp = parse_int_list(fields[5]);
        row.printed_sheet_dims = parse_int_list(fields[6]);
        if (!row.algebra.exceptional())
            throw std::logic_error("exceptional fixture: classical algebra in record: " + line);
        validate_row(row);
        tables[row.algebra.kind].push_back(std::move(row));
    }
    for (auto kind : {AlgebraKind::G2, AlgebraKind::F4, AlgebraKind::E6, AlgebraKind::E7, AlgebraKind::E8}) {
        const auto& rows = tables[kind];
        if (rows.empty()) throw std::logic_error("exceptional fixture: missing table");
        // The S = Pi row must be present and must be the full diagram.
        const auto& last = rows.back();
        if (last.s_count != last.algebra.rank || last.name != last.algebra.name())
            throw std::logic_error("exceptional fixture: last row must be S = Pi");
    }
    return tables;
}

const std::map<AlgebraKind, std::vector<ExcLeviRow>>& tables() {
    static const auto t = load_fixture();
    return t;
}

}  // namespace

const std::vector<ExcLeviRow>& exc_rows(const AlgebraId& alg) {
    if (!alg.exceptional()) throw std::invalid_argument("exc_rows: exceptional kinds only");
    return tables().at(alg.kind);
}

std::vector<ExcSheetDim> exc_sheet_dims(const AlgebraId& alg) {
    std::vector<ExcSheetDim> out;
    const auto& rows = exc_rows(alg);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        const auto& row = rows[static_cast<size_t>(i)];
        for (int p : row.rigid_dims) {
            ExcSheetDim sd;
            sd.row_index = i;
            sd.rigid_dim = p;
            sd.d_sp = alg.dim() - alg.rank - 2 * row.pos_roots + p;
            sd.sheet_dim = sd.d_sp + (alg.rank - row.s_count);
            out.push_back(sd);
        }
    }
    return out;
}

std::vector<int> exc_rigid_dims(const AlgebraId& alg) {
    const auto& rows = exc_rows(alg);
    return rows.back().rigid_dims;  // the S = Pi row
}

const std::vector<TableErratum>& exc_known_errata() {
    static const std::vector<TableErratum> errata = {
        {"E6", "E6", "III",
         56, 36, "published positive-root count of the full E6 diagram; 36 is forced by "
                 "the root system and by column V"},
        {"E8", "E8", "V",
         64, 164, "published d_{S,p} for p = 164 in the S = Pi row; columns IV and VI "
                  "carry 164"},
    };
    return errata;
}

std::vector<LeviNameFactor> parse_levi_name(const std::string& name) {
    std::vector<LeviNameFactor> out;
    if (name == "Ø" || name == "O" || name.empty()) return out;  // Ø

    std::string t;
    for (char c : name)
        if (c != '(' && c != ')' && c != '\'') t += c;

    size_t pos = 0;
    auto fail = [&] { return std::invalid_argument("bad Levi name '" + name + "'"); };
    while (pos < t.size()) {
        int count = 1;
        if (std::isdigit(static_cast<unsigned char>(t[pos]))) {
            count = t[pos] - '0';
            ++pos;
            if (count < 1) throw fail();
        }
        bool tilde = false;
        char letter;
        if (pos + 1 < t.size() && static_cast<unsigned char>(t[pos]) == 0xc3 &&
            static_cast<unsigned char>(t[pos + 1]) == 0x83) {
            letter = 'A';  // "Ã" is A with a tilde
            tilde = true;
            pos += 2;
        } else {
            letter = t[pos];
            ++pos;
        }
        size_t start = pos;
        while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
        if (start == pos) throw fail();
        int rank = std::stoi(t.substr(start, pos - start));

        LeviNameFactor f;
        f.rank = rank;
        f.tilde = tilde;
        switch (letter) {
            case 'A': f.kind = AlgebraKind::A; break;
            case 'B': f.kind = AlgebraKind::B; break;
            case 'C': f.kind = AlgebraKind::C; break;
            case 'D': f.kind = AlgebraKind::D; break;
            case 'E':
                f.kind = rank == 6 ? AlgebraKind::E6 : rank == 7 ? AlgebraKind::E7 : AlgebraKind::E8;
                break;
            case 'F': f.kind = AlgebraKind::F4; break;
            case 'G': f.kind = AlgebraKind::G2; break;
            default: throw fail();
        }
        for (int k = 0; k < count; ++k) out.push_back(f);
        if (pos < t.size()) {
            if (t[pos] != '+') throw fail();
            ++pos;
        }
    }
    return out;
}

int factor_positive_roots(const LeviNameFactor& f) {
    int k = f.rank;
    switch (f.kind) {
        case AlgebraKind::A: return k * (k + 1) / 2;
        case AlgebraKind::B:
        case AlgebraKind::C: return k * k;
        case AlgebraKind::D: return k * (k - 1);
        case AlgebraKind::G2: return 6;
        case AlgebraKind::F4: return 24;
        case AlgebraKind::E6: return 36;
        case AlgebraKind::E7: return 63;
        case AlgebraKind::E8: return 120;
    }
    throw std::logic_error("unreachable");
}

}  // namespace lie
