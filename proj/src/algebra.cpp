#include "lie/algebra.hpp"

#include <cctype>
#include <stdexcept>

namespace lie {

bool is_classical(AlgebraKind k) {
    return k == AlgebraKind::A || k == AlgebraKind::B || k == AlgebraKind::C || k == AlgebraKind::D;
}

namespace {

int exceptional_rank(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::G2: return 2;
        case AlgebraKind::F4: return 4;
        case AlgebraKind::E6: return 6;
        case AlgebraKind::E7: return 7;
        case AlgebraKind::E8: return 8;
        default: throw std::logic_error("not exceptional");
    }
}

}  // namespace

AlgebraId AlgebraId::make(AlgebraKind kind, int rank) {
    AlgebraId id{kind, rank};
    switch (kind) {
        case AlgebraKind::A:
            if (rank < 1) throw std::invalid_argument("A_n requires n >= 1");
            break;
        case AlgebraKind::B:
            if (rank < 2) throw std::invalid_argument("B_n requires n >= 2");
            break;
        case AlgebraKind::C:
            if (rank < 2) throw std::invalid_argument("C_n requires n >= 2");
            break;
        case AlgebraKind::D:
            if (rank < 3) throw std::invalid_argument("D_n requires n >= 3 (so2, so4 are not simple)");
            break;
        default:
            if (rank != exceptional_rank(kind))
                throw std::invalid_argument("exceptional kind has a fixed rank");
    }
    return id;
}

int AlgebraId::dim() const {
    int n = rank;
    switch (kind) {
        case AlgebraKind::A: return n * n + 2 * n;
        case AlgebraKind::B:
        case AlgebraKind::C: return 2 * n * n + n;
        case AlgebraKind::D: return 2 * n * n - n;
        case AlgebraKind::G2: return 14;
        case AlgebraKind::F4: return 52;
        case AlgebraKind::E6: return 78;
        case AlgebraKind::E7: return 133;
        case AlgebraKind::E8: return 248;
    }
    throw std::logic_error("unreachable");
}

int AlgebraId::standard_rep_size() const {
    switch (kind) {
        case AlgebraKind::A: return rank + 1;
        case AlgebraKind::B: return 2 * rank + 1;
        case AlgebraKind::C:
        case AlgebraKind::D: return 2 * rank;
        default: throw std::invalid_argument("standard_rep_size: classical kinds only");
    }
}

Epsilon AlgebraId::epsilon() const {
    switch (kind) {
        case AlgebraKind::B:
        case AlgebraKind::D: return Epsilon::plus;
        case AlgebraKind::C: return Epsilon::minus;
        default: throw std::invalid_argument("epsilon: kinds B, C, D only");
    }
}

std::string AlgebraId::name() const {
    switch (kind) {
        case AlgebraKind::A: return "A" + std::to_string(rank);
        case AlgebraKind::B: return "B" + std::to_string(rank);
        case AlgebraKind::C: return "C" + std::to_string(rank);
        case AlgebraKind::D: return "D" + std::to_string(rank);
        case AlgebraKind::G2: return "G2";
        case AlgebraKind::F4: return "F4";
        case AlgebraKind::E6: return "E6";
        case AlgebraKind::E7: return "E7";
        case AlgebraKind::E8: return "E8";
    }
    throw std::logic_error("unreachable");
}

std::string AlgebraId::long_name() const {
    switch (kind) {
        case AlgebraKind::A: return "sl" + std::to_string(rank + 1);
        case AlgebraKind::B: return "so" + std::to_string(2 * rank + 1);
        case AlgebraKind::C: return "sp" + std::to_string(2 * rank);
        case AlgebraKind::D: return "so" + std::to_string(2 * rank);
        default: return name();
    }
}

AlgebraId AlgebraId::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty algebra name");
    auto bad = [&] { return std::invalid_argument("unrecognized algebra '" + text + "'"); };
    auto number_from = [&](size_t pos) {
        if (pos >= text.size()) throw bad();
        for (size_t i = pos; i < text.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw bad();
        long v = std::stol(text.substr(pos));
        if (v <= 0 || v > 1000) throw bad();
        return static_cast<int>(v);
    };

    if (text.size() >= 3 && (text[1] == 'l' || text[1] == 'o' || text[1] == 'p')) {
        std::string prefix = text.substr(0, 2);
        int n = number_from(2);
        if (prefix == "sl") {
            if (n < 2) throw bad();
            return make(AlgebraKind::A, n - 1);
        }
        if (prefix == "so") {
            if (n % 2 == 1) return make(AlgebraKind::B, (n - 1) / 2);
            return make(AlgebraKind::D, n / 2);
        }
        if (prefix == "sp") {
            if (n % 2 == 1) throw bad();
            return make(AlgebraKind::C, n / 2);
        }
        throw bad();
    }

    char k = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    int n = number_from(1);
    switch (k) {
        case 'A': return make(AlgebraKind::A, n);
        case 'B': return make(AlgebraKind::B, n);
        case 'C': return make(AlgebraKind::C, n);
        case 'D': return make(AlgebraKind::D, n);
        case 'G':
            if (n == 2) return make(AlgebraKind::G2, 2);
            throw bad();
        case 'F':
            if (n == 4) return make(AlgebraKind::F4, 4);
            throw bad();
        case 'E':
            if (n == 6) return make(AlgebraKind::E6, 6);
            if (n == 7) return make(AlgebraKind::E7, 7);
            if (n == 8) return make(AlgebraKind::E8, 8);
            throw bad();
        default: throw bad();
    }
}

std::string to_string(OrbitLabel l) { return l == OrbitLabel::I ? "I" : "II"; }

}  // namespace lie
