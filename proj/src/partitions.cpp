#include "lie/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace lie {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::multiplicity(int v) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

Partition dual(const Partition& p) {
    std::vector<int> s;
    s.reserve(static_cast<size_t>(p.largest()));
    for (int i = 1; i <= p.largest(); ++i) {
        int count = 0;
        for (int v : p.parts())
            if (v >= i) ++count;
        s.push_back(count);
    }
    return Partition(std::move(s));
}

bool dominates(const Partition& p, const Partition& q) {
    if (p.total() != q.total())
        throw std::invalid_argument("dominates: partitions of different integers");
    int sp = 0, sq = 0;
    int k = std::max(p.size(), q.size());
    for (int i = 0; i < k; ++i) {
        sp += p.part(i);
        sq += q.part(i);
        if (sp < sq) return false;
    }
    return true;
}

namespace {

void emit(std::vector<int>& acc, int remaining, int cap, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int v = std::min(cap, remaining); v >= 1; --v) {
        acc.push_back(v);
        emit(acc, remaining - v, v, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int n) {
    if (n < 0) throw std::invalid_argument("partitions: negative integer");
    std::vector<Partition> out;
    std::vector<int> acc;
    emit(acc, n, n, out);
    return out;
}

bool in_p_eps(const Partition& p, Epsilon eps) {
    for (int v : p.parts()) {
        bool constrained = (v % 2 == 0) == (eps == Epsilon::plus);
        if (constrained && p.multiplicity(v) % 2 != 0) return false;
    }
    return true;
}

std::vector<Partition> partitions_eps(int n, Epsilon eps) {
    std::vector<Partition> out;
    for (auto& p : partitions(n))
        if (in_p_eps(p, eps)) out.push_back(std::move(p));
    return out;
}

bool is_very_even(const Partition& p) {
    for (int v : p.parts())
        if (v % 2 != 0 || p.multiplicity(v) % 2 != 0) return false;
    return true;
}

std::string to_string(const Partition& p) {
    std::string s = "[";
    for (int i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.part(i));
    }
    return s + "]";
}

std::string to_exponent_string(const Partition& p) {
    std::string s = "[";
    int i = 0;
    while (i < p.size()) {
        int v = p.part(i), run = 0;
        while (i < p.size() && p.part(i) == v) ++i, ++run;
        if (s.size() > 1) s += ',';
        s += std::to_string(v);
        if (run > 1) s += '^' + std::to_string(run);
    }
    return s + "]";
}

Partition parse_partition(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (!t.empty() && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < t.size()) {
        size_t next = t.find(',', pos);
        std::string tok = t.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.empty()) throw std::invalid_argument("parse_partition: empty component");
        int value, repeat = 1;
        size_t caret = tok.find('^');
        try {
            if (caret == std::string::npos) {
                value = std::stoi(tok);
            } else {
                value = std::stoi(tok.substr(0, caret));
                repeat = std::stoi(tok.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_partition: bad component '" + tok + "'");
        }
        if (repeat < 0) throw std::invalid_argument("parse_partition: negative exponent");
        for (int k = 0; k < repeat; ++k) parts.push_back(value);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return Partition(std::move(parts));
}

}  // namespace lie
