#include "ainf/multi_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace ainf {

MultiIndex::MultiIndex(std::initializer_list<Entry> entries) : entries_(entries) {
    normalize();
}

void MultiIndex::normalize() {
    std::sort(entries_.begin(), entries_.end());
    std::vector<Entry> merged;
    for (const auto& [v, e] : entries_) {
        if (v == 0) throw std::invalid_argument("MultiIndex: variable indices are 1-based");
        if (!merged.empty() && merged.back().first == v)
            merged.back().second += e;
        else
            merged.emplace_back(v, e);
    }
    std::erase_if(merged, [](const Entry& en) { return en.second == 0; });
    entries_ = std::move(merged);
}

std::uint32_t MultiIndex::exponent(VarIndex v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const Entry& e, VarIndex x) { return e.first < x; });
    return (it != entries_.end() && it->first == v) ? it->second : 0;
}

std::uint64_t MultiIndex::order() const {
    std::uint64_t total = 0;
    for (const auto& [v, e] : entries_) total += e;
    return total;
}

void MultiIndex::bump(VarIndex v, std::uint32_t by) {
    if (v == 0) throw std::invalid_argument("MultiIndex: variable indices are 1-based");
    if (by == 0) return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const Entry& e, VarIndex x) { return e.first < x; });
    if (it != entries_.end() && it->first == v)
        it->second += by;
    else
        entries_.insert(it, {v, by});
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
    MultiIndex out = *this;
    for (const auto& [v, e] : other.entries_) out.bump(v, e);
    return out;
}

bool MultiIndex::contains(const MultiIndex& other) const {
    for (const auto& [v, e] : other.entries_)
        if (exponent(v) < e) return false;
    return true;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
    if (!contains(other)) throw std::invalid_argument("MultiIndex: subtraction underflow");
    MultiIndex out;
    out.entries_.reserve(entries_.size());
    for (const auto& [v, e] : entries_) {
        std::uint32_t d = e - other.exponent(v);
        if (d > 0) out.entries_.emplace_back(v, d);
    }
    return out;
}

Integer MultiIndex::choose(const MultiIndex& alpha, const MultiIndex& beta) {
    if (!alpha.contains(beta)) return Integer(0);
    Integer c(1);
    for (const auto& [v, e] : beta.entries_) c *= binomial(alpha.exponent(v), e);
    return c;
}

std::vector<MultiIndex> MultiIndex::sub_indices() const {
    std::vector<MultiIndex> out;
    std::vector<std::uint32_t> cur(entries_.size(), 0);
    while (true) {
        MultiIndex beta;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (cur[i] > 0) beta.entries_.emplace_back(entries_[i].first, cur[i]);
        out.push_back(std::move(beta));
        std::size_t i = 0;
        for (; i < cur.size(); ++i) {
            if (cur[i] < entries_[i].second) {
                ++cur[i];
                std::fill(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(i), 0);
                break;
            }
        }
        if (i == cur.size()) break;
    }
    return out;
}

MultiIndex MultiIndex::renamed(const std::vector<std::pair<VarIndex, VarIndex>>& map) const {
    MultiIndex out;
    for (const auto& [v, e] : entries_) {
        VarIndex w = v;
        for (const auto& [from, to] : map)
            if (from == v) {
                w = to;
                break;
            }
        out.bump(w, e);
    }
    return out;
}

std::string to_string(const MultiIndex& m) {
    if (m.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : m.entries()) {
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(v);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace ainf
