#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "ainf/rational.hpp"

namespace ainf {

// 1-based variable index into x_1, x_2, x_3, ...  There is no global
// dimension: every sum over variables ranges over the finite support of the
// values at hand, so an unbounded index set costs nothing.
using VarIndex = std::uint32_t;

// Sparse derivative/monomial exponent vector.  Entries are kept sorted by
// variable and never zero, so structural equality is semantic equality.
class MultiIndex {
public:
    using Entry = std::pair<VarIndex, std::uint32_t>;

    MultiIndex() = default;
    MultiIndex(std::initializer_list<Entry> entries);

    static MultiIndex unit(VarIndex v) { return MultiIndex({{v, 1}}); }

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::uint32_t exponent(VarIndex v) const;
    std::uint64_t order() const;  // |alpha|

    void bump(VarIndex v, std::uint32_t by = 1);

    MultiIndex operator+(const MultiIndex& other) const;
    // Componentwise difference; requires other <= *this.
    MultiIndex operator-(const MultiIndex& other) const;
    bool contains(const MultiIndex& other) const;  // other <= *this

    // prod_v binom(alpha_v, beta_v); the multi-index Leibniz coefficient.
    static Integer choose(const MultiIndex& alpha, const MultiIndex& beta);

    // All beta with beta <= alpha, in a deterministic odometer order.
    std::vector<MultiIndex> sub_indices() const;

    MultiIndex renamed(const std::vector<std::pair<VarIndex, VarIndex>>& map) const;

    auto operator<=>(const MultiIndex& other) const = default;

private:
    std::vector<Entry> entries_;
    void normalize();
};

std::string to_string(const MultiIndex& m);

}  // namespace ainf
