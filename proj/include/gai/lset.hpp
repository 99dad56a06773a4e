#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gai/chain.hpp"
#include "gai/errors.hpp"

namespace gai {

/// Ordered list of distinct attribute names. Graded sets are vectors of
/// degrees positioned by this order.
class AttributeUniverse {
public:
    explicit AttributeUniverse(std::vector<std::string> names);

    size_t size() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<size_t> index_of(const std::string& name) const;

    bool operator==(const AttributeUniverse& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

/// A graded set over a fixed attribute universe: one degree per attribute.
/// Comparison is lexicographic in universe order.
class LSet {
public:
    LSet() = default;
    explicit LSet(size_t n) : deg_(n, 0) {}
    explicit LSet(std::vector<Degree> degrees) : deg_(std::move(degrees)) {}

    size_t size() const { return deg_.size(); }
    Degree operator[](size_t i) const { return deg_[i]; }
    Degree& operator[](size_t i) { return deg_[i]; }
    const Degree* data() const { return deg_.data(); }
    Degree* data() { return deg_.data(); }
    const std::vector<Degree>& degrees() const { return deg_; }

    bool empty_set() const {
        for (Degree d : deg_)
            if (d) return false;
        return true;
    }

    auto operator<=>(const LSet&) const = default;

private:
    std::vector<Degree> deg_;
};

/// Degree to which A is included in B: the minimum over attributes of
/// residuum(A(y), B(y)). Full inclusion is witnessed by the top degree.
Degree subsethood(const ResiduatedChain& chain, const LSet& a, const LSet& b);

/// Componentwise maximum.
LSet set_union(const LSet& a, const LSet& b);

/// Componentwise minimum.
LSet set_intersection(const LSet& a, const LSet& b);

/// The a-multiple of A: tensor(a, A(y)) at every attribute.
LSet multiple(const ResiduatedChain& chain, Degree a, const LSet& s);

/// Pointwise order, equivalent to subsethood(a, b) == top.
bool is_full_subset(const LSet& a, const LSet& b);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Number of graded sets over a universe of the given size, clamped to
/// 2^64-1 on overflow so budget comparisons stay safe.
std::uint64_t lset_space_size(int levels, size_t universe_size);

/// Calls fn for every graded set over the universe in ascending
/// lexicographic order. Throws BudgetError before enumerating anything if
/// the space exceeds the budget.
template <typename Fn>
void for_each_lset(int levels, size_t universe_size, std::uint64_t budget, Fn&& fn) {
    const std::uint64_t total = lset_space_size(levels, universe_size);
    if (total > budget)
        throw BudgetError("enumeration of " + std::to_string(total) +
                          " graded sets exceeds budget " + std::to_string(budget));
    LSet cur(universe_size);
    const Degree top = Degree(levels - 1);
    for (;;) {
        fn(const_cast<const LSet&>(cur));
        bool advanced = false;
        size_t i = universe_size;
        while (i > 0) {
            --i;
            if (cur[i] < top) {
                ++cur[i];
                for (size_t j = i + 1; j < universe_size; ++j) cur[j] = 0;
                advanced = true;
                break;
            }
        }
        if (!advanced) return;
    }
}

/// Materialized enumeration in the same order.
std::vector<LSet> enumerate_lsets(int levels, size_t universe_size,
                                  std::uint64_t budget = kDefaultEnumerationBudget);

} // namespace gai
