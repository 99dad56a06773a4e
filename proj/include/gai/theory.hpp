#pragma once

#include <compare>
#include <vector>

#include "gai/chain.hpp"
#include "gai/lset.hpp"

namespace gai {

/// A graded attribute implication: both sides are graded sets over the same
/// universe.
struct Implication {
    LSet antecedent;
    LSet consequent;

    auto operator<=>(const Implication&) const = default;
};

/// An ordered, duplicate-free list of implications together with the chain,
/// hedge and universe they are evaluated against. Duplicate formulas passed
/// to the constructor are merged, keeping the first occurrence.
class Theory {
public:
    Theory(ResiduatedChain chain, Hedge hedge, AttributeUniverse universe,
           std::vector<Implication> formulas);

    const ResiduatedChain& chain() const { return chain_; }
    const Hedge& hedge() const { return hedge_; }
    const AttributeUniverse& universe() const { return universe_; }
    const std::vector<Implication>& formulas() const { return formulas_; }

    size_t size() const { return formulas_.size(); }
    bool empty() const { return formulas_.empty(); }
    const Implication& operator[](size_t i) const { return formulas_[i]; }

    /// Same chain tables, hedge table and universe.
    bool same_structure(const Theory& o) const {
        return chain_ == o.chain_ && hedge_ == o.hedge_ && universe_ == o.universe_;
    }

    /// A theory over the same structure with different formulas.
    Theory with_formulas(std::vector<Implication> formulas) const {
        return Theory(chain_, hedge_, universe_, std::move(formulas));
    }

    bool operator==(const Theory& o) const {
        return same_structure(o) && formulas_ == o.formulas_;
    }

private:
    ResiduatedChain chain_;
    Hedge hedge_;
    AttributeUniverse universe_;
    std::vector<Implication> formulas_;
};

/// Order-insensitive comparison of the formula lists of two theories.
bool same_formula_set(const Theory& a, const Theory& b);

} // namespace gai
