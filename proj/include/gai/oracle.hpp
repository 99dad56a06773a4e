#pragma once

#include <cstdint>
#include <vector>

#include "gai/context.hpp"
#include "gai/theory.hpp"

namespace gai {

/// Reference implementations that enumerate instead of iterating closures.
/// They exist to cross-check the fast paths and are only meant for small
/// instances; budgets are hard limits.
namespace oracle {

/// All models of the theory, in ascending lexicographic order.
std::vector<LSet> brute_models(const Theory& t,
                               std::uint64_t budget = kDefaultEnumerationBudget);

/// Entailment as the infimum over all models of the formula's truth degree.
Degree brute_entailment(const Theory& t, const Implication& f,
                        std::uint64_t budget = kDefaultEnumerationBudget);

/// Intersection of all models containing m; must agree with least_model.
LSet brute_least_model(const Theory& t, const LSet& m,
                       std::uint64_t budget = kDefaultEnumerationBudget);

/// True when no theory with fewer formulas over the same structure is
/// equivalent to t. Searches every candidate theory built from enumerated
/// antecedent/consequent pairs, so it is only usable at toy scale;
/// candidate_budget caps the number of candidate theories examined.
bool brute_minimality(const Theory& t, std::uint64_t candidate_budget = 1'000'000,
                      std::uint64_t enumeration_budget = kDefaultEnumerationBudget);

/// Two-valued context rows packed into bit masks.
struct CrispContext {
    int attribute_count = 0;
    std::vector<std::uint32_t> rows;
};

/// Packs a two-level context. Requires levels == 2 and at most 31 attributes.
CrispContext to_crisp(const FormalContext& ctx);

/// Intersection of all rows containing the set; the full set when none does.
std::uint32_t crisp_closure(const CrispContext& ctx, std::uint32_t set);

/// The classic pseudo-intents of a two-valued context, via the recursive
/// definition evaluated in order of increasing cardinality.
std::vector<std::uint32_t> classic_pseudo_intents(const CrispContext& ctx,
                                                  std::uint64_t budget = 1u << 20);

} // namespace oracle

} // namespace gai
