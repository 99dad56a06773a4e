#pragma once

#include <string>
#include <vector>

#include "gai/reduce.hpp"
#include "gai/theory.hpp"

namespace gai {

/// Graded incidence data: objects times attributes, each cell a degree.
class FormalContext {
public:
    FormalContext(ResiduatedChain chain, Hedge hedge, std::vector<std::string> objects,
                  AttributeUniverse universe, std::vector<Degree> incidence_row_major);

    const ResiduatedChain& chain() const { return chain_; }
    const Hedge& hedge() const { return hedge_; }
    const std::vector<std::string>& objects() const { return objects_; }
    const AttributeUniverse& universe() const { return universe_; }

    size_t object_count() const { return objects_.size(); }
    size_t attribute_count() const { return universe_.size(); }
    Degree at(size_t x, size_t y) const { return incidence_[x * universe_.size() + y]; }
    const std::vector<Degree>& incidence() const { return incidence_; }

    /// Row x as a graded attribute set.
    LSet row(size_t x) const;

private:
    ResiduatedChain chain_;
    Hedge hedge_;
    std::vector<std::string> objects_;
    AttributeUniverse universe_;
    std::vector<Degree> incidence_;
};

/// Attributes shared by a graded set of objects, with the hedge applied to
/// the object degrees: A^(y) = min over x of residuum(hedge(A(x)), I(x, y)).
LSet up(const FormalContext& ctx, const LSet& objects);

/// Objects having a graded set of attributes: B_(x) = min over y of
/// residuum(B(y), I(x, y)). No hedge is applied on this side.
LSet down(const FormalContext& ctx, const LSet& attrs);

/// The attribute-set closure up(down(B)).
LSet closure(const FormalContext& ctx, const LSet& attrs);

/// Degree to which an implication holds in the data: the minimum over
/// object rows of its truth degree.
Degree truth_in_context(const FormalContext& ctx, const Implication& f);

/// The theory {A => closure(A)} over all graded attribute sets. Its models
/// are exactly the closure fixpoints, so it is complete in the context.
/// Enumerates the whole space, guarded by the budget.
Theory trivial_complete_set(const FormalContext& ctx,
                            std::uint64_t budget = kDefaultEnumerationBudget);

/// True when the models of the theory are exactly the closure fixpoints of
/// the context. Enumerates the whole space, guarded by the budget.
bool is_complete(const FormalContext& ctx, const Theory& t,
                 std::uint64_t budget = kDefaultEnumerationBudget);

struct BaseExtraction {
    Theory base;
    ReductionTrace trace;
};

/// Full pipeline from data to a complete, non-redundant, witnessed theory:
/// trivial complete set, saturation, redundancy removal, reduction to an
/// irreducible form. The trace covers the reduction phase.
BaseExtraction extract_base(const FormalContext& ctx,
                            std::uint64_t budget = kDefaultEnumerationBudget);

struct PseudoIntentSystem {
    std::vector<LSet> members;
};

/// The antecedents of an extracted base, checked to be a valid system:
/// the base must be saturated, non-redundant, witnessed and complete, and
/// every antecedent must differ from its closure.
PseudoIntentSystem pseudo_intents(const FormalContext& ctx, const Theory& base,
                                  std::uint64_t budget = kDefaultEnumerationBudget);

/// Checks the defining fixpoint condition: a non-fixpoint P belongs to the
/// system exactly when every other member formula Q => closure(Q) holds in
/// P to the top degree. Members that are closure fixpoints are rejected.
bool verify_pseudo_intent_system(const FormalContext& ctx, const PseudoIntentSystem& system,
                                 std::uint64_t budget = kDefaultEnumerationBudget);

} // namespace gai
