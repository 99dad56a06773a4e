#pragma once

#include "gai/theory.hpp"

namespace gai {

/// Truth degree of an implication in a graded set M:
/// residuum(hedge(S(A, M)), S(B, M)).
Degree truth_degree(const ResiduatedChain& chain, const Hedge& hedge, const Implication& f,
                    const LSet& m);

/// True when every formula of the theory holds in M to the top degree.
bool is_model(const Theory& t, const LSet& m);

/// Least model of the theory containing M, computed by iterating
/// N := N with hedge(S(A, N))-multiples of consequents joined in, until the
/// round fixpoint. Terminates because N only grows in a finite space.
LSet least_model(const Theory& t, const LSet& m);

/// Degree to which the theory entails the implication: S(B, [A]).
Degree entailment_degree(const Theory& t, const Implication& f);

/// Replaces every consequent by the least model of its antecedent, merging
/// any duplicates that arise (first occurrence wins). The result is an
/// equivalent theory whose consequents cannot be enlarged further.
Theory saturate(const Theory& t);

/// True when every consequent already equals the least model of its
/// antecedent.
bool is_saturated(const Theory& t);

/// Scans formulas in list order and deletes each one that the remaining
/// formulas entail to the top degree. The result is an equivalent,
/// non-redundant subset of the input.
Theory remove_redundant(const Theory& t);

/// True when no formula is entailed to the top degree by the others.
bool is_non_redundant(const Theory& t);

/// True when every antecedent is a model of the other formulas, so each
/// formula's presence is observable. Requires a non-redundant input.
bool is_witnessed(const Theory& t);

/// Mutual entailment of all member formulas to the top degree. Both
/// theories must share chain, hedge and universe.
bool is_equivalent(const Theory& a, const Theory& b);

/// The documented entry path for arbitrary input: saturate, then drop
/// redundant formulas.
Theory prepare(const Theory& t);

} // namespace gai
