#pragma once

#include <span>
#include <vector>

#include "gai/theory.hpp"

namespace gai {

/// One applied rewrite: formula `target` had its antecedent enlarged by the
/// hedge(S(C, A))-multiple of the consequent of formula `source`.
struct ReductionStep {
    size_t target = 0;
    size_t source = 0;
    LSet increment;
    LSet new_antecedent;

    bool operator==(const ReductionStep&) const = default;
};

/// Record of a full run: replaying the steps from the initial theory yields
/// the final one.
struct ReductionTrace {
    Theory initial;
    std::vector<ReductionStep> steps;
    Theory result;
};

/// A pair choice for replaying a recorded run.
struct StepChoice {
    size_t target = 0;
    size_t source = 0;
};

/// Applies one rewrite: replaces the antecedent A of formula `target` by
/// A joined with hedge(S(C, A)) (x) D, where C => D is formula `source`.
/// Throws NotApplicableError when the join does not grow A, and
/// InvariantViolationError when the rewritten formula collides with a
/// formula already present.
Theory reduction_step(const Theory& t, size_t target, size_t source);

/// True when no ordered pair of distinct formulas admits a reduction step.
bool is_irreducible(const Theory& t);

/// Applies the first applicable (target, source) pair in index order,
/// rescans from the start after every step, and stops at a fixpoint.
/// Requires a theory with saturated consequents that is non-redundant;
/// these properties and the formula count are preserved, and the result is
/// additionally witnessed.
ReductionTrace reduce_to_irreducible(const Theory& t);

/// Re-applies a recorded list of pair choices. Errors name the failing step.
ReductionTrace replay_trace(const Theory& t, std::span<const StepChoice> steps);

/// For every formula A => B, emits the least model of A under the remaining
/// formulas as the new antecedent and the least model of A under the whole
/// theory as the consequent. Equivalence of the result to the input is only
/// guaranteed under the globalization hedge.
Theory infl_construction(const Theory& t);

} // namespace gai
