#include "gai/reduce.hpp"

#include <algorithm>

#include "engine.hpp"
#include "gai/semantics.hpp"

namespace gai {

namespace {

void check_pair(const Theory& t, size_t target, size_t source) {
    if (target >= t.size() || source >= t.size())
        throw PreconditionError("formula index out of range (theory has " +
                                std::to_string(t.size()) + " formulas)");
    if (target == source)
        throw PreconditionError("reduction step needs two distinct formulas");
}

/// hedge(S(C, A)) (x) D for target antecedent A and source C => D.
LSet step_increment(const Theory& t, const LSet& a, const Implication& source) {
    const Degree s = subsethood(t.chain(), source.antecedent, a);
    return multiple(t.chain(), t.hedge()(s), source.consequent);
}

bool grows(const LSet& incr, const LSet& a) {
    for (size_t j = 0; j < a.size(); ++j)
        if (incr[j] > a[j]) return true;
    return false;
}

} // namespace

Theory reduction_step(const Theory& t, size_t target, size_t source) {
    check_pair(t, target, source);
    const LSet& a = t[target].antecedent;
    const LSet incr = step_increment(t, a, t[source]);
    if (!grows(incr, a))
        throw NotApplicableError("step (" + std::to_string(target) + ", " +
                                 std::to_string(source) +
                                 ") does not grow the target antecedent");
    Implication rewritten{set_union(a, incr), t[target].consequent};
    for (size_t i = 0; i < t.size(); ++i)
        if (t[i] == rewritten)
            throw InvariantViolationError("step (" + std::to_string(target) + ", " +
                                          std::to_string(source) +
                                          ") produces a formula already present at index " +
                                          std::to_string(i));
    std::vector<Implication> out = t.formulas();
    out[target] = std::move(rewritten);
    return t.with_formulas(std::move(out));
}

bool is_irreducible(const Theory& t) {
    for (size_t target = 0; target < t.size(); ++target) {
        for (size_t source = 0; source < t.size(); ++source) {
            if (source == target) continue;
            const LSet incr = step_increment(t, t[target].antecedent, t[source]);
            if (grows(incr, t[target].antecedent)) return false;
        }
    }
    return true;
}

ReductionTrace reduce_to_irreducible(const Theory& t) {
    if (!is_saturated(t))
        throw PreconditionError("reduce_to_irreducible requires saturated consequents");
    if (!is_non_redundant(t))
        throw PreconditionError("reduce_to_irreducible requires a non-redundant theory");

    const size_t m = t.size();
    const size_t k = t.universe().size();
    std::vector<Implication> cur = t.formulas();
    std::vector<ReductionStep> steps;

    // Pair results depend only on the target antecedent and the source
    // formula; consequents never change. Caching the antecedent versions a
    // pair was last evaluated at makes the rescan after each step cheap
    // without changing which pair fires first.
    std::vector<std::uint32_t> version(m, 1);
    const bool use_cache = m > 0 && m <= 4096;
    std::vector<std::uint64_t> seen;
    if (use_cache) seen.assign(m * m, 0);
    auto pair_key = [&](size_t tgt, size_t src) {
        return (std::uint64_t(version[tgt]) << 32) | version[src];
    };

    const size_t step_bound = m * k * size_t(t.chain().levels());
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t tgt = 0; tgt < m && !progress; ++tgt) {
            for (size_t src = 0; src < m && !progress; ++src) {
                if (src == tgt) continue;
                if (use_cache && seen[tgt * m + src] == pair_key(tgt, src)) continue;
                const LSet incr = step_increment(t, cur[tgt].antecedent, cur[src]);
                if (!grows(incr, cur[tgt].antecedent)) {
                    if (use_cache) seen[tgt * m + src] = pair_key(tgt, src);
                    continue;
                }
                Implication rewritten{set_union(cur[tgt].antecedent, incr), cur[tgt].consequent};
                for (size_t i = 0; i < m; ++i)
                    if (cur[i] == rewritten)
                        throw InvariantViolationError(
                            "rewrite of formula " + std::to_string(tgt) +
                            " collides with formula " + std::to_string(i) +
                            "; the input was not non-redundant");
                steps.push_back(ReductionStep{tgt, src, incr, rewritten.antecedent});
                cur[tgt] = std::move(rewritten);
                ++version[tgt];
                progress = true;
            }
        }
        if (steps.size() > step_bound)
            throw Error("internal error: reduction exceeded its termination bound");
    }

    Theory result = t.with_formulas(std::move(cur));
    return ReductionTrace{t, std::move(steps), std::move(result)};
}

ReductionTrace replay_trace(const Theory& t, std::span<const StepChoice> choices) {
    Theory cur = t;
    std::vector<ReductionStep> steps;
    steps.reserve(choices.size());
    for (size_t i = 0; i < choices.size(); ++i) {
        const auto& c = choices[i];
        try {
            Theory next = reduction_step(cur, c.target, c.source);
            LSet incr = step_increment(cur, cur[c.target].antecedent, cur[c.source]);
            steps.push_back(ReductionStep{c.target, c.source, std::move(incr),
                                          next[c.target].antecedent});
            cur = std::move(next);
        } catch (const NotApplicableError& e) {
            throw NotApplicableError("replay step " + std::to_string(i) + ": " + e.what());
        } catch (const InvariantViolationError& e) {
            throw InvariantViolationError("replay step " + std::to_string(i) + ": " + e.what());
        } catch (const PreconditionError& e) {
            throw PreconditionError("replay step " + std::to_string(i) + ": " + e.what());
        }
    }
    return ReductionTrace{t, std::move(steps), std::move(cur)};
}

Theory infl_construction(const Theory& t) {
    detail::ClosureEngine eng(t);
    std::vector<Implication> out;
    out.reserve(t.size());
    for (size_t i = 0; i < t.size(); ++i) {
        const LSet full = eng.least_model_of(t[i].antecedent);
        const LSet rest = eng.least_model_of(t[i].antecedent, i);
        out.push_back(Implication{rest, full});
    }
    return t.with_formulas(std::move(out));
}

} // namespace gai

