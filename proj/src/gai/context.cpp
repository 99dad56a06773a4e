#include "gai/context.hpp"

#include <algorithm>
#include <set>

#include "engine.hpp"
#include "gai/semantics.hpp"

namespace gai {

FormalContext::FormalContext(ResiduatedChain chain, Hedge hedge, std::vector<std::string> objects,
                             AttributeUniverse universe, std::vector<Degree> incidence_row_major)
    : chain_(std::move(chain)),
      hedge_(std::move(hedge)),
      objects_(std::move(objects)),
      universe_(std::move(universe)),
      incidence_(std::move(incidence_row_major)) {
    if (hedge_.levels() != chain_.levels())
        throw PreconditionError("hedge is defined over " + std::to_string(hedge_.levels()) +
                                " levels but the chain has " + std::to_string(chain_.levels()));
    if (objects_.empty())
        throw PreconditionError("context must have at least one object");
    std::set<std::string> seen;
    for (const auto& o : objects_) {
        if (o.empty()) throw PreconditionError("object names must not be empty");
        if (!seen.insert(o).second) throw PreconditionError("duplicate object name '" + o + "'");
    }
    if (incidence_.size() != objects_.size() * universe_.size())
        throw PreconditionError("incidence has " + std::to_string(incidence_.size()) +
                                " cells, expected " +
                                std::to_string(objects_.size() * universe_.size()));
    for (Degree d : incidence_)
        if (d > chain_.top())
            throw PreconditionError("incidence uses degree index " + std::to_string(int(d)) +
                                    " outside the chain");
}

LSet FormalContext::row(size_t x) const {
    LSet out(universe_.size());
    for (size_t y = 0; y < universe_.size(); ++y) out[y] = at(x, y);
    return out;
}

LSet up(const FormalContext& ctx, const LSet& objects) {
    if (objects.size() != ctx.object_count())
        throw PreconditionError("universe mismatch: object set has size " +
                                std::to_string(objects.size()) + ", context has " +
                                std::to_string(ctx.object_count()) + " objects");
    const auto& chain = ctx.chain();
    LSet out(ctx.attribute_count());
    for (size_t y = 0; y < ctx.attribute_count(); ++y) {
        Degree v = chain.top();
        for (size_t x = 0; x < ctx.object_count(); ++x) {
            const Degree r = chain.residuum(ctx.hedge()(objects[x]), ctx.at(x, y));
            if (r < v) {
                v = r;
                if (v == 0) break;
            }
        }
        out[y] = v;
    }
    return out;
}

LSet down(const FormalContext& ctx, const LSet& attrs) {
    if (attrs.size() != ctx.attribute_count())
        throw PreconditionError("universe mismatch: attribute set has size " +
                                std::to_string(attrs.size()) + ", context has " +
                                std::to_string(ctx.attribute_count()) + " attributes");
    const auto& chain = ctx.chain();
    LSet out(ctx.object_count());
    for (size_t x = 0; x < ctx.object_count(); ++x) {
        Degree v = chain.top();
        for (size_t y = 0; y < ctx.attribute_count(); ++y) {
            const Degree r = chain.residuum(attrs[y], ctx.at(x, y));
            if (r < v) {
                v = r;
                if (v == 0) break;
            }
        }
        out[x] = v;
    }
    return out;
}

LSet closure(const FormalContext& ctx, const LSet& attrs) {
    return up(ctx, down(ctx, attrs));
}

Degree truth_in_context(const FormalContext& ctx, const Implication& f) {
    Degree v = ctx.chain().top();
    for (size_t x = 0; x < ctx.object_count(); ++x) {
        const Degree t = truth_degree(ctx.chain(), ctx.hedge(), f, ctx.row(x));
        if (t < v) {
            v = t;
            if (v == 0) break;
        }
    }
    return v;
}

namespace {

/// Closure of every attribute set, precomputed in enumeration order. The
/// closure of A with respect to the trivial complete set coincides with
/// up(down(A)), so consequents built this way are already saturated.
std::vector<Implication> closure_formulas(const FormalContext& ctx, std::uint64_t budget) {
    std::vector<Implication> out;
    const std::uint64_t total = lset_space_size(ctx.chain().levels(), ctx.attribute_count());
    if (total > budget)
        throw BudgetError("enumeration of " + std::to_string(total) +
                          " graded sets exceeds budget " + std::to_string(budget));
    out.reserve(size_t(total));
    for_each_lset(ctx.chain().levels(), ctx.attribute_count(), budget, [&](const LSet& a) {
        out.push_back(Implication{a, closure(ctx, a)});
    });
    return out;
}

Theory theory_shell(const FormalContext& ctx, std::vector<Implication> formulas) {
    return Theory(ctx.chain(), ctx.hedge(), ctx.universe(), std::move(formulas));
}

} // namespace

Theory trivial_complete_set(const FormalContext& ctx, std::uint64_t budget) {
    return theory_shell(ctx, closure_formulas(ctx, budget));
}

bool is_complete(const FormalContext& ctx, const Theory& t, std::uint64_t budget) {
    if (!(t.chain() == ctx.chain()) || !(t.hedge() == ctx.hedge()) ||
        !(t.universe() == ctx.universe()))
        throw PreconditionError("is_complete requires the theory and the context to share "
                                "chain, hedge and universe");
    bool complete = true;
    for_each_lset(ctx.chain().levels(), ctx.attribute_count(), budget, [&](const LSet& a) {
        if (!complete) return;
        const bool fixpoint = closure(ctx, a) == a;
        if (is_model(t, a) != fixpoint) complete = false;
    });
    return complete;
}

BaseExtraction extract_base(const FormalContext& ctx, std::uint64_t budget) {
    Theory complete = trivial_complete_set(ctx, budget);
    Theory lean = remove_redundant(complete);
    ReductionTrace trace = reduce_to_irreducible(lean);
    Theory base = trace.result;
    return BaseExtraction{std::move(base), std::move(trace)};
}

PseudoIntentSystem pseudo_intents(const FormalContext& ctx, const Theory& base,
                                  std::uint64_t budget) {
    if (!is_saturated(base))
        throw PreconditionError("pseudo_intents requires saturated consequents");
    if (!is_non_redundant(base))
        throw PreconditionError("pseudo_intents requires a non-redundant base");
    if (!is_witnessed(base))
        throw PreconditionError("pseudo_intents requires a witnessed base");
    if (!is_complete(ctx, base, budget))
        throw PreconditionError("pseudo_intents requires a base complete in the context");
    PseudoIntentSystem system;
    system.members.reserve(base.size());
    for (const Implication& f : base.formulas()) {
        if (closure(ctx, f.antecedent) == f.antecedent)
            throw PreconditionError("antecedent of a complete non-redundant base cannot be a "
                                    "closure fixpoint");
        system.members.push_back(f.antecedent);
    }
    return system;
}

bool verify_pseudo_intent_system(const FormalContext& ctx, const PseudoIntentSystem& system,
                                 std::uint64_t budget) {
    const Degree top = ctx.chain().top();
    std::vector<Implication> member_formulas;
    member_formulas.reserve(system.members.size());
    std::set<LSet> member_set;
    for (const LSet& p : system.members) {
        if (p.size() != ctx.attribute_count())
            throw PreconditionError("universe mismatch: system member has size " +
                                    std::to_string(p.size()));
        if (closure(ctx, p) == p) return false;
        member_formulas.push_back(Implication{p, closure(ctx, p)});
        member_set.insert(p);
    }

    bool ok = true;
    for_each_lset(ctx.chain().levels(), ctx.attribute_count(), budget, [&](const LSet& p) {
        if (!ok) return;
        if (closure(ctx, p) == p) return;
        bool satisfies_all = true;
        for (const Implication& q : member_formulas) {
            if (q.antecedent == p) continue;
            if (truth_degree(ctx.chain(), ctx.hedge(), q, p) != top) {
                satisfies_all = false;
                break;
            }
        }
        const bool member = member_set.count(p) > 0;
        if (member != satisfies_all) ok = false;
    });
    return ok;
}

} // namespace gai
