#include "gai/semantics.hpp"

#include "engine.hpp"

namespace gai {

Degree truth_degree(const ResiduatedChain& chain, const Hedge& hedge, const Implication& f,
                    const LSet& m) {
    const Degree sa = subsethood(chain, f.antecedent, m);
    const Degree sb = subsethood(chain, f.consequent, m);
    return chain.residuum(hedge(sa), sb);
}

bool is_model(const Theory& t, const LSet& m) {
    if (m.size() != t.universe().size())
        throw PreconditionError("universe mismatch: candidate model has size " +
                                std::to_string(m.size()));
    for (const Implication& f : t.formulas())
        if (truth_degree(t.chain(), t.hedge(), f, m) != t.chain().top()) return false;
    return true;
}

LSet least_model(const Theory& t, const LSet& m) {
    if (m.size() != t.universe().size())
        throw PreconditionError("universe mismatch: seed set has size " + std::to_string(m.size()));
    detail::ClosureEngine eng(t);
    return eng.least_model_of(m);
}

Degree entailment_degree(const Theory& t, const Implication& f) {
    const LSet n = least_model(t, f.antecedent);
    return subsethood(t.chain(), f.consequent, n);
}

Theory saturate(const Theory& t) {
    detail::ClosureEngine eng(t);
    std::vector<Implication> out;
    out.reserve(t.size());
    for (const Implication& f : t.formulas())
        out.push_back(Implication{f.antecedent, eng.least_model_of(f.antecedent)});
    return t.with_formulas(std::move(out));
}

bool is_saturated(const Theory& t) {
    detail::ClosureEngine eng(t);
    for (const Implication& f : t.formulas())
        if (eng.least_model_of(f.antecedent) != f.consequent) return false;
    return true;
}

Theory remove_redundant(const Theory& t) {
    detail::ClosureEngine eng(t);
    std::vector<Implication> kept;
    kept.reserve(t.size());
    for (size_t i = 0; i < t.size(); ++i) {
        LSet n = t[i].antecedent;
        const bool entailed = eng.close(n.data(), i, t[i].consequent.data());
        if (entailed)
            eng.set_active(i, false);
        else
            kept.push_back(t[i]);
    }
    return t.with_formulas(std::move(kept));
}

bool is_non_redundant(const Theory& t) {
    detail::ClosureEngine eng(t);
    for (size_t i = 0; i < t.size(); ++i) {
        LSet n = t[i].antecedent;
        if (eng.close(n.data(), i, t[i].consequent.data())) return false;
    }
    return true;
}

bool is_witnessed(const Theory& t) {
    if (!is_non_redundant(t))
        throw PreconditionError("is_witnessed requires a non-redundant theory");
    for (size_t i = 0; i < t.size(); ++i) {
        for (size_t j = 0; j < t.size(); ++j) {
            if (j == i) continue;
            if (truth_degree(t.chain(), t.hedge(), t[j], t[i].antecedent) != t.chain().top())
                return false;
        }
    }
    return true;
}

bool is_equivalent(const Theory& a, const Theory& b) {
    if (!a.same_structure(b))
        throw PreconditionError("is_equivalent requires theories over the same chain, hedge "
                                "and universe");
    {
        detail::ClosureEngine eng(a);
        for (const Implication& f : b.formulas()) {
            LSet n = f.antecedent;
            if (!eng.close(n.data(), detail::npos, f.consequent.data())) return false;
        }
    }
    {
        detail::ClosureEngine eng(b);
        for (const Implication& f : a.formulas()) {
            LSet n = f.antecedent;
            if (!eng.close(n.data(), detail::npos, f.consequent.data())) return false;
        }
    }
    return true;
}

Theory prepare(const Theory& t) {
    return remove_redundant(saturate(t));
}

} // namespace gai
