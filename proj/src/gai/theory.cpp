#include "gai/theory.hpp"

#include <algorithm>
#include <set>

namespace gai {

Theory::Theory(ResiduatedChain chain, Hedge hedge, AttributeUniverse universe,
               std::vector<Implication> formulas)
    : chain_(std::move(chain)), hedge_(std::move(hedge)), universe_(std::move(universe)) {
    if (hedge_.levels() != chain_.levels())
        throw PreconditionError("hedge is defined over " + std::to_string(hedge_.levels()) +
                                " levels but the chain has " + std::to_string(chain_.levels()));
    const size_t k = universe_.size();
    const Degree top = chain_.top();
    auto validate = [&](const LSet& s, const char* side, size_t idx) {
        if (s.size() != k)
            throw PreconditionError("universe mismatch: formula " + std::to_string(idx) +
                                    " has " + side + " of size " + std::to_string(s.size()) +
                                    " over a universe of size " + std::to_string(k));
        for (size_t j = 0; j < k; ++j)
            if (s[j] > top)
                throw PreconditionError("formula " + std::to_string(idx) + " uses degree index " +
                                        std::to_string(int(s[j])) + " outside the chain");
    };
    formulas_.reserve(formulas.size());
    std::set<Implication> seen;
    for (size_t i = 0; i < formulas.size(); ++i) {
        validate(formulas[i].antecedent, "antecedent", i);
        validate(formulas[i].consequent, "consequent", i);
        if (seen.insert(formulas[i]).second)
            formulas_.push_back(std::move(formulas[i]));
    }
}

bool same_formula_set(const Theory& a, const Theory& b) {
    if (a.size() != b.size()) return false;
    std::vector<Implication> fa = a.formulas();
    std::vector<Implication> fb = b.formulas();
    std::sort(fa.begin(), fa.end());
    std::sort(fb.begin(), fb.end());
    return fa == fb;
}

} // namespace gai
