#pragma once

#include <vector>

#include "gai/context.hpp"
#include "gai/reduce.hpp"
#include "gai/rng.hpp"
#include "gai/theory.hpp"

// Shared fixtures. The small worked theories below are kept as literal
// degree indices; every expected value was computed by hand and is frozen
// here so regressions surface as exact mismatches.
namespace fixtures {

using namespace gai;

inline LSet ls(std::vector<Degree> v) {
    return LSet(std::move(v));
}

inline Implication imp(std::vector<Degree> a, std::vector<Degree> b) {
    return Implication{ls(std::move(a)), ls(std::move(b))};
}

// Three-level Goedel chain with the identity hedge over {p, q, r}.
// Degrees: 0, 1 = 0.5, 2 = 1.
inline Theory godel3_theory(std::vector<Implication> formulas) {
    ResiduatedChain chain = ResiduatedChain::make(Variety::godel, 3);
    return Theory(chain, Hedge::identity(3), AttributeUniverse({"p", "q", "r"}),
                  std::move(formulas));
}

// { {0.5/p} => {0.5/p, 0.5/q, r},  {p} => {p, q, r} }
inline Theory godel3_gamma() {
    return godel3_theory({imp({1, 0, 0}, {1, 1, 2}), imp({2, 0, 0}, {2, 2, 2})});
}

// One reduction step on formula 0 with source 1 rewrites the antecedent to
// {0.5/p, 0.5/q, 0.5/r}.
inline Theory godel3_gamma_prime() {
    return godel3_theory({imp({1, 1, 1}, {1, 1, 2}), imp({2, 0, 0}, {2, 2, 2})});
}

// The least-model construction applied to each antecedent against the
// remaining formulas; not equivalent to godel3_gamma under identity.
inline Theory godel3_sigma() {
    return godel3_theory({imp({1, 1, 1}, {1, 1, 2}), imp({2, 1, 2}, {2, 2, 2})});
}

// Five-level Lukasiewicz chain with the identity hedge over {p, q, r, s}.
// Degrees: 0, 1 = 0.25, 2 = 0.5, 3 = 0.75, 4 = 1.
inline Theory luk5_theory(std::vector<Implication> formulas) {
    ResiduatedChain chain = ResiduatedChain::make(Variety::lukasiewicz, 5);
    return Theory(chain, Hedge::identity(5), AttributeUniverse({"p", "q", "r", "s"}),
                  std::move(formulas));
}

// [0] {0.25/r, 0.25/s}        => {0.75/p, 0.75/q, 0.75/r, 0.25/s}
// [1] {0.5/p, 0.25/q, 0.5/s}  => {0.75/p, 0.75/q, r, 0.5/s}
// [2] {0.25/p, s}             => {0.75/p, q, r, s}
inline Theory luk5_gamma0() {
    return luk5_theory({imp({0, 0, 1, 1}, {3, 3, 3, 1}),
                        imp({2, 1, 0, 2}, {3, 3, 4, 2}),
                        imp({1, 0, 0, 4}, {3, 4, 4, 4})});
}

// The recorded run that turns luk5_gamma0 into an irreducible theory.
inline std::vector<StepChoice> luk5_steps() {
    return {{0, 1}, {0, 1}, {1, 2}, {2, 1}, {2, 1}, {2, 1}};
}

// Expected antecedent of the rewritten target after each step; consequents
// never change.
struct ExpectedStep {
    size_t target;
    LSet antecedent;
};

inline std::vector<ExpectedStep> luk5_expected_antecedents() {
    return {
        {0, ls({1, 1, 2, 1})},
        {0, ls({2, 2, 3, 1})},
        {1, ls({2, 2, 2, 2})},
        {2, ls({1, 1, 2, 4})},
        {2, ls({2, 2, 3, 4})},
        {2, ls({3, 3, 4, 4})},
    };
}

inline Theory luk5_gamma5() {
    return luk5_theory({imp({2, 2, 3, 1}, {3, 3, 3, 1}),
                        imp({2, 2, 2, 2}, {3, 3, 4, 2}),
                        imp({3, 3, 4, 4}, {3, 4, 4, 4})});
}

// Deterministic generators for property tests.

inline LSet random_lset(SplitMix64& rng, size_t k, int levels) {
    LSet out(k);
    for (size_t i = 0; i < k; ++i) out[i] = Degree(rng.bounded(std::uint64_t(levels)));
    return out;
}

struct RandomTheorySpec {
    size_t universe_min = 2;
    size_t universe_max = 4;
    size_t formulas_min = 1;
    size_t formulas_max = 5;
};

inline std::vector<std::string> universe_names(size_t k) {
    std::vector<std::string> names;
    for (size_t i = 0; i < k; ++i) names.push_back("a" + std::to_string(i + 1));
    return names;
}

/// Draws a theory whose chain variety, hedge, levels (2, 3 or 5), universe
/// size and formulas all depend deterministically on the seed.
inline Theory random_theory(std::uint64_t seed, const RandomTheorySpec& spec = {}) {
    SplitMix64 rng(mix_seed(seed, 0xa11ce));
    const int levels_options[3] = {2, 3, 5};
    const int levels = levels_options[rng.bounded(3)];
    const Variety variety = rng.bounded(2) ? Variety::lukasiewicz : Variety::godel;
    const bool global = rng.bounded(2) != 0;
    const size_t k =
        spec.universe_min + rng.bounded(spec.universe_max - spec.universe_min + 1);
    const size_t m =
        spec.formulas_min + rng.bounded(spec.formulas_max - spec.formulas_min + 1);
    ResiduatedChain chain = ResiduatedChain::make(variety, levels);
    Hedge hedge = global ? Hedge::globalization(levels) : Hedge::identity(levels);
    std::vector<Implication> formulas;
    formulas.reserve(m);
    for (size_t i = 0; i < m; ++i)
        formulas.push_back(Implication{random_lset(rng, k, levels), random_lset(rng, k, levels)});
    return Theory(std::move(chain), std::move(hedge), AttributeUniverse(universe_names(k)),
                  std::move(formulas));
}

/// Random context over numbered objects and attributes.
inline FormalContext random_context(std::uint64_t seed, size_t objects, size_t attributes,
                                    int levels, Variety variety, HedgeKind hedge_kind) {
    SplitMix64 rng(mix_seed(seed, 0xc0ffee));
    std::vector<Degree> incidence(objects * attributes);
    for (auto& d : incidence) d = Degree(rng.bounded(std::uint64_t(levels)));
    ResiduatedChain chain = ResiduatedChain::make(variety, levels);
    Hedge hedge = hedge_kind == HedgeKind::globalization ? Hedge::globalization(levels)
                                                         : Hedge::identity(levels);
    std::vector<std::string> object_names;
    for (size_t i = 0; i < objects; ++i) object_names.push_back("x" + std::to_string(i + 1));
    return FormalContext(std::move(chain), std::move(hedge), std::move(object_names),
                         AttributeUniverse(universe_names(attributes)), std::move(incidence));
}

} // namespace fixtures
