#include "doctest.h"

#include <algorithm>

#include "gai/oracle.hpp"
#include "gai/semantics.hpp"
#include "support/fixtures.hpp"

using namespace gai;
using fixtures::imp;
using fixtures::ls;

TEST_CASE("brute model enumeration on the goedel example") {
    const Theory gamma = fixtures::godel3_gamma();
    const auto models = oracle::brute_models(gamma);
    // Hand count: a = 0 leaves q and r free (9), a = 0.5 forces c = 1 and
    // b in {0.5, 1} (2), a = 1 forces b = c = 1 (1).
    CHECK(models.size() == 12);
    CHECK(std::is_sorted(models.begin(), models.end()));
    for (const auto& m : models) CHECK(is_model(gamma, m));
    CHECK(std::find(models.begin(), models.end(), ls({1, 1, 2})) != models.end());
    CHECK(std::find(models.begin(), models.end(), ls({1, 0, 2})) == models.end());
    // Reduction preserves the model set.
    CHECK(models == oracle::brute_models(fixtures::godel3_gamma_prime()));
    CHECK_THROWS_AS(oracle::brute_models(gamma, 26), BudgetError);
}

TEST_CASE("brute entailment and least models on the goedel example") {
    const Theory gamma = fixtures::godel3_gamma();
    CHECK(oracle::brute_entailment(gamma, gamma[0]) == gamma.chain().top());
    CHECK(oracle::brute_entailment(gamma, imp({0, 0, 2}, {0, 2, 0})) == 0);
    CHECK(oracle::brute_least_model(gamma, ls({2, 0, 0})) == ls({2, 2, 2}));
    CHECK(oracle::brute_least_model(gamma, ls({0, 0, 0})) == ls({0, 0, 0}));
}

TEST_CASE("fast and brute semantics agree on random theories") {
    SplitMix64 rng(99);
    for (std::uint64_t seed = 500; seed < 560; ++seed) {
        const Theory t = fixtures::random_theory(seed);
        const size_t k = t.universe().size();
        const int levels = t.chain().levels();
        const Implication f{fixtures::random_lset(rng, k, levels),
                            fixtures::random_lset(rng, k, levels)};
        CHECK(entailment_degree(t, f) == oracle::brute_entailment(t, f));
        const LSet m = fixtures::random_lset(rng, k, levels);
        CHECK(least_model(t, m) == oracle::brute_least_model(t, m));
    }
}

TEST_CASE("brute minimality on toy theories") {
    const ResiduatedChain two = ResiduatedChain::make(Variety::lukasiewicz, 2);
    const Hedge id2 = Hedge::identity(2);
    const AttributeUniverse uni({"p", "q"});

    CHECK(oracle::brute_minimality(Theory(two, id2, uni, {})));
    CHECK(oracle::brute_minimality(Theory(two, id2, uni, {imp({1, 0}, {0, 1})})));
    // A trivially true second formula can be dropped.
    const Theory padded(two, id2, uni, {imp({1, 0}, {0, 1}), imp({1, 1}, {0, 1})});
    CHECK(!oracle::brute_minimality(padded));
    CHECK_THROWS_AS(oracle::brute_minimality(padded, 1), BudgetError);
}

TEST_CASE("non-redundant theories need not be minimal") {
    // {} => {p} together with {p} => {q} pins the single model {p, q}, which
    // {} => {p, q} does alone. The theory is even witnessed; minimality
    // additionally needs saturated consequents, and preparing the theory
    // collapses it to the one-formula form.
    const ResiduatedChain two = ResiduatedChain::make(Variety::lukasiewicz, 2);
    const Theory t(two, Hedge::identity(2), AttributeUniverse({"p", "q"}),
                   {imp({0, 0}, {1, 0}), imp({1, 0}, {0, 1})});
    CHECK(is_non_redundant(t));
    CHECK(is_witnessed(t));
    CHECK(!is_saturated(t));
    CHECK(!oracle::brute_minimality(t));
    const Theory ready = prepare(t);
    REQUIRE(ready.size() == 1);
    CHECK(ready[0].antecedent == ls({0, 0}));
    CHECK(ready[0].consequent == ls({1, 1}));
    CHECK(is_equivalent(t, ready));
    CHECK(oracle::brute_minimality(ready));
}

TEST_CASE("saturated witnessed theories are minimal") {
    const Theory prime = fixtures::godel3_gamma_prime();
    REQUIRE(is_saturated(prime));
    REQUIRE(is_witnessed(prime));
    CHECK(oracle::brute_minimality(prime));
}

TEST_CASE("crisp packing and closure") {
    ResiduatedChain two = ResiduatedChain::make(Variety::lukasiewicz, 2);
    //        p  q
    //  x1    1  1
    //  x2    0  1
    const FormalContext ctx(two, Hedge::identity(2), {"x1", "x2"},
                            AttributeUniverse({"p", "q"}), {1, 1, 0, 1});
    const oracle::CrispContext crisp = oracle::to_crisp(ctx);
    REQUIRE(crisp.rows.size() == 2);
    CHECK(crisp.rows[0] == 0b11u);
    CHECK(crisp.rows[1] == 0b10u);
    CHECK(oracle::crisp_closure(crisp, 0b00) == 0b10u);
    CHECK(oracle::crisp_closure(crisp, 0b01) == 0b11u);
    CHECK(oracle::crisp_closure(crisp, 0b10) == 0b10u);
    CHECK(oracle::crisp_closure(crisp, 0b11) == 0b11u);
    CHECK(oracle::classic_pseudo_intents(crisp) == std::vector<std::uint32_t>{0b00u});

    const FormalContext graded(ResiduatedChain::make(Variety::godel, 3), Hedge::identity(3),
                               {"x"}, AttributeUniverse({"p"}), {1});
    CHECK_THROWS_AS(oracle::to_crisp(graded), PreconditionError);
}

TEST_CASE("graded bases over two levels match the classic pseudo-intents") {
    for (std::uint64_t seed = 700; seed < 730; ++seed) {
        const FormalContext ctx = fixtures::random_context(seed, 4, 4, 2, Variety::lukasiewicz,
                                                           HedgeKind::globalization);
        const oracle::CrispContext crisp = oracle::to_crisp(ctx);
        const auto classic = oracle::classic_pseudo_intents(crisp);
        const Theory base = extract_base(ctx).base;
        REQUIRE(base.size() == classic.size());
        // The antecedents are the pseudo-intents themselves.
        std::vector<std::uint32_t> got;
        for (const auto& f : base.formulas()) {
            std::uint32_t mask = 0;
            for (size_t y = 0; y < f.antecedent.size(); ++y)
                if (f.antecedent[y]) mask |= (1u << y);
            got.push_back(mask);
        }
        std::sort(got.begin(), got.end());
        std::vector<std::uint32_t> want = classic;
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }
}
