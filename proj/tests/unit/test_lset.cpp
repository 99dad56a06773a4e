#include "doctest.h"

#include <algorithm>
#include <limits>

#include "gai/lset.hpp"
#include "support/fixtures.hpp"

using namespace gai;
using fixtures::ls;

TEST_CASE("subsethood on the goedel chain") {
    const auto chain = ResiduatedChain::make(Variety::godel, 3);
    // S({p}, {0.5/p}) = 0.5 over {p, q, r}
    CHECK(subsethood(chain, ls({2, 0, 0}), ls({1, 0, 0})) == 1);
    // S({0.5/p}, {p}) = 1
    CHECK(subsethood(chain, ls({1, 0, 0}), ls({2, 0, 0})) == 2);
    CHECK(subsethood(chain, ls({0, 0, 0}), ls({0, 0, 0})) == 2);
}

TEST_CASE("subsethood on the lukasiewicz chain matches the worked example") {
    const auto chain = ResiduatedChain::make(Variety::lukasiewicz, 5);
    // S({0.5/p, 0.25/q, 0.5/s}, {0.25/r, 0.25/s}) = 0.5 over {p, q, r, s}
    CHECK(subsethood(chain, ls({2, 1, 0, 2}), ls({0, 0, 1, 1})) == 2);
}

TEST_CASE("multiples scale a set through the tensor") {
    const auto luk = ResiduatedChain::make(Variety::lukasiewicz, 5);
    // 0.5 (x) {0.75/p, 0.75/q, r, 0.5/s} = {0.25/p, 0.25/q, 0.5/r}
    CHECK(multiple(luk, 2, ls({3, 3, 4, 2})) == ls({1, 1, 2, 0}));

    const auto godel = ResiduatedChain::make(Variety::godel, 3);
    // 0.5 (x) {p, q, r} = {0.5/p, 0.5/q, 0.5/r}
    CHECK(multiple(godel, 1, ls({2, 2, 2})) == ls({1, 1, 1}));
}

TEST_CASE("union and intersection are componentwise") {
    CHECK(set_union(ls({1, 0, 2, 4}), ls({0, 1, 3, 1})) == ls({1, 1, 3, 4}));
    CHECK(set_intersection(ls({1, 0, 2, 4}), ls({0, 1, 3, 1})) == ls({0, 0, 2, 1}));
    CHECK_THROWS_AS(set_union(ls({1}), ls({1, 2})), PreconditionError);
}

TEST_CASE("full subsethood is the pointwise order") {
    CHECK(is_full_subset(ls({1, 1, 2, 0}), ls({1, 1, 2, 1})));
    CHECK(!is_full_subset(ls({1, 1, 2, 1}), ls({1, 1, 2, 0})));
    const auto chain = ResiduatedChain::make(Variety::lukasiewicz, 5);
    CHECK(subsethood(chain, ls({1, 1, 2, 0}), ls({1, 1, 2, 1})) == chain.top());
}

TEST_CASE("subsethood agrees with the top degree exactly on full inclusion") {
    const auto chain = ResiduatedChain::make(Variety::lukasiewicz, 4);
    SplitMix64 rng(7);
    for (int i = 0; i < 500; ++i) {
        const LSet a = fixtures::random_lset(rng, 3, 4);
        const LSet b = fixtures::random_lset(rng, 3, 4);
        CHECK((subsethood(chain, a, b) == chain.top()) == is_full_subset(a, b));
    }
}

TEST_CASE("subsethood is antitone in the first and isotone in the second argument") {
    const auto chain = ResiduatedChain::make(Variety::godel, 4);
    SplitMix64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const LSet a = fixtures::random_lset(rng, 3, 4);
        const LSet b = fixtures::random_lset(rng, 3, 4);
        const LSet bigger = set_union(b, fixtures::random_lset(rng, 3, 4));
        CHECK(subsethood(chain, a, b) <= subsethood(chain, a, set_union(a, b)));
        CHECK(subsethood(chain, a, b) <= subsethood(chain, a, bigger));
        CHECK(subsethood(chain, set_union(a, bigger), b) <= subsethood(chain, a, b));
    }
}

TEST_CASE("adjointness lifts to multiples and subsethood") {
    const auto chain = ResiduatedChain::make(Variety::lukasiewicz, 3);
    SplitMix64 rng(13);
    for (int i = 0; i < 300; ++i) {
        const LSet a = fixtures::random_lset(rng, 3, 3);
        const LSet b = fixtures::random_lset(rng, 3, 3);
        const Degree c = Degree(rng.bounded(3));
        CHECK(is_full_subset(multiple(chain, c, a), b) == (c <= subsethood(chain, a, b)));
    }
}

TEST_CASE("enumeration counts and order") {
    CHECK(enumerate_lsets(2, 2).size() == 4);
    CHECK(enumerate_lsets(3, 3).size() == 27);
    CHECK(enumerate_lsets(5, 4).size() == 625);

    const auto all = enumerate_lsets(3, 2);
    REQUIRE(all.size() == 9);
    CHECK(all.front() == ls({0, 0}));
    CHECK(all[1] == ls({0, 1}));
    CHECK(all.back() == ls({2, 2}));
    CHECK(std::is_sorted(all.begin(), all.end()));
    // No duplicates in a strictly sorted enumeration.
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}

TEST_CASE("enumeration budget is a hard error") {
    CHECK_THROWS_AS(enumerate_lsets(5, 4, 624), BudgetError);
    CHECK(lset_space_size(5, 4) == 625);
    CHECK(lset_space_size(2, 64) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("attribute universes reject bad names") {
    CHECK_THROWS_AS(AttributeUniverse({}), PreconditionError);
    CHECK_THROWS_AS(AttributeUniverse({"p", "p"}), PreconditionError);
    CHECK_THROWS_AS(AttributeUniverse({""}), PreconditionError);
    CHECK_THROWS_AS(AttributeUniverse({"a b"}), PreconditionError);
    const AttributeUniverse u({"p", "q"});
    CHECK(u.index_of("q") == size_t(1));
    CHECK(!u.index_of("r"));
}
