#include "gai/oracle.hpp"

#include <algorithm>
#include <bit>

#include "gai/semantics.hpp"

namespace gai::oracle {

std::vector<LSet> brute_models(const Theory& t, std::uint64_t budget) {
    std::vector<LSet> out;
    for_each_lset(t.chain().levels(), t.universe().size(), budget, [&](const LSet& m) {
        if (is_model(t, m)) out.push_back(m);
    });
    return out;
}

Degree brute_entailment(const Theory& t, const Implication& f, std::uint64_t budget) {
    Degree v = t.chain().top();
    for_each_lset(t.chain().levels(), t.universe().size(), budget, [&](const LSet& m) {
        if (!is_model(t, m)) return;
        const Degree d = truth_degree(t.chain(), t.hedge(), f, m);
        if (d < v) v = d;
    });
    return v;
}

LSet brute_least_model(const Theory& t, const LSet& m, std::uint64_t budget) {
    LSet acc(m.size());
    for (size_t j = 0; j < m.size(); ++j) acc[j] = t.chain().top();
    for_each_lset(t.chain().levels(), t.universe().size(), budget, [&](const LSet& cand) {
        if (!is_full_subset(m, cand) || !is_model(t, cand)) return;
        acc = set_intersection(acc, cand);
    });
    return acc;
}

namespace {

/// Builds the next index combination c (size r) over [0, total); returns
/// false when exhausted.
bool next_combination(std::vector<size_t>& c, size_t total) {
    const size_t r = c.size();
    size_t i = r;
    while (i > 0) {
        --i;
        if (c[i] + (r - i) < total) {
            ++c[i];
            for (size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

bool brute_minimality(const Theory& t, std::uint64_t candidate_budget,
                      std::uint64_t enumeration_budget) {
    if (t.empty()) return true;
    const std::vector<LSet> space =
        enumerate_lsets(t.chain().levels(), t.universe().size(), enumeration_budget);
    std::vector<Implication> pairs;
    pairs.reserve(space.size() * space.size());
    for (const LSet& a : space)
        for (const LSet& b : space) pairs.push_back(Implication{a, b});

    std::uint64_t examined = 0;
    for (size_t size = 0; size < t.size(); ++size) {
        if (size == 0) {
            if (++examined > candidate_budget)
                throw BudgetError("minimality search exceeds candidate budget");
            if (is_equivalent(t, t.with_formulas({}))) return false;
            continue;
        }
        std::vector<size_t> comb(size);
        for (size_t i = 0; i < size; ++i) comb[i] = i;
        if (comb.back() >= pairs.size()) continue;
        do {
            if (++examined > candidate_budget)
                throw BudgetError("minimality search exceeds candidate budget");
            std::vector<Implication> candidate;
            candidate.reserve(size);
            for (size_t idx : comb) candidate.push_back(pairs[idx]);
            if (is_equivalent(t, t.with_formulas(std::move(candidate)))) return false;
        } while (next_combination(comb, pairs.size()));
    }
    return true;
}

CrispContext to_crisp(const FormalContext& ctx) {
    if (ctx.chain().levels() != 2)
        throw PreconditionError("crisp reference requires a two-level chain");
    if (ctx.attribute_count() > 31)
        throw PreconditionError("crisp reference supports at most 31 attributes");
    CrispContext out;
    out.attribute_count = int(ctx.attribute_count());
    out.rows.reserve(ctx.object_count());
    for (size_t x = 0; x < ctx.object_count(); ++x) {
        std::uint32_t row = 0;
        for (size_t y = 0; y < ctx.attribute_count(); ++y)
            if (ctx.at(x, y)) row |= (1u << y);
        out.rows.push_back(row);
    }
    return out;
}

std::uint32_t crisp_closure(const CrispContext& ctx, std::uint32_t set) {
    const std::uint32_t full = (ctx.attribute_count >= 31)
                                   ? 0x7fffffffu
                                   : ((1u << ctx.attribute_count) - 1);
    std::uint32_t out = full;
    for (std::uint32_t row : ctx.rows)
        if ((set & row) == set) out &= row;
    return out;
}

std::vector<std::uint32_t> classic_pseudo_intents(const CrispContext& ctx, std::uint64_t budget) {
    const std::uint64_t total = std::uint64_t(1) << ctx.attribute_count;
    if (total > budget)
        throw BudgetError("enumeration of " + std::to_string(total) +
                          " attribute sets exceeds budget " + std::to_string(budget));
    std::vector<std::uint32_t> subsets;
    subsets.reserve(size_t(total));
    for (std::uint32_t s = 0; std::uint64_t(s) < total; ++s) subsets.push_back(s);
    std::stable_sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) < std::popcount(b);
    });

    // Every proper subset of a set precedes it in cardinality order, so the
    // recursive membership condition only refers to already decided sets.
    std::vector<std::uint32_t> pseudo;
    for (std::uint32_t p : subsets) {
        if (crisp_closure(ctx, p) == p) continue;
        bool closed_under_smaller = true;
        for (std::uint32_t q : pseudo) {
            if (q == p || (q & p) != q) continue;
            if ((crisp_closure(ctx, q) & p) != crisp_closure(ctx, q)) {
                closed_under_smaller = false;
                break;
            }
        }
        if (closed_under_smaller) pseudo.push_back(p);
    }
    return pseudo;
}

} // namespace gai::oracle
