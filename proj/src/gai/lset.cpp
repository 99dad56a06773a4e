#include "gai/lset.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace gai {

AttributeUniverse::AttributeUniverse(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw PreconditionError("attribute universe must not be empty");
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty())
            throw PreconditionError("attribute names must not be empty");
        // The text form of a graded set delimits items with these characters.
        if (n.find_first_of("{},/ \t\r\n") != std::string::npos)
            throw PreconditionError("attribute name '" + n +
                                    "' contains a delimiter character");
        if (!seen.insert(n).second)
            throw PreconditionError("duplicate attribute name '" + n + "'");
    }
}

std::optional<size_t> AttributeUniverse::index_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

namespace {

void check_same_size(const LSet& a, const LSet& b) {
    if (a.size() != b.size())
        throw PreconditionError("universe mismatch: graded sets of size " +
                                std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

} // namespace

Degree subsethood(const ResiduatedChain& chain, const LSet& a, const LSet& b) {
    check_same_size(a, b);
    Degree s = chain.top();
    for (size_t i = 0; i < a.size(); ++i) {
        const Degree r = chain.residuum(a[i], b[i]);
        if (r < s) {
            s = r;
            if (s == 0) break;
        }
    }
    return s;
}

LSet set_union(const LSet& a, const LSet& b) {
    check_same_size(a, b);
    LSet out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

LSet set_intersection(const LSet& a, const LSet& b) {
    check_same_size(a, b);
    LSet out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
    return out;
}

LSet multiple(const ResiduatedChain& chain, Degree a, const LSet& s) {
    LSet out(s.size());
    for (size_t i = 0; i < s.size(); ++i) out[i] = chain.tensor(a, s[i]);
    return out;
}

bool is_full_subset(const LSet& a, const LSet& b) {
    check_same_size(a, b);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::uint64_t lset_space_size(int levels, size_t universe_size) {
    std::uint64_t total = 1;
    const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    for (size_t i = 0; i < universe_size; ++i) {
        if (total > cap / std::uint64_t(levels)) return cap;
        total *= std::uint64_t(levels);
    }
    return total;
}

std::vector<LSet> enumerate_lsets(int levels, size_t universe_size, std::uint64_t budget) {
    std::vector<LSet> out;
    out.reserve(size_t(std::min<std::uint64_t>(lset_space_size(levels, universe_size), budget)));
    for_each_lset(levels, universe_size, budget, [&](const LSet& s) { out.push_back(s); });
    return out;
}

} // namespace gai
