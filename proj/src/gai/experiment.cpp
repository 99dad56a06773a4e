#include "gai/experiment.hpp"

#include <cstdio>

#include "gai/context.hpp"
#include "gai/rng.hpp"

namespace gai {

namespace {

void check_config(const ExperimentConfig& c) {
    if (c.objects < 1 || c.attributes < 1)
        throw PreconditionError("experiment needs at least one object and one attribute");
    if (c.levels < 2 || c.levels > kMaxLevels)
        throw PreconditionError("experiment levels must be in [2, " + std::to_string(kMaxLevels) +
                                "]");
    if (c.variants.empty()) throw PreconditionError("experiment needs at least one variant");
    for (const auto& v : c.variants)
        if (v.variety == Variety::custom || v.hedge == HedgeKind::custom)
            throw PreconditionError("experiment variants must use built-in chains and hedges");
    if (c.bin_width_percent < 1 || c.bin_width_percent > 100)
        throw PreconditionError("bin width must be in [1, 100] percent");
    if (c.density_min_percent < 0 || c.density_max_percent > 100 ||
        c.density_min_percent >= c.density_max_percent)
        throw PreconditionError("density range must satisfy 0 <= min < max <= 100");
    if (c.density_min_percent % c.bin_width_percent != 0 ||
        c.density_max_percent % c.bin_width_percent != 0)
        throw PreconditionError("density range bounds must be multiples of the bin width");
    if (c.min_per_bin < 0) throw PreconditionError("min_per_bin must be non-negative");
    const std::uint64_t space = lset_space_size(c.levels, size_t(c.attributes));
    if (space > c.enumeration_budget)
        throw BudgetError("base extraction would enumerate " + std::to_string(space) +
                          " graded sets, exceeding budget " +
                          std::to_string(c.enumeration_budget));
}

std::vector<std::string> numbered_names(const char* prefix, int count) {
    std::vector<std::string> out;
    out.reserve(size_t(count));
    for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

std::string hedge_label(HedgeKind k) {
    return hedge_name(k);
}

} // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
    check_config(config);

    ExperimentResult result;
    result.config = config;

    const int first_bin = config.density_min_percent / config.bin_width_percent;
    const int last_bin = config.density_max_percent / config.bin_width_percent; // exclusive
    const int bin_count = last_bin - first_bin;
    const size_t vcount = config.variants.size();

    result.cells.reserve(size_t(bin_count) * vcount);
    for (int b = 0; b < bin_count; ++b)
        for (size_t v = 0; v < vcount; ++v) {
            ExperimentCell cell;
            cell.bin_lo = (first_bin + b) * config.bin_width_percent;
            cell.bin_hi = cell.bin_lo + config.bin_width_percent;
            cell.variant = config.variants[v];
            result.cells.push_back(cell);
        }
    if (config.min_per_bin == 0 || config.max_contexts == 0) {
        result.cells.clear();
        return result;
    }

    std::vector<std::uint64_t> bin_counts(size_t(bin_count), 0);

    const AttributeUniverse universe(numbered_names("y", config.attributes));
    const std::vector<std::string> objects = numbered_names("x", config.objects);
    std::vector<ResiduatedChain> chains;
    std::vector<Hedge> hedges;
    chains.reserve(vcount);
    hedges.reserve(vcount);
    for (const auto& variant : config.variants) {
        chains.push_back(ResiduatedChain::make(variant.variety, config.levels));
        hedges.push_back(variant.hedge == HedgeKind::globalization
                             ? Hedge::globalization(config.levels)
                             : Hedge::identity(config.levels));
    }

    const size_t cells_per_ctx = size_t(config.objects) * size_t(config.attributes);
    const std::uint64_t density_den =
        std::uint64_t(config.levels - 1) * cells_per_ctx * std::uint64_t(config.bin_width_percent);

    std::vector<Degree> incidence(cells_per_ctx);
    auto all_full = [&] {
        for (std::uint64_t c : bin_counts)
            if (c < std::uint64_t(config.min_per_bin)) return false;
        return true;
    };

    for (std::uint64_t i = 0; i < config.max_contexts && !all_full(); ++i) {
        ++result.contexts_drawn;
        SplitMix64 rng(mix_seed(config.seed, i));
        std::uint64_t degree_sum = 0;
        for (size_t c = 0; c < cells_per_ctx; ++c) {
            const Degree d = Degree(rng.bounded(std::uint64_t(config.levels)));
            incidence[c] = d;
            degree_sum += d;
        }
        // Exact half-open binning: bin b covers b*w <= 100*sum/den < (b+1)*w.
        const std::uint64_t bin = (degree_sum * 100) / density_den;
        if (int(bin) < first_bin || int(bin) >= last_bin) continue;
        const size_t local_bin = size_t(int(bin) - first_bin);
        if (bin_counts[local_bin] >= std::uint64_t(config.min_per_bin)) continue;

        for (size_t v = 0; v < vcount; ++v) {
            FormalContext ctx(chains[v], hedges[v], objects, universe, incidence);
            const BaseExtraction extraction = extract_base(ctx, config.enumeration_budget);
            ExperimentCell& cell = result.cells[local_bin * vcount + v];
            cell.base_size_sum += extraction.base.size();
            cell.count += 1;
        }
        ++bin_counts[local_bin];
    }

    return result;
}

std::string experiment_to_csv(const ExperimentResult& result) {
    std::string out = "bin_lo,bin_hi,variety,hedge,mean_base_size,count\n";
    for (const ExperimentCell& cell : result.cells) {
        const double mean =
            cell.count == 0 ? 0.0 : double(cell.base_size_sum) / double(cell.count);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.5f", mean);
        out += std::to_string(cell.bin_lo) + "," + std::to_string(cell.bin_hi) + "," +
               variety_name(cell.variant.variety) + "," + hedge_label(cell.variant.hedge) + "," +
               buf + "," + std::to_string(cell.count) + "\n";
    }
    return out;
}

} // namespace gai
