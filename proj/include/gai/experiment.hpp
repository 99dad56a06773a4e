#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gai/chain.hpp"

namespace gai {

/// One chain/hedge pairing measured by the harness.
struct ExperimentVariant {
    Variety variety = Variety::lukasiewicz;
    HedgeKind hedge = HedgeKind::identity;
};

/// Randomized study over uniformly drawn incidence matrices. Contexts are
/// binned by their measured density percentage; only contexts falling into
/// a not-yet-full target bin have their bases extracted, everything else is
/// drawn and skipped, so the run stays cheap in the tails.
struct ExperimentConfig {
    int objects = 5;
    int attributes = 5;
    int levels = 5;
    std::vector<ExperimentVariant> variants = {
        {Variety::lukasiewicz, HedgeKind::globalization},
        {Variety::godel, HedgeKind::identity},
        {Variety::lukasiewicz, HedgeKind::identity},
    };
    int bin_width_percent = 10;
    int density_min_percent = 30;
    int density_max_percent = 60;
    int min_per_bin = 200;
    std::uint64_t max_contexts = 1'000'000;
    std::uint64_t seed = 1;
    std::uint64_t enumeration_budget = 10'000'000;
};

struct ExperimentCell {
    int bin_lo = 0;
    int bin_hi = 0;
    ExperimentVariant variant;
    std::uint64_t base_size_sum = 0;
    std::uint64_t count = 0;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<ExperimentCell> cells;
    std::uint64_t contexts_drawn = 0;
};

/// Runs the study deterministically: context i is generated from a stream
/// seeded by (seed, i), so results are byte-identical across runs and
/// machines for a fixed configuration.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// CSV rows bin_lo,bin_hi,variety,hedge,mean_base_size,count ordered by bin,
/// then variant order. Header only when nothing was measured.
std::string experiment_to_csv(const ExperimentResult& result);

} // namespace gai
