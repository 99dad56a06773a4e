#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gai/context.hpp"
#include "gai/experiment.hpp"
#include "gai/io.hpp"
#include "gai/oracle.hpp"
#include "gai/reduce.hpp"
#include "gai/semantics.hpp"

namespace {

using namespace gai;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitBudget = 3;

struct CommonOpts {
    std::string chain = "lukasiewicz";
    int levels = 0;
    std::string hedge = "identity";
    std::uint64_t budget = kDefaultEnumerationBudget;
    std::string output;
};

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

ResiduatedChain chain_from_flags(const CommonOpts& o) {
    const auto v = variety_from_name(o.chain);
    if (!v || *v == Variety::custom)
        throw ParseError("--chain must be 'lukasiewicz' or 'godel'; custom chains are "
                         "supplied inside JSON files");
    if (o.levels == 0)
        throw ParseError("text input requires --levels");
    return ResiduatedChain::make(*v, o.levels);
}

Hedge hedge_from_flags(const CommonOpts& o, const ResiduatedChain& chain) {
    if (o.hedge == "identity") return Hedge::identity(chain.levels());
    if (o.hedge == "globalization") return Hedge::globalization(chain.levels());
    throw ParseError("--hedge must be 'identity' or 'globalization'; custom hedges are "
                     "supplied inside JSON files");
}

/// JSON files carry their own chain and hedge; any other file is the
/// line-per-implication text form and needs the --chain/--levels/--hedge
/// flags.
Theory load_theory(const std::string& path, const CommonOpts& o) {
    const std::string content = io::read_file(path);
    if (has_suffix(path, ".json")) return io::theory_from_json(content);
    ResiduatedChain chain = chain_from_flags(o);
    Hedge hedge = hedge_from_flags(o, chain);
    return io::parse_theory_text(content, chain, hedge);
}

void emit_theory(const Theory& t, const std::string& output) {
    if (output.empty()) {
        std::cout << io::theory_to_text(t);
    } else if (has_suffix(output, ".json")) {
        io::write_file(output, io::theory_to_json(t) + "\n");
    } else {
        io::write_file(output, io::theory_to_text(t));
    }
}

std::ostream& verdict_stream(const std::string& output) {
    return output.empty() ? std::cerr : std::cout;
}

int run_reduce(const std::string& input, const CommonOpts& o, const std::string& trace_path,
               const std::string& replay_path) {
    const Theory original = load_theory(input, o);
    ReductionTrace trace = [&] {
        if (!replay_path.empty()) {
            const auto recorded = io::steps_from_json(io::read_file(replay_path),
                                                      original.universe(),
                                                      original.chain().levels());
            std::vector<StepChoice> choices;
            choices.reserve(recorded.size());
            for (const auto& r : recorded) choices.push_back(r.choice);
            ReductionTrace t = replay_trace(original, choices);
            for (size_t i = 0; i < recorded.size(); ++i) {
                if (recorded[i].increment && *recorded[i].increment != t.steps[i].increment)
                    throw PreconditionError("replay step " + std::to_string(i) +
                                            ": recorded increment does not match");
                if (recorded[i].antecedent && *recorded[i].antecedent != t.steps[i].new_antecedent)
                    throw PreconditionError("replay step " + std::to_string(i) +
                                            ": recorded antecedent does not match");
            }
            return t;
        }
        return reduce_to_irreducible(prepare(original));
    }();

    emit_theory(trace.result, o.output);
    if (!trace_path.empty()) io::write_file(trace_path, io::trace_to_json(trace) + "\n");

    std::ostream& out = verdict_stream(o.output);
    out << "steps: " << trace.steps.size() << "\n";
    out << "irreducible: " << (is_irreducible(trace.result) ? "yes" : "no") << "\n";
    const bool nonred = is_non_redundant(trace.result);
    out << "non-redundant: " << (nonred ? "yes" : "no") << "\n";
    out << "witnessed: " << (nonred && is_witnessed(trace.result) ? "yes" : "no") << "\n";
    return kExitOk;
}

int run_saturate(const std::string& input, const CommonOpts& o) {
    emit_theory(saturate(load_theory(input, o)), o.output);
    return kExitOk;
}

int run_entail(const std::string& input, const std::string& implication_text,
               const CommonOpts& o) {
    const Theory t = load_theory(input, o);
    const Implication f =
        io::parse_implication(implication_text, t.universe(), t.chain().levels());
    std::cout << io::degree_to_string(entailment_degree(t, f), t.chain().levels()) << "\n";
    return kExitOk;
}

int run_base(const std::string& input, const CommonOpts& o, const std::string& trace_path,
             const std::string& csv_path) {
    const FormalContext ctx = io::context_from_json(io::read_file(input));
    if (!csv_path.empty()) io::write_file(csv_path, io::incidence_to_csv(ctx));

    BaseExtraction extraction = extract_base(ctx, o.budget);
    emit_theory(extraction.base, o.output);
    if (!trace_path.empty()) io::write_file(trace_path, io::trace_to_json(extraction.trace) + "\n");

    const PseudoIntentSystem system = pseudo_intents(ctx, extraction.base, o.budget);
    std::cout << "pseudo-intents:\n";
    for (const LSet& p : system.members)
        std::cout << io::lset_to_string(p, ctx.universe(), ctx.chain().levels()) << "\n";

    const bool complete = is_complete(ctx, extraction.base, o.budget);
    const bool nonred = is_non_redundant(extraction.base);
    const bool witnessed = nonred && is_witnessed(extraction.base);
    const bool system_ok = verify_pseudo_intent_system(ctx, system, o.budget);
    std::cout << "complete: " << (complete ? "yes" : "no") << "\n";
    std::cout << "non-redundant: " << (nonred ? "yes" : "no") << "\n";
    std::cout << "witnessed: " << (witnessed ? "yes" : "no") << "\n";
    std::cout << "pseudo-intent-system: " << (system_ok ? "verified" : "failed") << "\n";
    return (complete && nonred && witnessed && system_ok) ? kExitOk : kExitPrecondition;
}

void print_report(const std::string& heading, const LawReport& report, bool& all_pass) {
    std::cout << heading << "\n";
    for (const auto& check : report.checks) {
        std::cout << "  " << check.law << ": " << (check.pass ? "pass" : "FAIL");
        if (!check.pass && check.witness[0] >= 0) {
            std::cout << " at (" << check.witness[0];
            if (check.witness[1] >= 0) std::cout << ", " << check.witness[1];
            if (check.witness[2] >= 0) std::cout << ", " << check.witness[2];
            std::cout << ")";
        }
        std::cout << "\n";
        if (!check.pass) all_pass = false;
    }
}

int run_verify(const std::string& input, const CommonOpts& o) {
    const std::string content = io::read_file(input);
    bool is_context = false;
    if (has_suffix(input, ".json")) {
        try {
            is_context = nlohmann::json::parse(content).contains("incidence");
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(e.what());
        }
    }

    bool all_pass = true;
    if (is_context) {
        const FormalContext ctx = io::context_from_json(content);
        print_report("chain laws:", verify_chain(ctx.chain()), all_pass);
        print_report("hedge axioms:", verify_hedge(ctx.chain(), ctx.hedge()), all_pass);

        bool extensive = true, monotone = true, idempotent = true;
        const int levels = ctx.chain().levels();
        const size_t k = ctx.attribute_count();
        const std::uint64_t space = lset_space_size(levels, k);
        if (space > o.budget || space * space > o.budget)
            throw BudgetError("closure law check needs " + std::to_string(space * space) +
                              " pairs, exceeding budget " + std::to_string(o.budget));
        std::vector<LSet> all = enumerate_lsets(levels, k, o.budget);
        std::vector<LSet> closures;
        closures.reserve(all.size());
        for (const LSet& a : all) closures.push_back(closure(ctx, a));
        for (size_t i = 0; i < all.size(); ++i) {
            if (!is_full_subset(all[i], closures[i])) extensive = false;
            if (closure(ctx, closures[i]) != closures[i]) idempotent = false;
        }
        for (size_t i = 0; i < all.size() && monotone; ++i)
            for (size_t j = 0; j < all.size(); ++j) {
                const Degree s = subsethood(ctx.chain(), all[i], all[j]);
                const Degree cs = subsethood(ctx.chain(), closures[i], closures[j]);
                if (ctx.hedge()(s) > cs) {
                    monotone = false;
                    break;
                }
            }
        std::cout << "closure laws:\n";
        std::cout << "  extensive: " << (extensive ? "pass" : "FAIL") << "\n";
        std::cout << "  hedge-graded-monotone: " << (monotone ? "pass" : "FAIL") << "\n";
        std::cout << "  idempotent: " << (idempotent ? "pass" : "FAIL") << "\n";
        if (!extensive || !monotone || !idempotent) all_pass = false;
    } else {
        const Theory t = load_theory(input, o);
        print_report("chain laws:", verify_chain(t.chain()), all_pass);
        print_report("hedge axioms:", verify_hedge(t.chain(), t.hedge()), all_pass);
        std::cout << "saturated: " << (is_saturated(t) ? "yes" : "no") << "\n";
        const bool nonred = is_non_redundant(t);
        std::cout << "non-redundant: " << (nonred ? "yes" : "no") << "\n";
        std::cout << "irreducible: " << (is_irreducible(t) ? "yes" : "no") << "\n";
        std::cout << "witnessed: " << (nonred ? (is_witnessed(t) ? "yes" : "no") : "n/a") << "\n";
    }
    return all_pass ? kExitOk : kExitPrecondition;
}

int run_experiment_cmd(const std::string& config_path, ExperimentConfig cfg,
                       const std::string& output) {
    if (!config_path.empty()) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(io::read_file(config_path));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(e.what());
        }
        if (!j.is_object()) throw ParseError("experiment config must be a JSON object");
        if (j.contains("objects")) cfg.objects = j["objects"].get<int>();
        if (j.contains("attributes")) cfg.attributes = j["attributes"].get<int>();
        if (j.contains("levels")) cfg.levels = j["levels"].get<int>();
        if (j.contains("bin_width_percent")) cfg.bin_width_percent = j["bin_width_percent"].get<int>();
        if (j.contains("density_min_percent"))
            cfg.density_min_percent = j["density_min_percent"].get<int>();
        if (j.contains("density_max_percent"))
            cfg.density_max_percent = j["density_max_percent"].get<int>();
        if (j.contains("min_per_bin")) cfg.min_per_bin = j["min_per_bin"].get<int>();
        if (j.contains("max_contexts")) cfg.max_contexts = j["max_contexts"].get<std::uint64_t>();
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("budget")) cfg.enumeration_budget = j["budget"].get<std::uint64_t>();
        if (j.contains("variants")) {
            if (!j["variants"].is_array() || j["variants"].empty())
                throw ParseError("'variants' must be a non-empty array");
            cfg.variants.clear();
            for (const auto& vj : j["variants"]) {
                if (!vj.is_object() || !vj.contains("variety") || !vj.contains("hedge"))
                    throw ParseError("each variant needs 'variety' and 'hedge'");
                ExperimentVariant v;
                const auto var = variety_from_name(vj["variety"].get<std::string>());
                if (!var) throw ParseError("unknown variety in variant");
                v.variety = *var;
                const std::string h = vj["hedge"].get<std::string>();
                if (h == "identity")
                    v.hedge = HedgeKind::identity;
                else if (h == "globalization")
                    v.hedge = HedgeKind::globalization;
                else
                    throw ParseError("variant hedge must be 'identity' or 'globalization'");
                cfg.variants.push_back(v);
            }
        }
    }
    const ExperimentResult result = run_experiment(cfg);
    const std::string csv = experiment_to_csv(result);
    if (output.empty())
        std::cout << csv;
    else
        io::write_file(output, csv);
    std::cerr << "contexts drawn: " << result.contexts_drawn << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"toolkit for graded attribute implications over finite residuated chains"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string input;
    std::string implication_text;
    std::string trace_path;
    std::string replay_path;
    std::string steps_path;
    std::string csv_path;
    std::string config_path;
    ExperimentConfig exp_cfg;

    auto add_common = [&](CLI::App* cmd, bool with_output = true) {
        cmd->add_option("--chain", opts.chain, "chain variety for text inputs");
        cmd->add_option("--levels", opts.levels, "number of truth degrees for text inputs");
        cmd->add_option("--hedge", opts.hedge, "hedge for text inputs");
        cmd->add_option("--budget", opts.budget, "enumeration budget");
        if (with_output) cmd->add_option("--output,-o", opts.output, "result file");
    };

    CLI::App* reduce = app.add_subcommand("reduce", "saturate, drop redundant formulas and "
                                                    "reduce to an irreducible theory");
    reduce->add_option("input", input, "theory file")->required();
    reduce->add_option("--trace", trace_path, "write the step trace to this JSON file");
    reduce->add_option("--replay", replay_path, "apply a recorded steps file instead of "
                                                "searching");
    add_common(reduce);

    CLI::App* saturate_cmd = app.add_subcommand("saturate", "replace consequents by their "
                                                            "least models");
    saturate_cmd->add_option("input", input, "theory file")->required();
    add_common(saturate_cmd);

    CLI::App* entail = app.add_subcommand("entail", "degree to which a theory entails an "
                                                    "implication");
    entail->add_option("input", input, "theory file")->required();
    entail->add_option("implication", implication_text, "implication in text form")->required();
    add_common(entail, false);

    CLI::App* base = app.add_subcommand("base", "extract a witnessed non-redundant base from "
                                                "a context");
    base->add_option("input", input, "context JSON file")->required();
    base->add_option("--trace", trace_path, "write the reduction trace to this JSON file");
    base->add_option("--csv", csv_path, "export the incidence table as CSV");
    add_common(base);

    CLI::App* verify = app.add_subcommand("verify", "check chain laws, hedge axioms and "
                                                    "theory or closure properties");
    verify->add_option("input", input, "theory or context file")->required();
    add_common(verify, false);

    CLI::App* experiment = app.add_subcommand("experiment", "randomized base-size study "
                                                            "writing a CSV");
    experiment->add_option("--config", config_path, "experiment config JSON");
    experiment->add_option("--objects", exp_cfg.objects, "context rows");
    experiment->add_option("--attributes", exp_cfg.attributes, "context columns");
    experiment->add_option("--levels", exp_cfg.levels, "number of truth degrees");
    experiment->add_option("--seed", exp_cfg.seed, "base seed");
    experiment->add_option("--min-per-bin", exp_cfg.min_per_bin, "contexts measured per bin");
    experiment->add_option("--max-contexts", exp_cfg.max_contexts, "hard cap on drawn contexts");
    experiment->add_option("--bin-width", exp_cfg.bin_width_percent, "density bin width in %");
    experiment->add_option("--density-min", exp_cfg.density_min_percent, "target range lower "
                                                                         "bound in %");
    experiment->add_option("--density-max", exp_cfg.density_max_percent, "target range upper "
                                                                         "bound in %");
    experiment->add_option("--budget", exp_cfg.enumeration_budget, "enumeration budget");
    experiment->add_option("--output,-o", opts.output, "CSV file");

    CLI::App* replay = app.add_subcommand("replay", "re-apply a recorded steps file to a "
                                                    "theory");
    replay->add_option("input", input, "theory file")->required();
    replay->add_option("steps", steps_path, "steps JSON file")->required();
    replay->add_option("--trace", trace_path, "write the replayed trace to this JSON file");
    add_common(replay);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (reduce->parsed()) return run_reduce(input, opts, trace_path, replay_path);
        if (saturate_cmd->parsed()) return run_saturate(input, opts);
        if (entail->parsed()) return run_entail(input, implication_text, opts);
        if (base->parsed()) return run_base(input, opts, trace_path, csv_path);
        if (verify->parsed()) return run_verify(input, opts);
        if (experiment->parsed()) return run_experiment_cmd(config_path, exp_cfg, opts.output);
        if (replay->parsed()) return run_reduce(input, opts, trace_path, steps_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return kExitUsage;
}
