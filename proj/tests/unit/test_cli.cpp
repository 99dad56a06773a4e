#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "gai/context.hpp"
#include "gai/io.hpp"
#include "gai/reduce.hpp"
#include "gai/semantics.hpp"
#include "support/fixtures.hpp"

using namespace gai;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string scratch_path(const std::string& name) {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() / "gai_cli_tests";
        std::filesystem::create_directories(d);
        return d;
    }();
    return (dir / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Runs the built binary through the shell, capturing exit code and both
// streams.
CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const std::string out_path = scratch_path("out" + std::to_string(counter) + ".txt");
    const std::string err_path = scratch_path("err" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd = std::string("\"") + GAI_CLI_PATH + "\" " + args + " >" + out_path +
                            " 2>" + err_path;
    const int raw = std::system(cmd.c_str());
    CliResult r;
    if (raw != -1 && WIFEXITED(raw)) r.exit_code = WEXITSTATUS(raw);
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

std::string data_file(const std::string& name) {
    return std::string(GAI_DATA_DIR) + "/" + name;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("cli rejects bad invocations with exit code 1") {
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("reduce").exit_code == 1);
    CHECK(run_cli("reduce /no/such/file.json").exit_code == 1);

    // Text inputs need --levels.
    const CliResult r = run_cli("reduce " + data_file("godel3_gamma.txt") + " --chain godel");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.err, "text input requires --levels"));

    const CliResult bad_attr =
        run_cli("entail " + data_file("godel3_gamma.json") + " \"{z} => {p}\"");
    CHECK(bad_attr.exit_code == 1);
    CHECK(contains(bad_attr.err, "unknown attribute"));
}

TEST_CASE("cli reduce emits the reduced theory and verdicts") {
    const std::string expected = io::theory_to_text(fixtures::godel3_gamma_prime());

    const CliResult from_json = run_cli("reduce " + data_file("godel3_gamma.json"));
    CHECK(from_json.exit_code == 0);
    CHECK(from_json.out == expected);
    CHECK(contains(from_json.err, "steps: 1"));
    CHECK(contains(from_json.err, "irreducible: yes"));
    CHECK(contains(from_json.err, "non-redundant: yes"));
    CHECK(contains(from_json.err, "witnessed: yes"));

    const CliResult from_text =
        run_cli("reduce " + data_file("godel3_gamma.txt") + " --chain godel --levels 3");
    CHECK(from_text.exit_code == 0);
    CHECK(from_text.out == expected);

    // With --output the theory goes to the file and verdicts to stdout.
    const std::string out_json = scratch_path("reduced.json");
    const CliResult to_file =
        run_cli("reduce " + data_file("godel3_gamma.json") + " -o " + out_json);
    CHECK(to_file.exit_code == 0);
    CHECK(contains(to_file.out, "steps: 1"));
    CHECK(to_file.err.empty());
    CHECK(io::theory_from_json(slurp(out_json)) == fixtures::godel3_gamma_prime());
}

TEST_CASE("cli reduce replays recorded steps and validates them") {
    const std::string trace_path = scratch_path("luk5_trace.json");
    const CliResult r = run_cli("reduce " + data_file("luk5_gamma0.json") + " --replay " +
                                data_file("luk5_steps.json") + " --trace " + trace_path);
    CHECK(r.exit_code == 0);
    CHECK(r.out == io::theory_to_text(fixtures::luk5_gamma5()));
    CHECK(contains(r.err, "steps: 6"));
    CHECK(contains(r.err, "witnessed: yes"));

    const Theory gamma0 = fixtures::luk5_gamma0();
    const auto recorded =
        io::steps_from_json(slurp(trace_path), gamma0.universe(), gamma0.chain().levels());
    const auto expected = fixtures::luk5_expected_antecedents();
    REQUIRE(recorded.size() == expected.size());
    for (size_t i = 0; i < recorded.size(); ++i) {
        CHECK(recorded[i].choice.target == expected[i].target);
        REQUIRE(recorded[i].antecedent.has_value());
        CHECK(*recorded[i].antecedent == expected[i].antecedent);
    }

    // The replay subcommand is a shorthand for reduce --replay.
    const CliResult alias =
        run_cli("replay " + data_file("luk5_gamma0.json") + " " + data_file("luk5_steps.json"));
    CHECK(alias.exit_code == 0);
    CHECK(alias.out == io::theory_to_text(fixtures::luk5_gamma5()));

    // A recorded antecedent that disagrees with the recomputed step fails.
    const std::string tampered = scratch_path("tampered_steps.json");
    io::write_file(tampered,
                   "{\"steps\": [{\"target\": 0, \"source\": 1, \"antecedent\": {\"p\": \"1\"}}]}\n");
    const CliResult mismatch = run_cli("reduce " + data_file("luk5_gamma0.json") + " --replay " +
                                       tampered);
    CHECK(mismatch.exit_code == 2);
    CHECK(contains(mismatch.err, "recorded antecedent does not match"));

    // Choices that stop being applicable are reported with their step index.
    const std::string stuck = scratch_path("stuck_steps.json");
    io::write_file(stuck, "[{\"target\": 0, \"source\": 1}, {\"target\": 0, \"source\": 1}]\n");
    const CliResult not_applicable =
        run_cli("reduce " + data_file("godel3_gamma.json") + " --replay " + stuck);
    CHECK(not_applicable.exit_code == 2);
    CHECK(contains(not_applicable.err, "replay step 1"));
}

TEST_CASE("cli saturate rewrites consequents to least models") {
    const std::string input = scratch_path("crisp_pair.txt");
    io::write_file(input, "{p} => {q}\n{q} => {r}\n");
    const CliResult r = run_cli("saturate " + input + " --levels 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{p} => {p, q, r}\n{q} => {q, r}\n");
}

TEST_CASE("cli entail prints the entailment degree") {
    const CliResult half =
        run_cli("entail " + data_file("godel3_gamma.json") + " \"{0.5/p} => {q}\"");
    CHECK(half.exit_code == 0);
    CHECK(half.out == "0.5\n");

    const CliResult full =
        run_cli("entail " + data_file("godel3_gamma.json") + " \"{p} => {p, q, r}\"");
    CHECK(full.exit_code == 0);
    CHECK(full.out == "1\n");
}

TEST_CASE("cli base reports the pseudo-intent system") {
    const std::string csv_path = scratch_path("incidence.csv");
    const std::string base_path = scratch_path("base.json");
    const CliResult r = run_cli("base " + data_file("small_context.json") + " --csv " + csv_path +
                                " -o " + base_path);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "pseudo-intents:"));
    CHECK(contains(r.out, "complete: yes"));
    CHECK(contains(r.out, "non-redundant: yes"));
    CHECK(contains(r.out, "witnessed: yes"));
    CHECK(contains(r.out, "pseudo-intent-system: verified"));
    CHECK(slurp(csv_path) == "object,p,q\nx1,1,0.5\nx2,0,1\n");

    const FormalContext ctx = io::context_from_json(slurp(data_file("small_context.json")));
    const BaseExtraction extraction = extract_base(ctx);
    CHECK(io::theory_from_json(slurp(base_path)) == extraction.base);

    CHECK(run_cli("base " + data_file("small_context.json") + " --budget 3").exit_code == 3);
}

TEST_CASE("cli verify reports laws and normal-form checks") {
    const CliResult theory = run_cli("verify " + data_file("godel3_gamma.json"));
    CHECK(theory.exit_code == 0);
    CHECK(contains(theory.out, "chain laws:"));
    CHECK(contains(theory.out, "  adjointness: pass"));
    CHECK(contains(theory.out, "hedge axioms:"));
    CHECK(contains(theory.out, "  idempotent: pass"));
    CHECK(contains(theory.out, "saturated: yes"));
    CHECK(contains(theory.out, "non-redundant: yes"));
    CHECK(contains(theory.out, "irreducible: no"));
    CHECK(contains(theory.out, "witnessed: no"));

    const CliResult ctx = run_cli("verify " + data_file("small_context.json"));
    CHECK(ctx.exit_code == 0);
    CHECK(contains(ctx.out, "closure laws:"));
    CHECK(contains(ctx.out, "  extensive: pass"));
    CHECK(contains(ctx.out, "  hedge-graded-monotone: pass"));
    CHECK(contains(ctx.out, "  idempotent: pass"));

    // 9 graded sets over two 3-level attributes need 81 closure pairs.
    CHECK(run_cli("verify " + data_file("small_context.json") + " --budget 50").exit_code == 3);

    // A custom chain that breaks the laws is rejected on load.
    const std::string broken = scratch_path("broken_chain.json");
    io::write_file(broken,
                   "{\"chain\": {\"variety\": \"custom\", \"levels\": 2,"
                   " \"tensor\": [[0, 0], [0, 0]], \"residuum\": [[1, 1], [1, 1]]},"
                   " \"hedge\": \"identity\", \"attributes\": [\"p\"],"
                   " \"formulas\": [{\"if\": {}, \"then\": {}}]}\n");
    CHECK(run_cli("verify " + broken).exit_code == 2);
}

TEST_CASE("cli experiment writes a deterministic csv") {
    const std::string base_flags =
        "experiment --objects 1 --attributes 1 --levels 2 --bin-width 100"
        " --density-min 0 --density-max 100 --seed 7";
    const std::string flags = base_flags + " --min-per-bin 3";
    // A 1x1 crisp context in [0, 100) can only be the empty one, whose base
    // is empty under every variant.
    const std::string expected =
        "bin_lo,bin_hi,variety,hedge,mean_base_size,count\n"
        "0,100,lukasiewicz,globalization,0.00000,3\n"
        "0,100,godel,identity,0.00000,3\n"
        "0,100,lukasiewicz,identity,0.00000,3\n";
    const CliResult first = run_cli(flags);
    CHECK(first.exit_code == 0);
    CHECK(first.out == expected);
    CHECK(contains(first.err, "contexts drawn: "));
    CHECK(run_cli(flags).out == expected);

    // Config files select their own variants and can write to a file.
    const std::string csv_path = scratch_path("experiment.csv");
    const CliResult cfg = run_cli("experiment --config " + data_file("experiment_small.json") +
                                  " -o " + csv_path);
    CHECK(cfg.exit_code == 0);
    CHECK(slurp(csv_path) ==
          "bin_lo,bin_hi,variety,hedge,mean_base_size,count\n"
          "0,100,lukasiewicz,identity,0.00000,3\n");

    const CliResult header_only = run_cli(base_flags + " --min-per-bin 0");
    CHECK(header_only.exit_code == 0);
    CHECK(header_only.out == "bin_lo,bin_hi,variety,hedge,mean_base_size,count\n");

    // Range bounds must be multiples of the bin width; budgets are enforced.
    CHECK(run_cli("experiment --bin-width 7").exit_code == 2);
    CHECK(run_cli("experiment --budget 100").exit_code == 3);
}
