#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gai/context.hpp"
#include "gai/reduce.hpp"
#include "gai/theory.hpp"

namespace gai::io {

/// Renders degree index k over a chain with n + 1 levels as an exact
/// literal: a terminating decimal when one exists ("0.5", "0.75"), the
/// reduced fraction otherwise ("1/3", "2/3").
std::string degree_to_string(int index, int levels);

/// Parses "0", "1", a decimal or a fraction literal into a degree index.
/// Rejects literals that do not land exactly on the chain.
Degree parse_degree(const std::string& text, int levels);

/// Text form of a graded set: "{}", "{0.5/p, q}". Zero degrees are omitted,
/// degree one is rendered as the bare attribute name.
std::string lset_to_string(const LSet& s, const AttributeUniverse& u, int levels);

/// Parses the text form against a fixed universe.
LSet parse_lset(const std::string& text, const AttributeUniverse& u, int levels);

std::string implication_to_string(const Implication& f, const AttributeUniverse& u, int levels);

Implication parse_implication(const std::string& text, const AttributeUniverse& u, int levels);

/// One implication per line.
std::string theory_to_text(const Theory& t);

/// Parses a whole theory from implication lines. The universe is inferred
/// from the attribute names in order of first appearance; blank lines and
/// lines starting with '#' are skipped. Parse errors carry line numbers.
Theory parse_theory_text(const std::string& text, const ResiduatedChain& chain,
                         const Hedge& hedge);

std::string chain_to_json(const ResiduatedChain& chain);
std::string hedge_to_json(const Hedge& hedge);

std::string theory_to_json(const Theory& t);
Theory theory_from_json(const std::string& json_text);

std::string context_to_json(const FormalContext& ctx);
FormalContext context_from_json(const std::string& json_text);

std::string trace_to_json(const ReductionTrace& trace);

/// Reads the pair choices of a trace file; accepts either a bare array of
/// steps or an object with a "steps" field. When a step carries a recorded
/// increment or antecedent, the values are returned for validation.
struct RecordedStep {
    StepChoice choice;
    std::optional<LSet> increment;
    std::optional<LSet> antecedent;
};
std::vector<RecordedStep> steps_from_json(const std::string& json_text,
                                          const AttributeUniverse& u, int levels);

/// Incidence table as CSV: header row of attribute names, one row per object.
std::string incidence_to_csv(const FormalContext& ctx);

/// Loads a whole file into a string; throws ParseError when unreadable.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace gai::io
