#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "cubic/cores.hpp"
#include "cubic/gadgets.hpp"
#include "cubic/search.hpp"

namespace cubic {

// Names accepted by run_batch: the eight conjecture checks plus the metrics
// mu3, mu3-prime, oddness, weak-oddness, fano-lines, cyclic-weak-core-k.
bool is_known_check(const std::string& name);
std::vector<std::string> all_check_names();

struct CheckResult {
    std::string name;
    std::string outcome;  // witness | refuted | budget-exceeded | precondition-failed
    std::optional<long long> value;
    std::vector<std::vector<int>> witness;  // edge-index lists
    std::vector<int> flow;                  // per-edge Fano points (fano-lines only)
    std::string detail;
    long long millis = 0;
};

struct CheckReport {
    std::size_t index = 0;
    std::string graph6;
    bool parse_ok = false;
    std::string parse_error;
    std::string internal_error;  // unexpected exception; the batch keeps going
    int n = 0;
    std::vector<CheckResult> checks;
    std::optional<bool> omega_equal;  // reported, never asserted
};

std::string report_to_json(const CheckReport& report);

// Re-checks a serialized witness against its predicate; used by tests and
// by the self-validation pass after deserialization.
bool validate_witness_json(const CubicGraph& g, const std::string& check_name,
                           const std::vector<std::vector<int>>& witness);

struct BatchConfig {
    std::string input_path;
    std::vector<std::string> checks;
    Budget budget;
    int workers = 1;
    std::string output_path;  // empty: caller renders the reports itself
};

struct BatchResult {
    std::vector<CheckReport> reports;
    int exit_code = 0;  // 0 ok, 1 refutation, 2 I/O-parse-precondition, 3 budget
    std::string io_error;
};

// One report per input graph, in input order regardless of worker count.
BatchResult run_batch(const BatchConfig& config);

// Runs the always-true property suite over every graph of a file; prints one
// line per graph plus a summary, returns false when a property fails.
bool run_invariant_suite(const std::string& input_path, std::ostream& out,
                         std::uint64_t triple_samples = 200);

// Builds the counterexample graph, verifies it, prints the transcript, and
// optionally emits the graph as graph6. Returns the report.
CounterexampleReport reproduce_counterexample(CounterexampleMode mode, std::ostream& out,
                                              const std::string& emit_g6_path = "",
                                              const Budget& budget = Budget::unlimited());

// Per-graph driver shared by run_batch and the compute subcommand.
CheckReport run_checks_on_graph(std::size_t index, const std::string& g6_line,
                                const std::vector<std::string>& checks, const Budget& budget);

}  // namespace cubic
