// Command line front end: batch conjecture checking and metric computation
// over graph6 files, the invariant suite, and the counterexample build.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cubic/harness.hpp"

namespace {

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t end = csv.find(',', start);
        if (end == std::string::npos) end = csv.size();
        if (end > start) out.push_back(csv.substr(start, end - start));
        if (end == csv.size()) break;
        start = end + 1;
    }
    return out;
}

// run_batch writes the file itself when an output path is set; stdout
// rendering stays here
int emit_reports(const cubic::BatchResult& result, bool to_stdout) {
    if (!result.io_error.empty()) {
        std::cerr << "error: " << result.io_error << "\n";
        return result.exit_code;
    }
    if (to_stdout)
        for (const cubic::CheckReport& r : result.reports)
            std::cout << cubic::report_to_json(r) << "\n";
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of matching, join, core and Fano-flow properties of "
                 "bridgeless cubic graphs"};
    app.require_subcommand(1);

    std::string input, output, checks_csv, metrics_csv, mode = "structured", emit_g6;
    std::uint64_t budget_nodes = 10'000'000;
    std::uint64_t budget_millis = 0;
    std::uint64_t cx_budget_nodes = 0;  // counterexample default: unlimited
    std::uint64_t samples = 200;
    int workers = 1;

    CLI::App* check = app.add_subcommand("check", "run conjecture checks over a graph6 file");
    check->add_option("--input", input, "graph6 input file")->required();
    check->add_option("--checks", checks_csv,
                      "comma-separated checks from fan-raspaud, 2pm+join, 1pm+2joins, "
                      "cyclic-1-weak, bipartite-core, triangle-free-core, acyclic-e0-3pm, "
                      "acyclic-2pm, plus any metric; default: all conjecture checks");
    check->add_option("--budget", budget_nodes, "search-node budget per check");
    check->add_option("--time-limit", budget_millis, "wall-clock budget per check, ms");
    check->add_option("--workers", workers, "worker threads");
    check->add_option("--output", output, "output file (default stdout)");

    CLI::App* compute = app.add_subcommand("compute", "compute exact metrics over a graph6 file");
    compute->add_option("--input", input, "graph6 input file")->required();
    compute->add_option("--metrics", metrics_csv,
                        "comma-separated metrics from mu3, mu3-prime, oddness, weak-oddness, "
                        "fano-lines, cyclic-weak-core-k")
        ->required();
    compute->add_option("--budget", budget_nodes, "search-node budget per metric");
    compute->add_option("--time-limit", budget_millis, "wall-clock budget per metric, ms");
    compute->add_option("--workers", workers, "worker threads");
    compute->add_option("--output", output, "output file (default stdout)");

    CLI::App* invariants =
        app.add_subcommand("invariants", "run the always-true property suite over a graph6 file");
    invariants->add_option("--input", input, "graph6 input file")->required();
    invariants->add_option("--samples", samples, "cover triples sampled per graph");

    CLI::App* counterexample =
        app.add_subcommand("counterexample", "build and verify the 70-vertex counterexample");
    counterexample->add_option("--mode", mode, "full | structured")
        ->check(CLI::IsMember({"full", "structured"}));
    counterexample->add_option("--emit-g6", emit_g6, "write the graph as graph6 to this file");
    counterexample->add_option("--budget", cx_budget_nodes,
                               "search-node budget (0 = unlimited)");

    CLI11_PARSE(app, argc, argv);

    cubic::Budget budget{budget_nodes, budget_millis};

    if (check->parsed()) {
        cubic::BatchConfig config;
        config.input_path = input;
        config.output_path = output;
        config.checks = checks_csv.empty() ? std::vector<std::string>{"fan-raspaud",
                                                                      "2pm+join",
                                                                      "1pm+2joins",
                                                                      "cyclic-1-weak",
                                                                      "bipartite-core",
                                                                      "triangle-free-core",
                                                                      "acyclic-e0-3pm",
                                                                      "acyclic-2pm"}
                                           : split_list(checks_csv);
        config.budget = budget;
        config.workers = workers;
        return emit_reports(cubic::run_batch(config), output.empty());
    }
    if (compute->parsed()) {
        cubic::BatchConfig config;
        config.input_path = input;
        config.output_path = output;
        config.checks = split_list(metrics_csv);
        config.budget = budget;
        config.workers = workers;
        return emit_reports(cubic::run_batch(config), output.empty());
    }
    if (invariants->parsed())
        return cubic::run_invariant_suite(input, std::cout, samples) ? 0 : 1;
    if (counterexample->parsed()) {
        cubic::Budget cx_budget =
            cx_budget_nodes == 0 ? cubic::Budget::unlimited() : cubic::Budget{cx_budget_nodes, 0};
        cubic::CounterexampleReport rep = cubic::reproduce_counterexample(
            mode == "full" ? cubic::CounterexampleMode::full : cubic::CounterexampleMode::structured,
            std::cout, emit_g6, cx_budget);
        if (rep.status == cubic::SearchStatus::budget_exceeded) return 3;
        return rep.all_pairs_cyclic && rep.petersen_pair_property ? 1 : 0;
    }
    return 0;
}
