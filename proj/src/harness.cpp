#include "cubic/harness.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "cubic/edge_coloring.hpp"
#include "cubic/fano.hpp"
#include "cubic/parity.hpp"

namespace cubic {

namespace {

using nlohmann::json;

const std::vector<std::string> kMetricNames = {"mu3",          "mu3-prime", "oddness",
                                               "weak-oddness", "fano-lines", "cyclic-weak-core-k"};

bool is_metric(const std::string& name) {
    for (const auto& m : kMetricNames)
        if (m == name) return true;
    return false;
}

std::vector<std::vector<int>> subset_lists(const std::vector<EdgeSubset>& subsets) {
    std::vector<std::vector<int>> out;
    out.reserve(subsets.size());
    for (const auto& s : subsets) out.push_back(s.to_indices());
    return out;
}

class StopWatch {
public:
    StopWatch() : start_(std::chrono::steady_clock::now()) {}
    long long millis() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

CheckResult run_one_check(const CubicGraph& g, const std::string& name, const Budget& budget) {
    CheckResult res;
    res.name = name;
    StopWatch watch;
    try {
        if (auto id = conjecture_from_name(name)) {
            WitnessResult w = find_witness(g, *id, budget);
            switch (w.status) {
                case SearchStatus::found:
                    res.outcome = "witness";
                    res.witness = subset_lists(w.witness);
                    break;
                case SearchStatus::exhausted: res.outcome = "refuted"; break;
                case SearchStatus::budget_exceeded: res.outcome = "budget-exceeded"; break;
            }
        } else if (name == "oddness" || name == "weak-oddness") {
            OddnessResult o = name == "oddness" ? oddness(g) : weak_oddness(g);
            res.outcome = "witness";
            res.value = o.value;
            res.witness = subset_lists({o.witness});
        } else if (name == "mu3" || name == "mu3-prime") {
            MinimizeResult r = minimize_core(g, name == "mu3" ? 0 : 3, CoreObjective::l, budget);
            switch (r.status) {
                case SearchStatus::found:
                    res.outcome = "witness";
                    res.value = r.best_l2;
                    res.witness = subset_lists({r.witness->joins[0].edges, r.witness->joins[1].edges,
                                                r.witness->joins[2].edges});
                    break;
                case SearchStatus::exhausted: res.outcome = "refuted"; break;
                case SearchStatus::budget_exceeded: res.outcome = "budget-exceeded"; break;
            }
        } else if (name == "cyclic-weak-core-k") {
            MinimizeResult r = minimize_core(g, 3, CoreObjective::cyclic_feasibility, budget);
            switch (r.status) {
                case SearchStatus::found:
                    res.outcome = "witness";
                    res.value = r.best_k;
                    res.witness = subset_lists({r.witness->joins[0].edges, r.witness->joins[1].edges,
                                                r.witness->joins[2].edges});
                    break;
                case SearchStatus::exhausted: res.outcome = "refuted"; break;
                case SearchStatus::budget_exceeded: res.outcome = "budget-exceeded"; break;
            }
        } else if (name == "fano-lines") {
            FanoSearchResult r = min_line_fano_flow(g, budget);
            switch (r.status) {
                case SearchStatus::found:
                    res.outcome = "witness";
                    res.value = r.min_lines;
                    res.flow = r.flow->values;
                    break;
                case SearchStatus::exhausted: res.outcome = "refuted"; break;
                case SearchStatus::budget_exceeded: res.outcome = "budget-exceeded"; break;
            }
        } else {
            res.outcome = "precondition-failed";
            res.detail = "unknown check";
        }
    } catch (const DomainError& err) {
        res.outcome = "precondition-failed";
        res.detail = err.what();
    }
    res.millis = watch.millis();
    return res;
}

}  // namespace

bool is_known_check(const std::string& name) {
    return conjecture_from_name(name).has_value() || is_metric(name);
}

std::vector<std::string> all_check_names() {
    std::vector<std::string> names;
    for (int i = 0; i < 8; ++i)
        names.emplace_back(conjecture_name(static_cast<ConjectureId>(i)));
    names.insert(names.end(), kMetricNames.begin(), kMetricNames.end());
    return names;
}

CheckReport run_checks_on_graph(std::size_t index, const std::string& g6_line,
                                const std::vector<std::string>& checks, const Budget& budget) {
    CheckReport report;
    report.index = index;
    report.graph6 = g6_line;
    std::optional<CubicGraph> g;
    try {
        g = parse_graph6(g6_line);
        report.parse_ok = true;
        report.n = g->vertex_count();
        report.graph6 = write_graph6(*g);
    } catch (const std::exception& err) {
        report.parse_error = err.what();
        return report;
    }

    std::optional<long long> omega, omega_weak;
    for (const std::string& name : checks) {
        CheckResult res = run_one_check(*g, name, budget);
        if (res.outcome == "witness" && res.value) {
            if (name == "oddness") omega = *res.value;
            if (name == "weak-oddness") omega_weak = *res.value;
        }
        report.checks.push_back(std::move(res));
    }
    if (omega && omega_weak) report.omega_equal = *omega == *omega_weak;
    return report;
}

std::string report_to_json(const CheckReport& report) {
    json j;
    j["index"] = report.index;
    j["graph6"] = report.graph6;
    if (!report.internal_error.empty()) {
        j["error"] = report.internal_error;
        j["checks"] = json::object();
        return j.dump();
    }
    if (!report.parse_ok) {
        j["parse_error"] = report.parse_error;
        j["checks"] = json::object();
        return j.dump();
    }
    j["n"] = report.n;
    json checks = json::object();
    for (const CheckResult& c : report.checks) {
        json e;
        e["outcome"] = c.outcome;
        if (c.value) e["value"] = *c.value;
        if (c.name == "mu3" || c.name == "mu3-prime") {
            if (c.value) e["l"] = static_cast<double>(*c.value) / 2.0;
        }
        if (!c.witness.empty()) e["witness"] = c.witness;
        if (!c.flow.empty()) e["flow"] = c.flow;
        if (!c.detail.empty()) e["detail"] = c.detail;
        e["millis"] = c.millis;
        checks[c.name] = std::move(e);
    }
    j["checks"] = std::move(checks);
    if (report.omega_equal) j["omega_equal"] = *report.omega_equal;
    return j.dump();
}

bool validate_witness_json(const CubicGraph& g, const std::string& check_name,
                           const std::vector<std::vector<int>>& witness) {
    auto id = conjecture_from_name(check_name);
    if (!id) return false;
    std::vector<EdgeSubset> parts;
    for (const auto& lst : witness) parts.push_back(EdgeSubset::from_indices(g.edge_count(), lst));
    return witness_satisfies(g, *id, parts);
}

BatchResult run_batch(const BatchConfig& config) {
    BatchResult result;
    for (const std::string& name : config.checks) {
        if (!is_known_check(name)) {
            result.exit_code = 2;
            result.io_error = "unknown check: " + name;
            return result;
        }
    }
    if (config.checks.empty()) {
        result.exit_code = 2;
        result.io_error = "no checks selected";
        return result;
    }

    std::ifstream in(config.input_path, std::ios::binary);
    if (!in) {
        result.exit_code = 2;
        result.io_error = "cannot open " + config.input_path;
        return result;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::vector<std::string> lines = split_graph6_lines(buffer.str());

    result.reports.resize(lines.size());
    int workers = std::max(1, config.workers);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= lines.size()) break;
            try {
                result.reports[i] = run_checks_on_graph(i, lines[i], config.checks, config.budget);
            } catch (const std::exception& err) {
                // a bug in a check must not take the whole batch down
                result.reports[i] = CheckReport{};
                result.reports[i].index = i;
                result.reports[i].graph6 = lines[i];
                result.reports[i].internal_error = err.what();
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    bool any_refuted = false, any_parse = false, any_budget = false, any_precondition = false;
    for (const CheckReport& r : result.reports) {
        if (!r.parse_ok || !r.internal_error.empty()) any_parse = true;
        for (const CheckResult& c : r.checks) {
            if (c.outcome == "refuted") any_refuted = true;
            if (c.outcome == "budget-exceeded") any_budget = true;
            if (c.outcome == "precondition-failed") any_precondition = true;
        }
    }
    if (any_refuted)
        result.exit_code = 1;
    else if (any_parse || any_precondition)
        result.exit_code = 2;
    else if (any_budget)
        result.exit_code = 3;
    else
        result.exit_code = 0;

    if (!config.output_path.empty()) {
        std::ofstream out(config.output_path, std::ios::binary);
        if (!out) {
            result.exit_code = 2;
            result.io_error = "cannot write " + config.output_path;
            return result;
        }
        for (const CheckReport& r : result.reports) out << report_to_json(r) << "\n";
    }
    return result;
}

namespace {

// deterministic sampler for triple indices
struct Lcg {
    std::uint64_t state;
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 16;
    }
};

}  // namespace

bool run_invariant_suite(const std::string& input_path, std::ostream& out,
                         std::uint64_t triple_samples) {
    std::ifstream in(input_path, std::ios::binary);
    if (!in) {
        out << "cannot open " << input_path << "\n";
        return false;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::vector<std::string> lines = split_graph6_lines(buffer.str());

    bool all_ok = true;
    std::size_t idx = 0;
    for (const std::string& line : lines) {
        std::string verdict = "ok";
        std::string detail;
        try {
            CubicGraph g = parse_graph6(line);
            if (write_graph6(g) != line) {
                // re-encoding must be byte-stable on canonical input
                CubicGraph g2 = parse_graph6(write_graph6(g));
                if (write_graph6(g2) != write_graph6(g)) throw std::logic_error("round trip unstable");
            }
            if (!g.is_connected()) throw DomainError("disconnected graph");
            if (2 * g.edge_count() != 3 * g.vertex_count()) throw std::logic_error("handshake violation");

            std::vector<Join> all_joins;
            int dim = g.edge_count() - g.vertex_count() + 1;
            if (dim <= 20) {
                all_joins = joins(g);
                if (all_joins.size() != (std::size_t{1} << dim))
                    throw std::logic_error("join count != 2^(m-n+1)");
            }
            std::vector<Join> pms = perfect_matchings(g);
            for (const Join& pm : pms)
                if (!is_simple_join(pm)) throw std::logic_error("a 1-factor failed the simple-join test");

            if (!all_joins.empty()) {
                Lcg rng{0x9E3779B97F4A7C15ULL ^ (idx * 1000003ULL)};
                std::uint64_t samples = std::min<std::uint64_t>(
                    triple_samples, static_cast<std::uint64_t>(all_joins.size()) *
                                        all_joins.size() * all_joins.size());
                for (std::uint64_t s = 0; s < samples; ++s) {
                    const Join& j1 = all_joins[rng.next() % all_joins.size()];
                    const Join& j2 = all_joins[rng.next() % all_joins.size()];
                    const Join& j3 = all_joins[rng.next() % all_joins.size()];
                    CoverTriple t = make_cover_triple(j1, j2, j3);  // asserts the identities
                    // complement of each join is an even subgraph
                    for (const Join& j : t.joins) {
                        EdgeSubset comp = j.edges.complement();
                        for (int v = 0; v < g.vertex_count(); ++v) {
                            int deg = 0;
                            for (int e : g.incident(v)) deg += comp.test(e) ? 1 : 0;
                            if (deg != 0 && deg != 2)
                                throw std::logic_error("join complement is not an even subgraph");
                        }
                    }
                    // weak core structure: E0 u E2 has all degrees 0 or 2
                    EdgeSubset e0e2 = t.partition[0] | t.partition[2];
                    for (int v = 0; v < g.vertex_count(); ++v) {
                        int deg = 0;
                        for (int e : g.incident(v)) deg += e0e2.test(e) ? 1 : 0;
                        if (deg != 0 && deg != 2) throw std::logic_error("E0 u E2 degree not in {0,2}");
                    }
                    Theorem4Check bound = check_odd_component_bound(t);
                    if (!bound.holds) throw std::logic_error("odd-component bound violated");
                }
            }

            if (is_bridgeless(g)) {
                ParityReport parity = parity_report(g);
                if (parity.weak_oddness > parity.oddness)
                    throw std::logic_error("weak oddness exceeds oddness");
                if (parity.oddness % 2 || parity.weak_oddness % 2)
                    throw std::logic_error("parity values must be even");
                if ((parity.weak_oddness == 2) != (parity.oddness == 2))
                    throw std::logic_error("weak oddness 2 must coincide with oddness 2");
                bool colorable = is_three_edge_colorable(g);
                if ((parity.oddness == 0) != colorable || (parity.weak_oddness == 0) != colorable)
                    throw std::logic_error("zero oddness must coincide with 3-edge-colorability");
            }
        } catch (const std::exception& err) {
            verdict = "FAIL";
            detail = err.what();
            all_ok = false;
        }
        out << "graph " << idx << " " << verdict;
        if (!detail.empty()) out << "  (" << detail << ")";
        out << "\n";
        ++idx;
    }
    out << (all_ok ? "invariants: all hold" : "invariants: FAILURES FOUND") << " over " << idx
        << " graphs\n";
    return all_ok;
}

CounterexampleReport reproduce_counterexample(CounterexampleMode mode, std::ostream& out,
                                              const std::string& emit_g6_path,
                                              const Budget& budget) {
    out << "building the K4 expansion of the Petersen graph (70 vertices, 105 edges)\n";
    ExpansionMap x = counterexample_graph();
    out << "expanded graph: n=" << x.expanded.vertex_count() << " m=" << x.expanded.edge_count()
        << " bridgeless=" << (is_bridgeless(x.expanded) ? "yes" : "no") << "\n";

    if (!emit_g6_path.empty()) {
        std::ofstream g6(emit_g6_path, std::ios::binary);
        g6 << write_graph6(x.expanded) << "\n";
        out << "graph6 written to " << emit_g6_path << "\n";
    }

    CounterexampleReport rep = verify_counterexample(mode, budget);
    out << "mode: " << (mode == CounterexampleMode::full ? "full" : "structured") << "\n";
    out << "perfect matchings: pm_count = " << rep.pm_count << "\n";
    out << "petersen pair property (all 15 matching pairs share exactly one edge): "
        << (rep.petersen_pair_property ? "true" : "false") << "\n";
    out << "pairs_checked = " << rep.pairs_checked << "\n";
    out << "all_pairs_cyclic = " << (rep.all_pairs_cyclic ? "true" : "false") << "\n";
    if (rep.status == SearchStatus::budget_exceeded) {
        out << "verdict: budget-exceeded (inconclusive)\n";
    } else if (rep.all_pairs_cyclic) {
        out << "verdict: refuted -- no two perfect matchings of this graph have an acyclic union "
               "complement (acyclic-2pm fails here)\n";
    } else {
        out << "verdict: not refuted on this graph\n";
    }
    return rep;
}

}  // namespace cubic
