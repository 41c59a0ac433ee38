#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cubic/fano.hpp"
#include "cubic/gadgets.hpp"
#include "cubic/harness.hpp"

using namespace cubic;
using nlohmann::json;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        path = std::string("harness_test_") + std::to_string(reinterpret_cast<std::uintptr_t>(this)) +
               ".g6";
        std::ofstream out(path, std::ios::binary);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

const char* kPetersenLine() {
    static std::string line = write_graph6(build_named(NamedGraph::petersen));
    return line.c_str();
}

}  // namespace

TEST_CASE("a K4-only batch with every check exits zero") {
    TempFile file("C~\n");
    BatchConfig config;
    config.input_path = file.path;
    config.checks = all_check_names();
    BatchResult result = run_batch(config);
    CHECK(result.exit_code == 0);
    REQUIRE(result.reports.size() == 1);
    const CheckReport& r = result.reports[0];
    CHECK(r.parse_ok);
    CHECK(r.n == 4);
    for (const CheckResult& c : r.checks) CHECK(c.outcome == "witness");
    REQUIRE(r.omega_equal.has_value());
    CHECK(*r.omega_equal);
}

TEST_CASE("petersen metrics through the batch runner") {
    TempFile file(std::string(kPetersenLine()) + "\n");
    BatchConfig config;
    config.input_path = file.path;
    config.checks = {"fan-raspaud", "oddness", "weak-oddness", "fano-lines", "mu3",
                     "cyclic-weak-core-k"};
    BatchResult result = run_batch(config);
    CHECK(result.exit_code == 0);
    REQUIRE(result.reports.size() == 1);
    const CheckReport& r = result.reports[0];
    for (const CheckResult& c : r.checks) {
        CHECK(c.outcome == "witness");
        if (c.name == "oddness" || c.name == "weak-oddness") CHECK(c.value == 2);
        if (c.name == "fano-lines") CHECK(c.value == 4);
        if (c.name == "mu3") CHECK(c.value == 6);
        if (c.name == "cyclic-weak-core-k") CHECK(c.value == 0);
    }
    REQUIRE(r.omega_equal.has_value());
    CHECK(*r.omega_equal);
}

TEST_CASE("reports keep input order under several workers") {
    std::string contents;
    for (int i = 0; i < 6; ++i)
        contents += i % 2 ? std::string(kPetersenLine()) + "\n" : "C~\n";
    TempFile file(contents);
    BatchConfig config;
    config.input_path = file.path;
    config.checks = {"oddness"};
    config.workers = 4;
    BatchResult result = run_batch(config);
    REQUIRE(result.reports.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(result.reports[i].index == i);
        CHECK(result.reports[i].n == (i % 2 ? 10 : 4));
    }
}

TEST_CASE("parse failures are recorded without aborting the batch") {
    TempFile file("C~\nnot-a-graph\nC~\n");
    BatchConfig config;
    config.input_path = file.path;
    config.checks = {"oddness"};
    BatchResult result = run_batch(config);
    CHECK(result.exit_code == 2);
    REQUIRE(result.reports.size() == 3);
    CHECK(result.reports[0].parse_ok);
    CHECK_FALSE(result.reports[1].parse_ok);
    CHECK(!result.reports[1].parse_error.empty());
    CHECK(result.reports[2].parse_ok);
}

TEST_CASE("missing file and empty check list are input errors") {
    BatchConfig config;
    config.input_path = "definitely_missing.g6";
    config.checks = {"oddness"};
    CHECK(run_batch(config).exit_code == 2);

    TempFile file("C~\n");
    config.input_path = file.path;
    config.checks = {};
    CHECK(run_batch(config).exit_code == 2);
    config.checks = {"no-such-check"};
    CHECK(run_batch(config).exit_code == 2);
}

TEST_CASE("budget exhaustion maps to exit code 3") {
    TempFile file(std::string(kPetersenLine()) + "\n");
    BatchConfig config;
    config.input_path = file.path;
    config.checks = {"mu3-prime"};
    config.budget = Budget{10, 0};
    BatchResult result = run_batch(config);
    CHECK(result.exit_code == 3);
    CHECK(result.reports[0].checks[0].outcome == "budget-exceeded");
}

TEST_CASE("a bridged graph yields precondition-failed") {
    // two K4 blocks with subdivided edges glued by a bridge
    std::vector<Edge> e;
    auto add_block = [&](int base, int sub) {
        e.push_back({base + 0, base + 2});
        e.push_back({base + 0, base + 3});
        e.push_back({base + 1, base + 2});
        e.push_back({base + 1, base + 3});
        e.push_back({base + 2, base + 3});
        e.push_back({base + 0, sub});
        e.push_back({base + 1, sub});
    };
    add_block(0, 4);
    add_block(5, 9);
    e.push_back({4, 9});
    CubicGraph bridged = CubicGraph::from_edges(10, std::move(e));
    TempFile file(write_graph6(bridged) + "\n");
    BatchConfig config;
    config.input_path = file.path;
    config.checks = {"fan-raspaud"};
    BatchResult result = run_batch(config);
    CHECK(result.exit_code == 2);
    CHECK(result.reports[0].checks[0].outcome == "precondition-failed");
}

TEST_CASE("the counterexample graph refutes acyclic-2pm through the batch runner") {
    TempFile file(write_graph6(counterexample_graph().expanded) + "\n");
    BatchConfig config;
    config.input_path = file.path;
    config.checks = {"acyclic-2pm"};
    config.budget = Budget{30'000'000, 0};
    BatchResult result = run_batch(config);
    CHECK(result.exit_code == 1);
    REQUIRE(result.reports.size() == 1);
    CHECK(result.reports[0].checks[0].outcome == "refuted");
}

TEST_CASE("json reports parse back and witnesses revalidate") {
    TempFile file(std::string(kPetersenLine()) + "\n");
    BatchConfig config;
    config.input_path = file.path;
    config.checks = all_check_names();
    BatchResult result = run_batch(config);
    REQUIRE(result.reports.size() == 1);
    std::string line = report_to_json(result.reports[0]);
    json j = json::parse(line);
    CHECK(j["graph6"] == kPetersenLine());
    CHECK(j["n"] == 10);
    CubicGraph g = parse_graph6(j["graph6"].get<std::string>());
    for (auto& [name, entry] : j["checks"].items()) {
        CHECK(entry["outcome"] == "witness");
        if (conjecture_from_name(name)) {
            std::vector<std::vector<int>> witness =
                entry["witness"].get<std::vector<std::vector<int>>>();
            CHECK(validate_witness_json(g, name, witness));
            continue;
        }
        // metric witnesses re-validate against their reported values
        if (name == "oddness" || name == "weak-oddness") {
            EdgeSubset s = EdgeSubset::from_indices(
                g.edge_count(), entry["witness"][0].get<std::vector<int>>());
            Join witness_join = Join::over(g, s);  // must be a join at all
            if (name == "oddness") CHECK(witness_join.is_perfect_matching());
            CHECK(odd_components(g, s.complement()) == entry["value"].get<int>());
        } else if (name == "mu3" || name == "mu3-prime" || name == "cyclic-weak-core-k") {
            auto lists = entry["witness"].get<std::vector<std::vector<int>>>();
            REQUIRE(lists.size() == 3);
            CoverTriple t = make_cover_triple(
                Join::over(g, EdgeSubset::from_indices(g.edge_count(), lists[0])),
                Join::over(g, EdgeSubset::from_indices(g.edge_count(), lists[1])),
                Join::over(g, EdgeSubset::from_indices(g.edge_count(), lists[2])));
            if (name == "cyclic-weak-core-k") {
                CHECK(core_properties(t).is_cyclic);
                CHECK(weak_core(t).k == entry["value"].get<int>());
            } else {
                CHECK(weak_core(t).l2 == entry["value"].get<long long>());
            }
        } else if (name == "fano-lines") {
            FanoFlow flow = validate_fano_flow(g, entry["flow"].get<std::vector<int>>());
            CHECK(flow.line_count() == entry["value"].get<int>());
        }
    }
    CHECK(j["checks"]["oddness"]["value"] == 2);
}

TEST_CASE("run_batch writes the report file itself when asked") {
    TempFile file("C~\n");
    BatchConfig config;
    config.input_path = file.path;
    config.checks = {"oddness"};
    config.output_path = file.path + ".out";
    BatchResult result = run_batch(config);
    CHECK(result.exit_code == 0);
    std::ifstream in(config.output_path, std::ios::binary);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    CHECK(json::parse(line)["checks"]["oddness"]["value"] == 0);
    std::remove(config.output_path.c_str());

    config.output_path = "no/such/dir/x.jsonl";
    CHECK(run_batch(config).exit_code == 2);
}

TEST_CASE("reports are identical for any worker count") {
    std::string contents;
    for (int i = 0; i < 5; ++i)
        contents += i % 2 ? std::string(kPetersenLine()) + "\n" : "C~\n";
    TempFile file(contents);
    BatchConfig config;
    config.input_path = file.path;
    config.checks = {"fan-raspaud", "oddness", "mu3"};
    auto strip_millis = [](BatchResult r) {
        std::string all;
        for (CheckReport& rep : r.reports) {
            for (CheckResult& c : rep.checks) c.millis = 0;
            all += report_to_json(rep) + "\n";
        }
        return all;
    };
    config.workers = 1;
    std::string serial = strip_millis(run_batch(config));
    config.workers = 4;
    std::string parallel = strip_millis(run_batch(config));
    CHECK(serial == parallel);
}

TEST_CASE("the invariant suite passes on the canonical graphs") {
    std::string contents = std::string("C~\n") + kPetersenLine() + "\n";
    TempFile file(contents);
    std::ostringstream out;
    CHECK(run_invariant_suite(file.path, out, 60));
    CHECK(out.str().find("all hold") != std::string::npos);
}

TEST_CASE("structured counterexample transcript") {
    std::ostringstream out;
    CounterexampleReport rep =
        reproduce_counterexample(CounterexampleMode::structured, out, "");
    CHECK(rep.pm_count == 6144);
    CHECK(out.str().find("pm_count = 6144") != std::string::npos);
    CHECK(out.str().find("verdict: refuted") != std::string::npos);
}

TEST_CASE("counterexample emits a parseable graph6 file") {
    std::string path = "counterexample_emit_test.g6";
    std::ostringstream out;
    reproduce_counterexample(CounterexampleMode::structured, out, path);
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    CubicGraph g = parse_graph6(line);
    CHECK(g.vertex_count() == 70);
    CHECK(g.edge_count() == 105);
    CHECK(is_bridgeless(g));
    std::remove(path.c_str());
}
