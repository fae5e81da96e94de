#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "kcycles/harness.hpp"
#include "kcycles/oracle.hpp"
#include "support.hpp"

using namespace kcycles;

TEST_CASE("diff_test flags the original policy on the counterexample graph") {
    Graph g = testsupport::counterexample_graph();
    auto d = diff_test(g, 5, RelaxPolicy::Original);
    REQUIRE(d.has_value());
    CHECK(d->k == 5);
    CHECK(d->graph == g);
    REQUIRE(d->missing.size() == 1);
    CHECK(format_cycle(g, d->missing[0]) == "AECBDA");
    CHECK(d->spurious.empty());
}

TEST_CASE("diff_test passes the revised policy") {
    Graph g = testsupport::counterexample_graph();
    CHECK(diff_test(g, 5, RelaxPolicy::Revised) == std::nullopt);
    CHECK(diff_test(g, 5, RelaxPolicy::Revised, SccMode::Whole) == std::nullopt);
    for (int k = 1; k <= 4; ++k) {
        // below k = 5 the original policy is fine on this graph
        CHECK(diff_test(g, k, RelaxPolicy::Original) == std::nullopt);
    }
    CHECK(diff_test(Graph{}, 3, RelaxPolicy::Original) == std::nullopt);
    CHECK(diff_test(parse_graph("A B"), 2, RelaxPolicy::Revised) == std::nullopt);
}

TEST_CASE("discrepancy serializes to parseable json") {
    Graph g = testsupport::counterexample_graph();
    auto d = diff_test(g, 5, RelaxPolicy::Original);
    REQUIRE(d.has_value());
    nlohmann::json j = nlohmann::json::parse(d->to_json());
    CHECK(j["k"] == 5);
    CHECK(j["graph"] ==
          nlohmann::json({"A D E", "B D E", "C A B", "D A B", "E C"}));
    CHECK(j["missing"] ==
          nlohmann::json({{"A", "E", "C", "B", "D", "A"}}));
    CHECK(j["spurious"] == nlohmann::json::array());
    // the embedded graph reproduces the instance
    std::string lines;
    for (const auto& line : j["graph"]) {
        lines += line.get<std::string>();
        lines += '\n';
    }
    CHECK(parse_adjlist(lines) == g);
}

TEST_CASE("random_digraph basics") {
    CHECK(random_digraph(0, 0.5, 7).node_count() == 0);

    Graph full = random_digraph(5, 1.0, 3);
    CHECK(full.node_count() == 5);
    CHECK(full.edge_count() == 20);  // every ordered pair, no self-loops
    for (NodeId v = 0; v < 5; ++v) CHECK(!full.has_edge(v, v));

    CHECK(random_digraph(6, 0.0, 3).edge_count() == 0);

    Graph a = random_digraph(8, 0.4, 99);
    Graph b = random_digraph(8, 0.4, 99);
    CHECK(a == b);
    Graph c = random_digraph(8, 0.4, 100);
    CHECK(a != c);  // 56 coin flips, astronomically unlikely to collide

    Graph big = random_digraph(30, 0.1, 1);
    CHECK(big.node_count() == 30);
    CHECK(big.label(0) == "v0");
    CHECK(big.label(29) == "v29");
    CHECK(random_digraph(26, 0.0, 1).label(25) == "Z");

    Graph mid = random_digraph(20, 0.5, 11);
    CHECK(mid.edge_count() > 100);  // 380 pairs at p=.5, very loose band
    CHECK(mid.edge_count() < 280);

    CHECK_THROWS_AS(random_digraph(-1, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_digraph(3, -0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_digraph(3, 1.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_digraph(3, std::nan(""), 1), std::invalid_argument);
}

TEST_CASE("miner walks the small strongly connected space") {
    MinerOptions opts;
    opts.max_nodes = 2;
    opts.k_values = {2};
    opts.budget = 10;
    MinerResult r = mine_counterexamples(opts);
    CHECK(r.subsets_enumerated == 4);   // 2^2 subsets of the two pairs
    CHECK(r.instances_tested == 1);     // only A<->B is strongly connected
    CHECK(r.discrepancies.empty());
    CHECK(r.found_at.empty());
}

TEST_CASE("miner respects the budget exactly") {
    MinerOptions opts;
    opts.max_nodes = 3;
    opts.k_values = {2};
    opts.budget = 5;
    MinerResult r = mine_counterexamples(opts);
    CHECK(r.instances_tested == 5);  // 1 from n=2, then the first 4 of n=3
    CHECK(r.discrepancies.empty());

    opts.budget = 1000;
    MinerResult all = mine_counterexamples(opts);
    CHECK(all.instances_tested == 1 + 18);  // all strongly connected graphs
    CHECK(all.subsets_enumerated == 4 + 64);
    CHECK(all.discrepancies.empty());  // no failure this small at k = 2
}

TEST_CASE("miner permutations multiply the instance count") {
    MinerOptions opts;
    opts.max_nodes = 2;
    opts.k_values = {2};
    opts.budget = 100;
    opts.permutations_per_graph = 2;
    MinerResult r = mine_counterexamples(opts);
    CHECK(r.instances_tested == 3);  // base + 2 shuffles
    CHECK(r.discrepancies.empty());
}

TEST_CASE("miner is deterministic") {
    MinerOptions opts;
    opts.max_nodes = 3;
    opts.k_values = {2, 3};
    opts.budget = 30;
    opts.permutations_per_graph = 1;
    opts.permutation_seed = 77;
    MinerResult a = mine_counterexamples(opts);
    MinerResult b = mine_counterexamples(opts);
    CHECK(a.instances_tested == b.instances_tested);
    CHECK(a.subsets_enumerated == b.subsets_enumerated);
    CHECK(a.found_at == b.found_at);
    CHECK(a.discrepancies.size() == b.discrepancies.size());
}

TEST_CASE("miner rejects bad options") {
    MinerOptions opts;
    opts.budget = 0;
    CHECK_THROWS_AS(mine_counterexamples(opts), std::invalid_argument);
    opts.budget = -5;
    CHECK_THROWS_AS(mine_counterexamples(opts), std::invalid_argument);
    opts = {};
    opts.max_nodes = 6;
    CHECK_THROWS_AS(mine_counterexamples(opts), std::invalid_argument);
    opts = {};
    opts.permutations_per_graph = -1;
    CHECK_THROWS_AS(mine_counterexamples(opts), std::invalid_argument);

    opts = {};
    opts.max_nodes = 1;  // nothing to walk
    MinerResult r = mine_counterexamples(opts);
    CHECK(r.instances_tested == 0);
    CHECK(r.subsets_enumerated == 0);
}

TEST_CASE("miner callback never fires without a discrepancy") {
    MinerOptions opts;
    opts.max_nodes = 3;
    opts.k_values = {3};
    opts.budget = 100;
    int calls = 0;
    opts.on_found = [&](const Discrepancy&, long long) { ++calls; };
    MinerResult r = mine_counterexamples(opts);
    CHECK(calls == 0);
    CHECK(r.found_at.size() == r.discrepancies.size());
}

TEST_CASE("complexity probe on a two-cycle") {
    Graph g = parse_adjlist("A B\nB A");
    std::vector<Graph> graphs{g};
    ComplexityReport report =
        complexity_probe(graphs, 2, RelaxPolicy::Revised);
    REQUIRE(report.runs.size() == 1);
    const auto& r = report.runs[0];
    CHECK(r.nodes == 2);
    CHECK(r.edges == 2);
    CHECK(r.k == 2);
    CHECK(r.cycles == 1);
    // push A, push B: 2 lock writes + 2 edge visits; relax B then A: 2
    // calls + 2 writes to infinity; second start is pruned as a singleton
    CHECK(r.total_ops == 8);
    CHECK(r.ratio == doctest::Approx(0.5));
    CHECK(report.fitted_constant == doctest::Approx(0.5));
}

TEST_CASE("complexity probe covers every input and maxes the constant") {
    std::vector<Graph> graphs{
        testsupport::counterexample_graph(),
        parse_adjlist("A B\nB A"),
        random_digraph(6, 0.4, 5),
    };
    ComplexityReport report = complexity_probe(graphs, 5, RelaxPolicy::Revised);
    REQUIRE(report.runs.size() == 3);
    CHECK(report.runs[0].nodes == 5);
    CHECK(report.runs[0].edges == 9);
    double max_ratio = 0.0;
    for (const auto& r : report.runs) {
        CHECK(r.k == 5);
        CHECK(r.total_ops > 0);
        CHECK(r.ratio > 0.0);
        max_ratio = std::max(max_ratio, r.ratio);
    }
    CHECK(report.fitted_constant == doctest::Approx(max_ratio));

    CHECK_THROWS_AS(complexity_probe({}, 3, RelaxPolicy::Revised),
                    std::invalid_argument);
}

TEST_CASE("complexity report serializes to parseable json") {
    std::vector<Graph> graphs{parse_adjlist("A B\nB A")};
    ComplexityReport report = complexity_probe(graphs, 2, RelaxPolicy::Revised);
    nlohmann::json j = nlohmann::json::parse(report.to_json());
    REQUIRE(j["runs"].size() == 1);
    CHECK(j["runs"][0]["nodes"] == 2);
    CHECK(j["runs"][0]["edges"] == 2);
    CHECK(j["runs"][0]["k"] == 2);
    CHECK(j["runs"][0]["cycles"] == 1);
    CHECK(j["runs"][0]["total_ops"] == 8);
    CHECK(j["runs"][0]["ratio"].get<double>() == doctest::Approx(0.5));
    CHECK(j["fitted_constant"].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("diff test catches a deliberately broken run end to end") {
    // sanity-check the harness itself: a cycle set with one dropped entry
    // must show up as missing
    Graph g = testsupport::counterexample_graph();
    CycleSet expected = brute_force_cycles(g, 5);
    EnumerateResult run = enumerate_cycles(g, 5, RelaxPolicy::Original);
    std::set<std::string> names = testsupport::cycle_strings(g, run.cycles);
    CHECK(expected.cycles.size() == names.size() + 1);
}
