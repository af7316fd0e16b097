#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "adp/applications.hpp"
#include "adp/bc_fast.hpp"
#include "adp/bc_passes.hpp"
#include "adp/fuzz.hpp"
#include "adp/search.hpp"
#include "support.hpp"

using namespace adp;

TEST_CASE("lexicographic ascending search finds the canonical solution") {
    const Instance inst = test::shared_predecessor_instance();
    SearchConfig config;
    config.var_order = VarOrder::Lex;
    config.value_order = ValueOrder::Ascending;
    const SearchResult result = solve(inst, config);
    REQUIRE(result.status == SearchStatus::Sat);
    CHECK(result.solution == std::vector<int64_t>{1, 2, 3, 4});
}

TEST_CASE("pigeonhole is unsatisfiable") {
    const Instance inst = build_instance({{1, 2}, {1, 2}, {1, 2}}, {});
    const SearchResult result = solve(inst, SearchConfig{});
    CHECK(result.status == SearchStatus::Unsat);
}

TEST_CASE("node limit is reported as a distinct outcome") {
    std::vector<std::vector<int64_t>> doms(7);
    for (auto& d : doms)
        for (int64_t v = 1; v <= 7; ++v) d.push_back(v);
    const Instance inst = build_instance(doms, {});
    SearchConfig config;
    config.node_limit = 3; // satisfiable, but any solution needs more nodes
    const SearchResult result = solve(inst, config);
    CHECK(result.status == SearchStatus::NodeLimit);
    CHECK(result.nodes > 3);
}

TEST_CASE("all routes agree on verdict and node count") {
    std::mt19937_64 rng(97);
    RandomInstanceParams params{6, 7, 0.3};
    for (int round = 0; round < 60; ++round) {
        const Instance inst = random_instance(rng, params);
        SearchConfig config;
        config.var_order = VarOrder::Lex;
        SearchResult fast, reference, decomposition;
        config.route = Route::Fast;
        fast = solve(inst, config);
        config.route = Route::Reference;
        reference = solve(inst, config);
        config.route = Route::Decomposition;
        decomposition = solve(inst, config);
        CHECK(fast.status == reference.status);
        CHECK(fast.status == decomposition.status);
        CHECK(fast.nodes == reference.nodes);
        CHECK(fast.nodes == decomposition.nodes);
        if (fast.status == SearchStatus::Sat) {
            std::vector<int> norm;
            for (int64_t v : fast.solution) norm.push_back(inst.normalize(v));
            CHECK(check_assignment(inst, norm));
        }
    }
}

TEST_CASE("identical configuration gives identical runs") {
    std::mt19937_64 rng(101);
    const Instance inst = random_instance(rng, {7, 9, 0.3});
    SearchConfig config;
    const SearchResult a = solve(inst, config);
    const SearchResult b = solve(inst, config);
    CHECK(a.status == b.status);
    CHECK(a.nodes == b.nodes);
    CHECK(a.solution == b.solution);
}

TEST_CASE("search respects domain holes") {
    const Instance inst = build_instance({{1, 4}, {1, 4}}, {{0, 1}});
    SearchConfig config;
    config.var_order = VarOrder::Lex;
    const SearchResult result = solve(inst, config);
    REQUIRE(result.status == SearchStatus::Sat);
    CHECK(result.solution == std::vector<int64_t>{1, 4});
}

TEST_CASE("propagation-gap demonstration: only the global routes prune") {
    const Instance inst = test::propagation_gap_instance();
    const Bounds entry = initial_bounds(inst);

    const PropagationOutcome weak = propagate_binary_decomposition(inst, entry);
    REQUIRE(!weak.failed);
    CHECK(weak.bounds == entry); // the binary decomposition removes nothing

    for (const auto& route : standard_routes(true)) {
        const PropagationOutcome out = route.run(inst, entry);
        REQUIRE(!out.failed);
        CHECK(out.bounds[2].lb == 3);
    }
}

TEST_CASE("split branching reaches the same verdicts") {
    std::mt19937_64 rng(103);
    RandomInstanceParams params{6, 8, 0.3};
    for (int round = 0; round < 40; ++round) {
        const Instance inst = random_instance(rng, params);
        SearchConfig assign, split;
        split.branching = Branching::Split;
        split.value_order = ValueOrder::Descending;
        const SearchResult a = solve(inst, assign);
        const SearchResult b = solve(inst, split);
        CHECK(a.status == b.status);
    }
}

TEST_CASE("instruction schedules translate directly") {
    const Instance inst = gen_instruction_schedule({{0, 1}, {0, 2}}, 3);
    CHECK(inst.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(inst.domains[static_cast<size_t>(i)].min() == 1);
        CHECK(inst.domains[static_cast<size_t>(i)].max() == 3);
    }
    CHECK(inst.graph.successors(0) == std::vector<int>{1, 2});
}

TEST_CASE("a dependence chain forces the unique schedule") {
    const Instance inst = gen_instruction_schedule({{0, 1}, {1, 2}, {2, 3}}, 4);
    const SearchResult result = solve(inst, SearchConfig{});
    REQUIRE(result.status == SearchStatus::Sat);
    CHECK(result.solution == std::vector<int64_t>{1, 2, 3, 4});
}

TEST_CASE("random DAG schedules are always satisfiable with full windows") {
    std::mt19937_64 rng(107);
    for (int round = 0; round < 30; ++round) {
        const int n = 2 + static_cast<int>(rng() % 7);
        std::vector<std::pair<int, int>> deps;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 100 < 30) deps.emplace_back(a, b);
        const Instance inst = gen_instruction_schedule(deps, n);
        const SearchResult result = solve(inst, SearchConfig{});
        REQUIRE(result.status == SearchStatus::Sat); // any topological order works
        CHECK(verify_schedule(inst, result.solution, deps, n));
    }
}

TEST_CASE("fuzz driver reports zero discrepancies across all routes") {
    FuzzParams params;
    params.seed = 5;
    params.count = 120;
    params.instance = {6, 7, 0.3};
    params.include_decomposition = true;
    const FuzzReport report = run_differential_fuzz(params);
    CHECK(report.instances == 120);
    CHECK(report.clean());
}

TEST_CASE("empty fuzz run is clean") {
    FuzzParams params;
    params.count = 0;
    CHECK(run_differential_fuzz(params).clean());
}

TEST_CASE("a corrupted route is flagged by the differential driver") {
    FuzzParams params;
    params.seed = 9;
    params.count = 50;
    params.instance = {5, 6, 0.3};
    auto routes = standard_routes(false);
    routes.push_back({"corrupted", [](const Instance& inst, Bounds b) {
                          PropagationOutcome out = propagate_bc(inst, std::move(b));
                          if (!out.failed && out.bounds[0].lb < out.bounds[0].ub)
                              ++out.bounds[0].lb; // deliberately wrong
                          return out;
                      }});
    const FuzzReport report = run_differential_fuzz(params, routes);
    CHECK(report.discrepancies > 0);
}

TEST_CASE("graceful labelling of the prism solves and verifies") {
    const GracefulModel model = gen_graceful_k3p2();
    const auto labels = solve_graceful(model);
    REQUIRE(labels.has_value());
    CHECK(verify_graceful(model, *labels));
}
