#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "adp/applications.hpp"
#include "adp/bc_passes.hpp"
#include "adp/bc_reference.hpp"
#include "adp/feasibility.hpp"
#include "support.hpp"

using namespace adp;

TEST_CASE("direct pruning of the three-variable example") {
    const Instance inst = test::chain_triple_instance();
    const Bounds entry = initial_bounds(inst);

    SUBCASE("fixing X1 = 2") {
        const DirectPruneStore store = direct_prune(inst, entry, 0, 2);
        CHECK(store.bounds[0] == IntervalDomain{2, 2});
        CHECK(store.bounds[1] == IntervalDomain{3, 3});
        CHECK(store.bounds[2] == IntervalDomain{1, 3});
    }
    SUBCASE("fixing X3 = 1") {
        const DirectPruneStore store = direct_prune(inst, entry, 2, 1);
        CHECK(store.bounds[0] == IntervalDomain{2, 2});
        CHECK(store.bounds[1] == IntervalDomain{2, 3});
        CHECK(store.bounds[2] == IntervalDomain{1, 1});
    }
}

TEST_CASE("direct pruning pushes every successor above the hypothesized value") {
    const Instance inst = test::sweep_showcase_instance();
    const DirectPruneStore store = direct_prune(inst, initial_bounds(inst), 0, 3);
    CHECK(store.bounds[0] == IntervalDomain{3, 3});
    for (int j = 1; j <= 4; ++j) CHECK(store.bounds[j] == IntervalDomain{4, 6});
}

TEST_CASE("direct pruning preserves the weak edge condition") {
    std::mt19937_64 rng(17);
    RandomInstanceParams params{7, 9, 0.3};
    for (int round = 0; round < 300; ++round) {
        const Instance inst = random_instance(rng, params);
        Bounds bounds = initial_bounds(inst);
        if (establish_alldiff_prec_bc(inst, bounds).failed) continue;
        for (int i = 0; i < inst.size(); ++i)
            for (int v : {bounds[i].lb, bounds[i].ub}) {
                const DirectPruneStore store = direct_prune(inst, bounds, i, v);
                if (store.bounds.failed()) continue;
                CHECK(weak_edge_condition_holds(inst, store.bounds));
            }
    }
}

TEST_CASE("bound support test on the propagation-gap instance") {
    const Instance inst = test::propagation_gap_instance();
    Bounds bounds = initial_bounds(inst);
    REQUIRE(!establish_alldiff_prec_bc(inst, bounds).failed);
    CHECK(!bound_support_exists(inst, bounds, 2, 2));
    CHECK(bound_support_exists(inst, bounds, 2, 4));
    CHECK(test::box_value_supported(inst, bounds, 2, 4));

    const Instance single = build_instance({{3, 4, 5}}, {});
    const Bounds sb = initial_bounds(single);
    for (int v = 1; v <= 3; ++v) CHECK(bound_support_exists(single, sb, 0, v));
}

TEST_CASE("binary-search filter reaches the documented fixpoints") {
    SUBCASE("gap instance prunes X3 to [3,4]") {
        const Instance inst = test::propagation_gap_instance();
        const PropagationOutcome out = filter_binary_search(inst, initial_bounds(inst));
        REQUIRE(!out.failed);
        CHECK(out.bounds[2] == IntervalDomain{3, 4});
    }
    SUBCASE("sweep example prunes X1 to [1,2]") {
        const Instance inst = test::sweep_showcase_instance();
        const PropagationOutcome out = filter_binary_search(inst, initial_bounds(inst));
        REQUIRE(!out.failed);
        CHECK(out.bounds[0] == IntervalDomain{1, 2});
    }
}

TEST_CASE("binary-search filter is idempotent") {
    std::mt19937_64 rng(29);
    RandomInstanceParams params{6, 8, 0.3};
    for (int round = 0; round < 120; ++round) {
        const Instance inst = random_instance(rng, params);
        const PropagationOutcome once = filter_binary_search(inst, initial_bounds(inst));
        if (once.failed) continue;
        const PropagationOutcome twice = filter_binary_search(inst, once.bounds);
        CHECK(!twice.failed);
        CHECK(twice.bounds == once.bounds);
    }
}

TEST_CASE("conditions_check reports the violated interval of the sweep example") {
    const Instance inst = test::sweep_showcase_instance();
    Bounds bounds = initial_bounds(inst);
    REQUIRE(!establish_alldiff_prec_bc(inst, bounds).failed);
    const auto violated = conditions_check(inst, bounds, 0, 3);
    REQUIRE(!violated.empty());
    bool found = false;
    for (const auto& w : violated)
        if (w.upper_family && w.l == 3 && w.u == 6) {
            CHECK(w.b_count == 2);
            CHECK(w.d_count == 2);
            CHECK(w.cost == 1);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("no precedences and loose domains yield no violated intervals") {
    const Instance inst = build_instance({{1, 2, 3, 4}, {1, 2, 3, 4}}, {});
    Bounds bounds = initial_bounds(inst);
    REQUIRE(!establish_alldiff_prec_bc(inst, bounds).failed);
    for (int i = 0; i < inst.size(); ++i)
        for (int v : {bounds[i].lb, bounds[i].ub})
            CHECK(conditions_check(inst, bounds, i, v).empty());
}

TEST_CASE("conditions_check agrees with the bound support test on random instances") {
    std::mt19937_64 rng(31);
    RandomInstanceParams params{6, 8, 0.3};
    for (int round = 0; round < 300; ++round) {
        const Instance inst = random_instance(rng, params);
        Bounds bounds = initial_bounds(inst);
        if (establish_alldiff_prec_bc(inst, bounds).failed) continue;
        for (int i = 0; i < inst.size(); ++i)
            for (int v : {bounds[i].lb, bounds[i].ub}) {
                const bool supported = bound_support_exists(inst, bounds, i, v);
                const bool violated = !conditions_check(inst, bounds, i, v).empty();
                CHECK(supported == !violated);
            }
    }
}

TEST_CASE("every interval inside a violated removal is itself violated") {
    std::mt19937_64 rng(37);
    RandomInstanceParams params{6, 8, 0.3};
    int seen = 0;
    for (int round = 0; round < 400; ++round) {
        const Instance inst = random_instance(rng, params);
        Bounds bounds = initial_bounds(inst);
        if (establish_alldiff_prec_bc(inst, bounds).failed) continue;
        for (int i = 0; i < inst.size(); ++i)
            for (const auto& w : conditions_check(inst, bounds, i, bounds[i].ub)) {
                if (!w.upper_family || w.cost < 1) continue;
                ++seen;
                for (int shrink = 0; shrink < w.cost; ++shrink) {
                    // Re-evaluate the counts on the slid interval [l - shrink, u].
                    const int l2 = w.l - shrink;
                    int b_count = 0, d_count = 0;
                    for (int j = 0; j < inst.size(); ++j) {
                        if (j == i) continue;
                        if (inst.graph.in_successors(i, j)) {
                            if (bounds[j].ub <= w.u) ++b_count;
                        } else if (bounds[j].lb >= l2 && bounds[j].ub <= w.u) {
                            ++d_count;
                        }
                    }
                    CHECK(b_count + d_count - (w.u - l2) >= 1);
                }
            }
    }
    CHECK(seen > 0);
}

TEST_CASE("conditions_prune reaches the documented fixpoints") {
    SUBCASE("sweep example") {
        const Instance inst = test::sweep_showcase_instance();
        const PropagationOutcome out = conditions_prune(inst, initial_bounds(inst));
        REQUIRE(!out.failed);
        CHECK(out.bounds[0] == IntervalDomain{1, 2});
    }
    SUBCASE("propagation-gap instance") {
        const Instance inst = test::propagation_gap_instance();
        const PropagationOutcome out = conditions_prune(inst, initial_bounds(inst));
        REQUIRE(!out.failed);
        CHECK(out.bounds[2] == IntervalDomain{3, 4});
    }
}

TEST_CASE("both reference routes reach identical fixpoints") {
    std::mt19937_64 rng(41);
    RandomInstanceParams params{7, 9, 0.3};
    for (int round = 0; round < 300; ++round) {
        const Instance inst = random_instance(rng, params);
        const Bounds entry = initial_bounds(inst);
        const PropagationOutcome a = filter_binary_search(inst, entry);
        const PropagationOutcome b = conditions_prune(inst, entry);
        CHECK(a.failed == b.failed);
        if (!a.failed && !b.failed) CHECK(a.bounds == b.bounds);
    }
}

TEST_CASE("values pruned by the reference routes have no box support") {
    std::mt19937_64 rng(43);
    RandomInstanceParams params{5, 7, 0.3};
    for (int round = 0; round < 150; ++round) {
        const Instance inst = random_instance(rng, params);
        const Bounds entry = initial_bounds(inst);
        const PropagationOutcome out = conditions_prune(inst, entry);
        if (out.failed) {
            CHECK(!test::box_satisfiable(inst, entry));
            continue;
        }
        for (int i = 0; i < inst.size(); ++i) {
            for (int v = entry[i].lb; v < out.bounds[i].lb; ++v)
                CHECK(!test::box_value_supported(inst, entry, i, v));
            for (int v = out.bounds[i].ub + 1; v <= entry[i].ub; ++v)
                CHECK(!test::box_value_supported(inst, entry, i, v));
        }
    }
}
