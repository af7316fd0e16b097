#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "adp/applications.hpp"
#include "adp/bc_fast.hpp"
#include "adp/decomposition.hpp"
#include "support.hpp"

using namespace adp;

namespace {

int count_kind(const DecompEncoding& enc, DecompConstraintKind kind) {
    int count = 0;
    for (const auto& c : enc.constraints)
        if (c.kind == kind) ++count;
    return count;
}

} // namespace

TEST_CASE("encoding counts for two variables on two values") {
    const Instance inst = build_instance({{1, 2}, {1, 2}}, {});
    const DecompEncoding enc = encode(inst);
    CHECK(enc.b_index.size() == 4); // B(i, l) for i in {1,2}, l in {1,2}
    // Intervals with u - l < n over [1, 2]: [1,1], [2,2] and [1,2].
    CHECK(enc.a_index.size() == 6);
    CHECK(count_kind(enc, DecompConstraintKind::IntervalSum) == 3);
    CHECK(count_kind(enc, DecompConstraintKind::SuccessorSum) == 0); // no edges
    CHECK(count_kind(enc, DecompConstraintKind::StrictLess) == 0);
}

TEST_CASE("single variable emits no successor or predecessor sums") {
    const Instance inst = build_instance({{1, 2, 3}}, {});
    const DecompEncoding enc = encode(inst);
    CHECK(count_kind(enc, DecompConstraintKind::SuccessorSum) == 0);
    CHECK(count_kind(enc, DecompConstraintKind::PredecessorSum) == 0);
}

TEST_CASE("sum constraints carry the documented constants") {
    const Instance inst = test::propagation_gap_instance();
    const DecompEncoding enc = encode(inst);
    for (const auto& c : enc.constraints) {
        switch (c.kind) {
        case DecompConstraintKind::IntervalSum:
            CHECK(c.rhs == c.u - c.l + 1);
            break;
        case DecompConstraintKind::SuccessorSum:
        case DecompConstraintKind::PredecessorSum:
            CHECK(c.rhs == c.u - c.l);
            CHECK(!c.positive.empty());
            break;
        default: break;
        }
    }
    CHECK(count_kind(enc, DecompConstraintKind::SuccessorSum) > 0);
    CHECK(count_kind(enc, DecompConstraintKind::PredecessorSum) > 0);
    CHECK(count_kind(enc, DecompConstraintKind::StrictLess) == 2);
}

TEST_CASE("decomposition fixpoint prunes the propagation-gap instance") {
    const Instance inst = test::propagation_gap_instance();
    const PropagationOutcome out = propagate_decomposition(encode(inst), initial_bounds(inst));
    REQUIRE(!out.failed);
    CHECK(out.bounds[2] == IntervalDomain{3, 4});
}

TEST_CASE("decomposition matches the sweep on the worked example") {
    const Instance inst = test::sweep_showcase_instance();
    const PropagationOutcome dec = propagate_decomposition(encode(inst), initial_bounds(inst));
    const PropagationOutcome fast = propagate_bc(inst, initial_bounds(inst));
    REQUIRE(!dec.failed);
    REQUIRE(!fast.failed);
    CHECK(dec.bounds == fast.bounds);
    CHECK(dec.bounds[0] == IntervalDomain{1, 2});
}

TEST_CASE("consistent full assignment fixes every Boolean without failure") {
    const Instance inst = build_instance({{1}, {2}, {3}}, {{0, 1}, {1, 2}});
    const PropagationOutcome out = propagate_decomposition(encode(inst), initial_bounds(inst));
    REQUIRE(!out.failed);
    for (int i = 0; i < 3; ++i) CHECK(out.bounds[i].size() == 1);
}

TEST_CASE("channel coherence at the fixpoint") {
    std::mt19937_64 rng(71);
    RandomInstanceParams params{5, 6, 0.3};
    int fixed_seen = 0;
    for (int round = 0; round < 150; ++round) {
        const Instance inst = random_instance(rng, params);
        const DecompEncoding enc = encode(inst);
        BoolFixpoint state;
        const PropagationOutcome out =
            propagate_decomposition(enc, initial_bounds(inst), &state);
        if (out.failed) continue;
        for (size_t id = 0; id < state.size(); ++id) {
            if (state[id] < 0) continue;
            ++fixed_seen;
            if (static_cast<int>(id) < enc.a_index_offset) {
                auto [i, l] = enc.b_index[id];
                if (state[id] == 1) CHECK(out.bounds[i].ub <= l);
                else CHECK(out.bounds[i].lb >= l + 1);
            } else {
                auto [i, l, u] = enc.a_index[id - static_cast<size_t>(enc.a_index_offset)];
                if (state[id] == 1) {
                    CHECK(out.bounds[i].lb >= l);
                    CHECK(out.bounds[i].ub <= u);
                }
            }
        }
    }
    CHECK(fixed_seen > 0);
}

TEST_CASE("decomposition fixpoint equals the sweep fixpoint on random instances") {
    std::mt19937_64 rng(73);
    RandomInstanceParams params{6, 7, 0.3};
    for (int round = 0; round < 200; ++round) {
        const Instance inst = random_instance(rng, params);
        const Bounds entry = initial_bounds(inst);
        const PropagationOutcome dec = propagate_decomposition(encode(inst), entry);
        const PropagationOutcome fast = propagate_bc(inst, entry);
        CHECK(dec.failed == fast.failed);
        if (!dec.failed && !fast.failed) CHECK(dec.bounds == fast.bounds);
    }
}

TEST_CASE("encoding dump lists one constraint per line") {
    const Instance inst = build_instance({{1, 2}, {1, 2}}, {{0, 1}});
    const DecompEncoding enc = encode(inst);
    const std::string dump = dump_encoding(enc);
    const size_t lines = static_cast<size_t>(std::count(dump.begin(), dump.end(), '\n'));
    CHECK(lines == enc.constraints.size());
    CHECK(dump.find("X1 < X2") != std::string::npos);
    CHECK(dump.find("B(1,1) <=> X1<=1") != std::string::npos);
}
