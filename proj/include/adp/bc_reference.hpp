#pragma once

#include <vector>

#include "adp/core_model.hpp"

namespace adp {

/// Bounds after hypothesizing X_i = v: i is fixed, v leaves every boundary
/// it sits on, predecessors drop above v-1, successors rise above v+1.
struct DirectPruneStore {
    int var = 0;
    int value = 0;
    Bounds bounds;
};

DirectPruneStore direct_prune(const Instance& inst, const Bounds& bounds, int i, int v);

/// Bound support test for X_i = v (requires AllDifferent and precedence BC
/// already established on `bounds`): direct prune, then greedy.
bool bound_support_exists(const Instance& inst, const Bounds& bounds, int i, int v);

/// Reference route 1: binary-search filtering of every bound around the
/// box feasibility test, iterated across variables to the BC fixpoint.
PropagationOutcome filter_binary_search(const Instance& inst, Bounds bounds);

/// A violated value interval witnessing that X_i = v has no bound support.
/// upper_family counts successors against [1, u]; the mirror counts
/// predecessors against [l, d].
struct ViolatedInterval {
    int l = 0;
    int u = 0;
    int b_count = 0; // related variables anchored past the interval
    int d_count = 0; // unrelated variables inside the interval
    int cost = 0;    // b_count + d_count - (u - l)
    bool upper_family = true;
    bool operator==(const ViolatedInterval&) const = default;
};

/// All violated intervals for the pair (i, v), endpoints restricted to the
/// sets of current lower and upper bounds. Empty iff X_i = v has a bound
/// support, provided AllDifferent and precedence BC hold on `bounds`.
std::vector<ViolatedInterval> conditions_check(const Instance& inst, const Bounds& bounds, int i,
                                               int v);

/// Reference route 2: fixpoint of precedence BC, AllDifferent BC and the
/// interval-condition pruning rule (remove [l-(cost-1), u] upward, the
/// mirrored interval downward).
PropagationOutcome conditions_prune(const Instance& inst, Bounds bounds);

} // namespace adp
