#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "adp/core_model.hpp"

namespace adp::test {

// Independent brute-force oracle: enumerates the bound box and checks the
// constraint definition directly, without any library propagation code.
inline bool box_satisfiable(const Instance& inst, const Bounds& bounds) {
    const int n = inst.size();
    std::vector<int> values(static_cast<size_t>(n), 0);
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == n) return true;
        for (int v = bounds[i].lb; v <= bounds[i].ub; ++v) {
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                if (values[static_cast<size_t>(j)] == v) ok = false;
                if (ok && inst.graph.in_successors(j, i) && !(values[static_cast<size_t>(j)] < v))
                    ok = false;
                if (ok && inst.graph.in_successors(i, j) && !(v < values[static_cast<size_t>(j)]))
                    ok = false;
            }
            if (!ok) continue;
            values[static_cast<size_t>(i)] = v;
            if (rec(i + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

inline bool box_value_supported(const Instance& inst, const Bounds& bounds, int var, int value) {
    Bounds pinned = bounds;
    pinned[var] = {value, value};
    return box_satisfiable(inst, pinned);
}

// Small worked instances shared across suites (values already normalized).

// Example with four variables, two shared predecessors.
inline Instance shared_predecessor_instance() {
    return build_instance({{1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}, {1, 2, 3}, {2, 3, 4}},
                          {{0, 2}, {1, 2}, {0, 3}, {1, 3}});
}

// Three variables, one precedence, the direct-pruning example.
inline Instance chain_triple_instance() {
    return build_instance({{1, 2}, {2, 3}, {1, 2, 3}}, {{0, 1}});
}

// Five variables, X1 before X2 and X3, the sweep example.
inline Instance sweep_showcase_instance() {
    return build_instance({{1, 2, 3, 4, 5}, {2, 3, 4, 5, 6}, {2, 3, 4, 5, 6}, {3, 4, 5, 6},
                           {3, 4, 5, 6}},
                          {{0, 1}, {0, 2}});
}

// The propagation-gap instance: the binary decomposition is consistent but
// the global constraint prunes X3.
inline Instance propagation_gap_instance() {
    return build_instance({{1, 2, 3}, {1, 2, 3}, {2, 3, 4}}, {{0, 2}, {1, 2}});
}

} // namespace adp::test
