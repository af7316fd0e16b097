#include "adp/feasibility.hpp"

#include <algorithm>
#include <set>

namespace adp {

PropagationOutcome preprocess_bounds(const Instance& inst, Bounds bounds) {
    const Bounds entry = bounds;
    const auto& g = inst.graph;
    for (int i : g.topo_order())
        for (int j : g.successors(i))
            bounds[j].lb = std::max(bounds[j].lb, bounds[i].lb);
    const auto& topo = g.topo_order();
    for (auto it = topo.rbegin(); it != topo.rend(); ++it)
        for (int j : g.successors(*it))
            bounds[*it].ub = std::min(bounds[*it].ub, bounds[j].ub);
    if (bounds.failed()) return make_failure(std::move(bounds));
    return make_outcome(entry, std::move(bounds));
}

bool weak_edge_condition_holds(const Instance& inst, const Bounds& bounds) {
    for (int i = 0; i < inst.size(); ++i)
        for (int j : inst.graph.successors(i))
            if (bounds[i].lb > bounds[j].lb || bounds[i].ub > bounds[j].ub) return false;
    return true;
}

std::optional<std::vector<int>> greedy_bound_support(const Instance& inst, const Bounds& bounds) {
    check_invariant(weak_edge_condition_holds(inst, bounds),
                    "greedy_bound_support requires preprocessed bounds");
    const int n = inst.size();
    if (bounds.failed()) return std::nullopt;

    std::vector<int> by_lb(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) by_lb[static_cast<size_t>(i)] = i;
    std::sort(by_lb.begin(), by_lb.end(),
              [&](int a, int b) { return bounds[a].lb < bounds[b].lb; });

    std::vector<int> assignment(static_cast<size_t>(n), 0);
    std::set<std::pair<int, int>> active; // (ub, var)
    size_t next = 0;
    int assigned = 0;
    const int d = inst.universe_max;
    std::vector<int> tied;

    for (int v = 1; v <= d && assigned < n; ++v) {
        while (next < by_lb.size() && bounds[by_lb[next]].lb <= v) {
            int i = by_lb[next++];
            active.emplace(bounds[i].ub, i);
        }
        if (active.empty()) continue;
        const int u = active.begin()->first;
        if (u < v) return std::nullopt; // a variable's window has passed

        tied.clear();
        for (auto it = active.begin(); it != active.end() && it->first == u; ++it)
            tied.push_back(it->second);
        int pick = -1;
        for (int c : tied) {
            bool succeeds_tied = false;
            for (int other : tied)
                if (other != c && inst.graph.in_predecessors(c, other)) {
                    succeeds_tied = true;
                    break;
                }
            if (!succeeds_tied && (pick < 0 || c < pick)) pick = c;
        }
        check_invariant(pick >= 0, "tie group must contain a non-successor");
        assignment[static_cast<size_t>(pick)] = v;
        active.erase({u, pick});
        ++assigned;
    }
    if (assigned < n) return std::nullopt;
    return assignment;
}

bool feasible_in_box(const Instance& inst, const Bounds& bounds) {
    auto pre = preprocess_bounds(inst, bounds);
    if (pre.failed) return false;
    return greedy_bound_support(inst, pre.bounds).has_value();
}

} // namespace adp
