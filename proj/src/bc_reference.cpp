#include "adp/bc_reference.hpp"

#include <algorithm>

#include "adp/bc_passes.hpp"
#include "adp/feasibility.hpp"

namespace adp {

DirectPruneStore direct_prune(const Instance& inst, const Bounds& bounds, int i, int v) {
    check_invariant(bounds[i].contains(v), "direct_prune value must lie within the bounds");
    DirectPruneStore store{i, v, bounds};
    auto& doms = store.bounds;
    const auto& g = inst.graph;
    for (int j = 0; j < inst.size(); ++j) {
        if (j == i) {
            doms[j] = {v, v};
            continue;
        }
        if (doms[j].lb == v) doms[j].lb = v + 1;
        if (doms[j].ub == v) doms[j].ub = v - 1;
        if (g.in_predecessors(i, j)) doms[j].ub = std::min(doms[j].ub, v - 1);
        if (g.in_successors(i, j)) doms[j].lb = std::max(doms[j].lb, v + 1);
    }
    return store;
}

bool bound_support_exists(const Instance& inst, const Bounds& bounds, int i, int v) {
    DirectPruneStore store = direct_prune(inst, bounds, i, v);
    if (store.bounds.failed()) return false;
    return greedy_bound_support(inst, store.bounds).has_value();
}

namespace {

// Smallest feasible value of X_i within [lo, hi], assuming one exists.
int lowest_feasible(const Instance& inst, const Bounds& bounds, int i, int lo, int hi) {
    Bounds probe = bounds;
    while (lo < hi) {
        const int mid = lo + (hi - lo) / 2;
        probe[i] = {lo, mid};
        if (feasible_in_box(inst, probe)) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

int highest_feasible(const Instance& inst, const Bounds& bounds, int i, int lo, int hi) {
    Bounds probe = bounds;
    while (lo < hi) {
        const int mid = lo + (hi - lo + 1) / 2;
        probe[i] = {mid, hi};
        if (feasible_in_box(inst, probe)) lo = mid;
        else hi = mid - 1;
    }
    return lo;
}

} // namespace

PropagationOutcome filter_binary_search(const Instance& inst, Bounds bounds) {
    const Bounds entry = bounds;
    if (bounds.failed()) return make_failure(std::move(bounds));
    if (!feasible_in_box(inst, bounds)) return make_failure(std::move(bounds));
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 0; i < inst.size(); ++i) {
            const int lb = lowest_feasible(inst, bounds, i, bounds[i].lb, bounds[i].ub);
            if (lb != bounds[i].lb) {
                bounds[i].lb = lb;
                progress = true;
            }
            const int ub = highest_feasible(inst, bounds, i, bounds[i].lb, bounds[i].ub);
            if (ub != bounds[i].ub) {
                bounds[i].ub = ub;
                progress = true;
            }
        }
    }
    return make_outcome(entry, std::move(bounds));
}

namespace {

struct IntervalScan {
    const Instance& inst;
    const Bounds& bounds;
    int i;
    std::vector<int> anchors; // candidate endpoints: all current bounds

    IntervalScan(const Instance& inst_, const Bounds& bounds_, int i_)
        : inst(inst_), bounds(bounds_), i(i_) {
        BoundsIndex idx = bounds_index(bounds_);
        anchors = idx.lows;
        anchors.insert(anchors.end(), idx.highs.begin(), idx.highs.end());
        std::sort(anchors.begin(), anchors.end());
        anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
    }

    // Counts for the upper family on [l, u]: successors with domain in
    // [1, u], other non-successors with domain in [l, u].
    ViolatedInterval upper_counts(int l, int u) const {
        ViolatedInterval out{l, u, 0, 0, 0, true};
        for (int j = 0; j < inst.size(); ++j) {
            if (j == i) continue;
            if (inst.graph.in_successors(i, j)) {
                if (bounds[j].ub <= u) ++out.b_count;
            } else if (bounds[j].lb >= l && bounds[j].ub <= u) {
                ++out.d_count;
            }
        }
        out.cost = out.b_count + out.d_count - (u - l);
        return out;
    }

    ViolatedInterval lower_counts(int l, int u) const {
        ViolatedInterval out{l, u, 0, 0, 0, false};
        for (int j = 0; j < inst.size(); ++j) {
            if (j == i) continue;
            if (inst.graph.in_predecessors(i, j)) {
                if (bounds[j].lb >= l) ++out.b_count;
            } else if (bounds[j].lb >= l && bounds[j].ub <= u) {
                ++out.d_count;
            }
        }
        out.cost = out.b_count + out.d_count - (u - l);
        return out;
    }
};

} // namespace

std::vector<ViolatedInterval> conditions_check(const Instance& inst, const Bounds& bounds, int i,
                                               int v) {
    std::vector<ViolatedInterval> out;
    const int n = inst.size();
    IntervalScan scan(inst, bounds, i);
    for (size_t a = 0; a < scan.anchors.size(); ++a) {
        for (size_t b = a; b < scan.anchors.size(); ++b) {
            const int l = scan.anchors[a];
            const int u = scan.anchors[b];
            if (u - l + 1 > n) continue; // longer intervals are never tight
            if (u >= v) {
                ViolatedInterval w = scan.upper_counts(l, u);
                if (w.cost > std::max(0, l - v)) out.push_back(w);
            }
            if (l <= v) {
                ViolatedInterval w = scan.lower_counts(l, u);
                if (w.cost > std::max(0, v - u)) out.push_back(w);
            }
        }
    }
    return out;
}

namespace {

// Applies one sound value-interval removal to an interval domain.
bool remove_interval(IntervalDomain& dom, int from, int to) {
    if (from > to || to < dom.lb || from > dom.ub) return false;
    if (from <= dom.lb && to >= dom.ub) {
        dom = {1, 0}; // wiped out
        return true;
    }
    bool changed = false;
    if (from <= dom.lb && to >= dom.lb) {
        dom.lb = to + 1;
        changed = true;
    }
    if (to >= dom.ub && from <= dom.ub) {
        dom.ub = from - 1;
        changed = true;
    }
    return changed; // removals strictly interior to the interval are ignored
}

bool conditions_pass(const Instance& inst, Bounds& bounds) {
    bool changed = false;
    const int n = inst.size();
    for (int i = 0; i < n; ++i) {
        IntervalScan scan(inst, bounds, i);
        for (size_t a = 0; a < scan.anchors.size(); ++a) {
            for (size_t b = a; b < scan.anchors.size(); ++b) {
                const int l = scan.anchors[a];
                const int u = scan.anchors[b];
                if (u - l + 1 > n) continue;
                ViolatedInterval up = scan.upper_counts(l, u);
                if (up.cost >= 1)
                    changed |= remove_interval(bounds[i], l - (up.cost - 1), u);
                ViolatedInterval lo = scan.lower_counts(l, u);
                if (lo.cost >= 1)
                    changed |= remove_interval(bounds[i], l, u + (lo.cost - 1));
                if (bounds[i].empty()) return true;
            }
        }
    }
    return changed;
}

} // namespace

PropagationOutcome conditions_prune(const Instance& inst, Bounds bounds) {
    const Bounds entry = bounds;
    if (bounds.failed()) return make_failure(std::move(bounds));
    for (;;) {
        bool changed = false;
        PassResult prec = precedence_bc_pass(inst, bounds);
        changed |= prec.changed;
        if (prec.failed) return make_failure(std::move(bounds));
        PassResult ad = alldifferent_bc_pass(bounds);
        changed |= ad.changed;
        if (ad.failed) return make_failure(std::move(bounds));
        changed |= conditions_pass(inst, bounds);
        if (bounds.failed()) return make_failure(std::move(bounds));
        if (!changed) break;
    }
    return make_outcome(entry, std::move(bounds));
}

} // namespace adp
