#include "adp/bc_passes.hpp"

#include <algorithm>

namespace adp {

PassResult precedence_bc_pass(const Instance& inst, Bounds& bounds) {
    PassResult res;
    const auto& g = inst.graph;
    const auto& topo = g.topo_order();
    for (int i : topo)
        for (int j : g.successors(i))
            if (bounds[j].lb < bounds[i].lb + 1) {
                bounds[j].lb = bounds[i].lb + 1;
                res.changed = true;
            }
    for (auto it = topo.rbegin(); it != topo.rend(); ++it)
        for (int j : g.successors(*it))
            if (bounds[*it].ub > bounds[j].ub - 1) {
                bounds[*it].ub = bounds[j].ub - 1;
                res.changed = true;
            }
    res.failed = bounds.failed();
    return res;
}

namespace {

struct HallInterval {
    int lo;
    int hi;
};

// One scan: detect violated intervals, collect saturated Hall intervals.
bool hall_scan(const Bounds& bounds, std::vector<HallInterval>& halls) {
    const int n = bounds.size();
    halls.clear();
    std::vector<int> lows;
    lows.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) lows.push_back(bounds[i].lb);
    std::sort(lows.begin(), lows.end());
    lows.erase(std::unique(lows.begin(), lows.end()), lows.end());

    std::vector<int> ubs;
    for (int a : lows) {
        ubs.clear();
        for (int i = 0; i < n; ++i)
            if (bounds[i].lb >= a) ubs.push_back(bounds[i].ub);
        std::sort(ubs.begin(), ubs.end());
        int k = 0;
        for (int u : ubs) {
            ++k;
            const int cap = u - a + 1;
            if (k > cap) return false; // violated interval, no solution
            if (k == cap) halls.push_back({a, u});
        }
    }
    return true;
}

} // namespace

PassResult alldifferent_bc_pass(Bounds& bounds) {
    PassResult res;
    if (bounds.failed()) {
        res.failed = true;
        return res;
    }
    std::vector<HallInterval> halls;
    bool progress = true;
    while (progress) {
        progress = false;
        if (!hall_scan(bounds, halls)) {
            res.failed = true;
            return res;
        }
        for (const auto& h : halls) {
            for (int i = 0; i < bounds.size(); ++i) {
                auto& dom = bounds[i];
                if (dom.lb >= h.lo && dom.ub <= h.hi) continue; // inside the Hall set
                if (dom.lb >= h.lo && dom.lb <= h.hi) {
                    dom.lb = h.hi + 1;
                    progress = true;
                }
                if (dom.ub >= h.lo && dom.ub <= h.hi) {
                    dom.ub = h.lo - 1;
                    progress = true;
                }
                if (dom.empty()) {
                    res.failed = true;
                    res.changed = true;
                    return res;
                }
            }
        }
        if (progress) res.changed = true;
    }
    return res;
}

PassResult establish_alldiff_prec_bc(const Instance& inst, Bounds& bounds) {
    PassResult total;
    for (;;) {
        PassResult prec = precedence_bc_pass(inst, bounds);
        total.changed |= prec.changed;
        if (prec.failed) {
            total.failed = true;
            return total;
        }
        PassResult ad = alldifferent_bc_pass(bounds);
        total.changed |= ad.changed;
        if (ad.failed) {
            total.failed = true;
            return total;
        }
        if (!prec.changed && !ad.changed) return total;
    }
}

PropagationOutcome propagate_binary_decomposition(const Instance& inst, Bounds bounds) {
    const Bounds entry = bounds;
    if (bounds.failed()) return make_failure(std::move(bounds));
    PassResult res = establish_alldiff_prec_bc(inst, bounds);
    if (res.failed) return make_failure(std::move(bounds));
    return make_outcome(entry, std::move(bounds));
}

} // namespace adp
