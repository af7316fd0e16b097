#include "adp/search.hpp"

#include <algorithm>

#include "adp/bc_fast.hpp"
#include "adp/bc_passes.hpp"
#include "adp/bc_reference.hpp"
#include "adp/decomposition.hpp"

namespace adp {

namespace {

struct Searcher {
    const Instance& inst;
    const SearchConfig& config;
    const DecompEncoding* encoding; // only for the decomposition route
    int64_t nodes = 0;
    bool limit_hit = false;
    std::optional<std::vector<int>> solution;

    PropagationOutcome propagate(Bounds bounds) const {
        switch (config.route) {
        case Route::Fast: return propagate_bc(inst, std::move(bounds));
        case Route::Reference: return conditions_prune(inst, std::move(bounds));
        case Route::Decomposition: return propagate_decomposition(*encoding, std::move(bounds));
        case Route::Binary: return propagate_binary_decomposition(inst, std::move(bounds));
        }
        return make_failure(std::move(bounds));
    }

    int pick_variable(const Bounds& bounds) const {
        int best = -1;
        switch (config.var_order) {
        case VarOrder::Lex:
            for (int i = 0; i < inst.size(); ++i)
                if (bounds[i].size() > 1) return i;
            return -1;
        case VarOrder::Topological:
            for (int i : inst.graph.topo_order())
                if (bounds[i].size() > 1) return i;
            return -1;
        case VarOrder::MinDomain:
            for (int i = 0; i < inst.size(); ++i) {
                if (bounds[i].size() <= 1) continue;
                if (best < 0 || bounds[i].size() < bounds[best].size()) best = i;
            }
            return best;
        }
        return best;
    }

    // Smallest (resp. largest) member of the finite domain within the bounds.
    std::optional<int> pick_value(int i, const IntervalDomain& dom) const {
        const auto& values = inst.domains[static_cast<size_t>(i)].values();
        if (config.value_order == ValueOrder::Ascending) {
            auto it = std::lower_bound(values.begin(), values.end(), dom.lb);
            if (it == values.end() || *it > dom.ub) return std::nullopt;
            return *it;
        }
        auto it = std::upper_bound(values.begin(), values.end(), dom.ub);
        if (it == values.begin()) return std::nullopt;
        --it;
        if (*it < dom.lb) return std::nullopt;
        return *it;
    }

    bool all_fixed_valid(const Bounds& bounds, std::vector<int>& out) const {
        out.clear();
        for (int i = 0; i < inst.size(); ++i) {
            if (bounds[i].size() != 1) return false;
            out.push_back(bounds[i].lb);
        }
        return check_assignment(inst, out);
    }

    void run(Bounds bounds) {
        if (solution || limit_hit) return;
        if (++nodes > config.node_limit) {
            limit_hit = true;
            return;
        }
        PropagationOutcome outcome = propagate(std::move(bounds));
        if (outcome.failed) return;

        std::vector<int> fixed;
        bool any_open = false;
        for (int i = 0; i < inst.size(); ++i)
            if (outcome.bounds[i].size() > 1) {
                any_open = true;
                break;
            }
        if (!any_open) {
            if (all_fixed_valid(outcome.bounds, fixed)) solution = fixed;
            return; // fully fixed to invalid values (holes): dead branch
        }

        const int var = pick_variable(outcome.bounds);
        check_invariant(var >= 0, "open variable expected");
        const IntervalDomain dom = outcome.bounds[var];

        if (config.branching == Branching::Split) {
            const int mid = dom.lb + (dom.ub - dom.lb) / 2;
            Bounds left = outcome.bounds;
            Bounds right = outcome.bounds;
            if (config.value_order == ValueOrder::Ascending) {
                left[var] = {dom.lb, mid};
                right[var] = {mid + 1, dom.ub};
            } else {
                left[var] = {mid + 1, dom.ub};
                right[var] = {dom.lb, mid};
            }
            run(std::move(left));
            run(std::move(right));
            return;
        }

        const std::optional<int> value = pick_value(var, dom);
        if (!value) return; // no domain member inside the interval
        Bounds assign = outcome.bounds;
        assign[var] = {*value, *value};
        run(std::move(assign));
        Bounds rest = outcome.bounds;
        if (config.value_order == ValueOrder::Ascending) rest[var].lb = *value + 1;
        else rest[var].ub = *value - 1;
        if (!rest[var].empty()) run(std::move(rest));
    }
};

} // namespace

SearchResult solve(const Instance& inst, const SearchConfig& config) {
    SearchResult result;
    DecompEncoding encoding;
    Searcher searcher{inst, config, nullptr, 0, false, std::nullopt};
    if (config.route == Route::Decomposition) {
        encoding = encode(inst);
        searcher.encoding = &encoding;
    }
    searcher.run(initial_bounds(inst));
    result.nodes = searcher.nodes;
    if (searcher.solution) {
        result.status = SearchStatus::Sat;
        for (int v : *searcher.solution) result.solution.push_back(inst.denormalize(v));
    } else if (searcher.limit_hit) {
        result.status = SearchStatus::NodeLimit;
    } else {
        result.status = SearchStatus::Unsat;
    }
    return result;
}

std::optional<VarOrder> parse_var_order(const std::string& text) {
    if (text == "min-domain") return VarOrder::MinDomain;
    if (text == "lex") return VarOrder::Lex;
    if (text == "topological") return VarOrder::Topological;
    return std::nullopt;
}

std::optional<ValueOrder> parse_value_order(const std::string& text) {
    if (text == "ascending") return ValueOrder::Ascending;
    if (text == "descending") return ValueOrder::Descending;
    return std::nullopt;
}

std::optional<Route> parse_route(const std::string& text) {
    if (text == "fast") return Route::Fast;
    if (text == "reference") return Route::Reference;
    if (text == "decomp") return Route::Decomposition;
    if (text == "binary") return Route::Binary;
    return std::nullopt;
}

std::optional<Branching> parse_branching(const std::string& text) {
    if (text == "assign") return Branching::Assign;
    if (text == "split") return Branching::Split;
    return std::nullopt;
}

} // namespace adp
