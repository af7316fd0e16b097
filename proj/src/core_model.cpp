#include "adp/core_model.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

namespace adp {

void check_invariant(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("invariant violated: ") + what);
}

FiniteDomain::FiniteDomain(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty()) throw EmptyDomainError("finite domain must be non-empty");
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

FiniteDomain FiniteDomain::interval(int lb, int ub) {
    if (lb > ub) throw EmptyDomainError("interval domain must be non-empty");
    std::vector<int> vals;
    vals.reserve(static_cast<size_t>(ub - lb + 1));
    for (int v = lb; v <= ub; ++v) vals.push_back(v);
    return FiniteDomain(std::move(vals));
}

bool FiniteDomain::contains(int v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
}

bool Bounds::failed() const {
    for (const auto& d : doms)
        if (d.empty()) return true;
    return false;
}

BoundsIndex bounds_index(const Bounds& bounds) {
    BoundsIndex idx;
    idx.lows.reserve(bounds.doms.size());
    idx.highs.reserve(bounds.doms.size());
    for (const auto& d : bounds.doms) {
        idx.lows.push_back(d.lb);
        idx.highs.push_back(d.ub);
    }
    auto dedup = [](std::vector<int>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedup(idx.lows);
    dedup(idx.highs);
    return idx;
}

PropagationOutcome make_outcome(const Bounds& entry, Bounds exit) {
    PropagationOutcome out;
    out.failed = exit.failed();
    for (int i = 0; i < entry.size() && i < exit.size(); ++i) {
        if (exit[i].lb != entry[i].lb)
            out.changes.push_back({i, Side::Lower, entry[i].lb, exit[i].lb});
        if (exit[i].ub != entry[i].ub)
            out.changes.push_back({i, Side::Upper, entry[i].ub, exit[i].ub});
    }
    out.bounds = std::move(exit);
    return out;
}

PropagationOutcome make_failure(Bounds partial) {
    PropagationOutcome out;
    out.failed = true;
    out.bounds = std::move(partial);
    return out;
}

PrecedenceGraph::PrecedenceGraph(int n, std::vector<std::pair<int, int>> edges,
                                 std::vector<std::vector<int>> succ,
                                 std::vector<std::vector<int>> pred, std::vector<int> topo_order)
    : n_(n), edges_(std::move(edges)), succ_(std::move(succ)), pred_(std::move(pred)),
      topo_(std::move(topo_order)) {
    words_ = (static_cast<size_t>(n_) + 63) / 64;
    succ_bits_.assign(words_ * static_cast<size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
        for (int j : succ_[static_cast<size_t>(i)])
            succ_bits_[static_cast<size_t>(i) * words_ + static_cast<size_t>(j) / 64] |=
                (uint64_t{1} << (static_cast<size_t>(j) % 64));
}

bool PrecedenceGraph::in_successors(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) return false;
    return (succ_bits_[static_cast<size_t>(i) * words_ + static_cast<size_t>(j) / 64] >>
            (static_cast<size_t>(j) % 64)) &
           1;
}

bool PrecedenceGraph::in_predecessors(int i, int j) const { return in_successors(j, i); }

std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>
transitive_closure(const std::vector<std::pair<int, int>>& edges, int n) {
    if (n < 0) throw std::invalid_argument("negative variable count");
    std::vector<std::set<int>> direct(static_cast<size_t>(n));
    std::vector<int> indeg(static_cast<size_t>(n), 0);
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge index out of range");
        if (a == b) throw CycleError("self-loop makes the constraint unsatisfiable");
        if (direct[static_cast<size_t>(a)].insert(b).second) ++indeg[static_cast<size_t>(b)];
    }

    // Kahn topological sort; a leftover node means a directed cycle.
    std::vector<int> topo;
    topo.reserve(static_cast<size_t>(n));
    std::queue<int> ready;
    for (int i = 0; i < n; ++i)
        if (indeg[static_cast<size_t>(i)] == 0) ready.push(i);
    while (!ready.empty()) {
        int i = ready.front();
        ready.pop();
        topo.push_back(i);
        for (int j : direct[static_cast<size_t>(i)])
            if (--indeg[static_cast<size_t>(j)] == 0) ready.push(j);
    }
    if (static_cast<int>(topo.size()) != n)
        throw CycleError("precedence edges contain a directed cycle");

    const size_t words = (static_cast<size_t>(n) + 63) / 64;
    std::vector<uint64_t> reach(words * static_cast<size_t>(n), 0);
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int i = *it;
        auto* row = &reach[static_cast<size_t>(i) * words];
        for (int j : direct[static_cast<size_t>(i)]) {
            row[static_cast<size_t>(j) / 64] |= (uint64_t{1} << (static_cast<size_t>(j) % 64));
            const auto* sub = &reach[static_cast<size_t>(j) * words];
            for (size_t w = 0; w < words; ++w) row[w] |= sub[w];
        }
    }

    std::vector<std::vector<int>> succ(static_cast<size_t>(n)), pred(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((reach[static_cast<size_t>(i) * words + static_cast<size_t>(j) / 64] >>
                 (static_cast<size_t>(j) % 64)) &
                1) {
                succ[static_cast<size_t>(i)].push_back(j);
                pred[static_cast<size_t>(j)].push_back(i);
            }
    return {std::move(succ), std::move(pred)};
}

Instance build_instance(const std::vector<std::vector<int64_t>>& raw_domains,
                        const std::vector<std::pair<int, int>>& edges) {
    const int n = static_cast<int>(raw_domains.size());
    if (n == 0) throw std::invalid_argument("instance needs at least one variable");

    int64_t raw_min = std::numeric_limits<int64_t>::max();
    int64_t raw_max = std::numeric_limits<int64_t>::min();
    for (const auto& dom : raw_domains) {
        if (dom.empty()) throw EmptyDomainError("input domain is empty");
        for (int64_t v : dom) {
            raw_min = std::min(raw_min, v);
            raw_max = std::max(raw_max, v);
        }
    }
    if (raw_max - raw_min >= (int64_t{1} << 30))
        throw std::invalid_argument("value universe span too large");

    const int64_t offset = 1 - raw_min;
    Instance inst;
    inst.value_offset = offset;
    inst.domains.reserve(static_cast<size_t>(n));
    int d = 0;
    for (const auto& dom : raw_domains) {
        std::vector<int> norm;
        norm.reserve(dom.size());
        for (int64_t v : dom) norm.push_back(static_cast<int>(v + offset));
        FiniteDomain fd(std::move(norm));
        d = std::max(d, fd.max());
        inst.domains.push_back(std::move(fd));
    }
    inst.universe_max = d;

    auto [succ, pred] = transitive_closure(edges, n);

    // Recompute a topological order consistent with the closure.
    std::vector<int> indeg(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) indeg[static_cast<size_t>(i)] = static_cast<int>(pred[static_cast<size_t>(i)].size());
    std::queue<int> ready;
    for (int i = 0; i < n; ++i)
        if (indeg[static_cast<size_t>(i)] == 0) ready.push(i);
    std::vector<int> topo;
    topo.reserve(static_cast<size_t>(n));
    std::vector<int> remaining = indeg;
    while (!ready.empty()) {
        int i = ready.front();
        ready.pop();
        topo.push_back(i);
        for (int j : succ[static_cast<size_t>(i)])
            if (--remaining[static_cast<size_t>(j)] == 0) ready.push(j);
    }
    check_invariant(static_cast<int>(topo.size()) == n, "closure topological order incomplete");

    std::vector<std::pair<int, int>> dedup_edges(edges);
    std::sort(dedup_edges.begin(), dedup_edges.end());
    dedup_edges.erase(std::unique(dedup_edges.begin(), dedup_edges.end()), dedup_edges.end());

    inst.graph = PrecedenceGraph(n, std::move(dedup_edges), std::move(succ), std::move(pred),
                                 std::move(topo));
    return inst;
}

Bounds initial_bounds(const Instance& inst) {
    Bounds b;
    b.doms.reserve(inst.domains.size());
    for (const auto& d : inst.domains) b.doms.push_back(d.interval_view());
    return b;
}

bool check_assignment(const Instance& inst, const std::vector<int>& values, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (static_cast<int>(values.size()) != inst.size())
        return fail("assignment arity mismatch");
    for (int i = 0; i < inst.size(); ++i)
        if (!inst.domains[static_cast<size_t>(i)].contains(values[static_cast<size_t>(i)]))
            return fail("value outside domain of variable " + std::to_string(i));
    std::vector<int> sorted(values);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return fail("values not pairwise distinct");
    for (auto [a, b] : inst.graph.edges())
        if (!(values[static_cast<size_t>(a)] < values[static_cast<size_t>(b)]))
            return fail("precedence violated: " + std::to_string(a) + " < " + std::to_string(b));
    return true;
}

} // namespace adp
