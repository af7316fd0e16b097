#include "adp/applications.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "adp/bc_fast.hpp"

namespace adp {

Instance random_instance(std::mt19937_64& rng, const RandomInstanceParams& params) {
    std::uniform_int_distribution<int> n_dist(1, params.max_n);
    std::uniform_int_distribution<int> d_dist(1, params.max_d);
    const int n = n_dist(rng);
    const int d = d_dist(rng);

    std::vector<std::vector<int64_t>> domains(static_cast<size_t>(n));
    std::uniform_int_distribution<int> val(1, d);
    for (auto& dom : domains) {
        int lo = val(rng), hi = val(rng);
        if (lo > hi) std::swap(lo, hi);
        for (int v = lo; v <= hi; ++v) dom.push_back(v);
    }

    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::bernoulli_distribution edge(params.edge_probability);
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (edge(rng)) edges.emplace_back(perm[static_cast<size_t>(a)], perm[static_cast<size_t>(b)]);
    return build_instance(domains, edges);
}

Instance gen_instruction_schedule(const std::vector<std::pair<int, int>>& dependencies,
                                  int n_instructions,
                                  const std::vector<std::pair<int, int>>& windows) {
    check_invariant(n_instructions >= 1, "schedule needs at least one instruction");
    check_invariant(windows.empty() || static_cast<int>(windows.size()) == n_instructions,
                    "one window per instruction");
    std::vector<std::vector<int64_t>> domains(static_cast<size_t>(n_instructions));
    for (int i = 0; i < n_instructions; ++i) {
        const int lo = windows.empty() ? 1 : windows[static_cast<size_t>(i)].first;
        const int hi = windows.empty() ? n_instructions : windows[static_cast<size_t>(i)].second;
        for (int v = lo; v <= hi; ++v) domains[static_cast<size_t>(i)].push_back(v);
    }
    return build_instance(domains, dependencies);
}

bool verify_schedule(const Instance& inst, const std::vector<int64_t>& slots,
                     const std::vector<std::pair<int, int>>& dependencies, int n_instructions) {
    if (static_cast<int>(slots.size()) != n_instructions) return false;
    std::set<int64_t> distinct(slots.begin(), slots.end());
    if (static_cast<int>(distinct.size()) != n_instructions) return false;
    for (auto [a, b] : dependencies)
        if (!(slots[static_cast<size_t>(a)] < slots[static_cast<size_t>(b)])) return false;
    std::vector<int> norm;
    norm.reserve(slots.size());
    for (int64_t s : slots) norm.push_back(inst.normalize(s));
    return check_assignment(inst, norm);
}

GracefulModel gen_graceful_k3p2() {
    GracefulModel model;
    // Triangular prism: triangle 0-1-2, triangle 3-4-5, rungs i -- i+3.
    model.graph_edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                         {0, 3}, {1, 4}, {2, 5}};
    model.order_pairs = {{0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 2}};

    // First-occurrence variable for value j: an index in 1..6, or the
    // distinct sentinel 7+j when the value goes unused.
    const int values = model.n_edges + 1; // labels 0..9
    std::vector<std::vector<int64_t>> z_domains(static_cast<size_t>(values));
    for (int j = 0; j < values; ++j) {
        for (int idx = 1; idx <= model.n_vertices; ++idx)
            z_domains[static_cast<size_t>(j)].push_back(idx);
        z_domains[static_cast<size_t>(j)].push_back(model.n_vertices + 1 + j);
    }
    model.z_instance = build_instance(z_domains, model.order_pairs);
    return model;
}

namespace {

struct GracefulSearch {
    const GracefulModel& model;
    std::vector<int> labels;       // -1 unassigned
    std::vector<bool> label_used;  // 0..9
    std::vector<bool> diff_used;   // 1..9
    std::optional<std::vector<int>> solution;

    explicit GracefulSearch(const GracefulModel& m)
        : model(m), labels(static_cast<size_t>(m.n_vertices), -1),
          label_used(static_cast<size_t>(m.n_edges) + 1, false),
          diff_used(static_cast<size_t>(m.n_edges) + 1, false) {}

    bool z_prune_ok() const {
        // Bounds for the first-occurrence variables under the partial
        // labelling, pushed through the AllDiffPrec propagator.
        Bounds z = initial_bounds(model.z_instance);
        int first_free = model.n_vertices + 1;
        for (int idx = 0; idx < model.n_vertices; ++idx)
            if (labels[static_cast<size_t>(idx)] < 0) {
                first_free = idx + 1;
                break;
            }
        for (int j = 0; j <= model.n_edges; ++j) {
            const int norm_lo = model.z_instance.normalize(first_free);
            auto& dom = z[j];
            if (label_used[static_cast<size_t>(j)]) {
                for (int idx = 0; idx < model.n_vertices; ++idx)
                    if (labels[static_cast<size_t>(idx)] == j) {
                        const int v = model.z_instance.normalize(idx + 1);
                        dom = {v, v};
                        break;
                    }
            } else {
                dom.lb = std::max(dom.lb, norm_lo);
            }
        }
        return !propagate_bc(model.z_instance, std::move(z)).failed;
    }

    bool edges_ok(int vertex) const {
        for (auto [a, b] : model.graph_edges) {
            if (a != vertex && b != vertex) continue;
            const int other = a == vertex ? b : a;
            if (labels[static_cast<size_t>(other)] < 0) continue;
            const int diff =
                std::abs(labels[static_cast<size_t>(vertex)] - labels[static_cast<size_t>(other)]);
            if (diff == 0) return false;
        }
        return true;
    }

    bool mark_diffs(int vertex, std::vector<int>& marked) {
        for (auto [a, b] : model.graph_edges) {
            if (a != vertex && b != vertex) continue;
            const int other = a == vertex ? b : a;
            if (labels[static_cast<size_t>(other)] < 0) continue;
            const int diff =
                std::abs(labels[static_cast<size_t>(vertex)] - labels[static_cast<size_t>(other)]);
            if (diff == 0 || diff_used[static_cast<size_t>(diff)]) return false;
            diff_used[static_cast<size_t>(diff)] = true;
            marked.push_back(diff);
        }
        return true;
    }

    void run(int vertex) {
        if (solution) return;
        if (vertex == model.n_vertices) {
            std::vector<int> result(labels.begin(), labels.end());
            if (verify_graceful(model, result)) solution = result;
            return;
        }
        for (int value = 0; value <= model.n_edges && !solution; ++value) {
            if (label_used[static_cast<size_t>(value)]) continue;
            labels[static_cast<size_t>(vertex)] = value;
            label_used[static_cast<size_t>(value)] = true;
            std::vector<int> marked;
            if (mark_diffs(vertex, marked) && z_prune_ok()) run(vertex + 1);
            for (int diff : marked) diff_used[static_cast<size_t>(diff)] = false;
            labels[static_cast<size_t>(vertex)] = -1;
            label_used[static_cast<size_t>(value)] = false;
        }
    }
};

} // namespace

std::optional<std::vector<int>> solve_graceful(const GracefulModel& model) {
    GracefulSearch search(model);
    search.run(0);
    return search.solution;
}

bool verify_graceful(const GracefulModel& model, const std::vector<int>& labels) {
    if (static_cast<int>(labels.size()) != model.n_vertices) return false;
    std::set<int> distinct;
    for (int v : labels) {
        if (v < 0 || v > model.n_edges) return false;
        distinct.insert(v);
    }
    if (static_cast<int>(distinct.size()) != model.n_vertices) return false;
    std::set<int> diffs;
    for (auto [a, b] : model.graph_edges) {
        const int diff = std::abs(labels[static_cast<size_t>(a)] - labels[static_cast<size_t>(b)]);
        if (diff == 0 || !diffs.insert(diff).second) return false;
    }

    // First occurrence of value j, or the sentinel when unused.
    auto z_of = [&](int j) {
        for (int idx = 0; idx < model.n_vertices; ++idx)
            if (labels[static_cast<size_t>(idx)] == j) return idx + 1;
        return model.n_vertices + 1 + j;
    };
    for (auto [a, b] : model.order_pairs)
        if (!(z_of(a) < z_of(b))) return false;
    return true;
}

} // namespace adp
