#include "adp/bc_fast.hpp"

#include <algorithm>

#include "adp/bc_passes.hpp"
#include "adp/feasibility.hpp"

namespace adp {

IntervalUnionFind::IntervalUnionFind(int max_value) {
    check_invariant(max_value >= 1, "union-find universe must be non-empty");
    const size_t size = static_cast<size_t>(max_value) + 1;
    parent_.resize(size);
    size_.assign(size, 1);
    min_.resize(size);
    max_.resize(size);
    for (size_t x = 0; x < size; ++x) {
        parent_[x] = static_cast<int>(x);
        min_[x] = max_[x] = static_cast<int>(x);
    }
}

int IntervalUnionFind::find(int x) {
    check_invariant(x >= 1 && x < static_cast<int>(parent_.size()), "find out of universe");
    int root = x;
    while (parent_[static_cast<size_t>(root)] != root) root = parent_[static_cast<size_t>(root)];
    while (parent_[static_cast<size_t>(x)] != root) {
        int next = parent_[static_cast<size_t>(x)];
        parent_[static_cast<size_t>(x)] = root;
        x = next;
    }
    return root;
}

void IntervalUnionFind::unite_with_next(int x) {
    const int a = find(x);
    const int top = max_[static_cast<size_t>(a)];
    check_invariant(top + 1 < static_cast<int>(parent_.size()), "union past the universe");
    const int b = find(top + 1);
    check_invariant(min_[static_cast<size_t>(b)] == top + 1, "union must merge adjacent runs");
    int big = a, small = b;
    if (size_[static_cast<size_t>(big)] < size_[static_cast<size_t>(small)]) std::swap(big, small);
    parent_[static_cast<size_t>(small)] = big;
    size_[static_cast<size_t>(big)] += size_[static_cast<size_t>(small)];
    min_[static_cast<size_t>(big)] = std::min(min_[static_cast<size_t>(a)], min_[static_cast<size_t>(b)]);
    max_[static_cast<size_t>(big)] = std::max(max_[static_cast<size_t>(a)], max_[static_cast<size_t>(b)]);
}

namespace {

// Value availability over the full universe. Runs of the union-find are
// maximal stretches of claimed values plus the first unclaimed value above.
class FullAvailability {
public:
    explicit FullAvailability(int d) : d_(d), uf_(2 * d + 3) {}

    int next_avail(int x) { return uf_.set_max(x); }
    int run_min(int x) { return uf_.set_min(x); }

    // Consumes the smallest unclaimed value >= lb unless it overflows past d.
    int claim(int lb) {
        const int c = uf_.set_max(lb);
        if (c > d_) return c;
        uf_.unite_with_next(c);
        return c;
    }

    int universe_elements() const { return 0; } // not a compressed structure

private:
    int d_;
    IntervalUnionFind uf_;
};

// Availability compressed onto the distinct lower bounds: element k covers
// the value block [start_k, start_{k+1}); a counter tracks the consumed
// prefix and blocks merge upward only when full.
class CompressedAvailability {
public:
    CompressedAvailability(int d, const std::vector<int>& distinct_lbs) : d_(d) {
        starts_ = distinct_lbs;
        const int m = static_cast<int>(starts_.size());
        cap_.resize(static_cast<size_t>(m));
        used_.assign(static_cast<size_t>(m), 0);
        parent_.resize(static_cast<size_t>(m));
        min_block_.resize(static_cast<size_t>(m));
        max_block_.resize(static_cast<size_t>(m));
        for (int k = 0; k < m; ++k) {
            cap_[static_cast<size_t>(k)] =
                (k + 1 < m ? starts_[static_cast<size_t>(k) + 1] : d_ + 1) - starts_[static_cast<size_t>(k)];
            parent_[static_cast<size_t>(k)] = k;
            min_block_[static_cast<size_t>(k)] = max_block_[static_cast<size_t>(k)] = k;
        }
    }

    int next_avail(int x) {
        const int blk = block_of(x);
        if (blk < 0 || !value_claimed(x, blk)) return x;
        const int fb = max_block_[static_cast<size_t>(find(blk))];
        return starts_[static_cast<size_t>(fb)] + used_[static_cast<size_t>(fb)];
    }

    int run_min(int x) {
        const int blk = block_of(x);
        if (blk >= 0 && value_claimed(x, blk)) return stretch_start(blk);
        const int below = block_of(x - 1);
        if (below >= 0 && value_claimed(x - 1, below)) return stretch_start(below);
        return x;
    }

    int claim(int lb) {
        const int c = next_avail(lb);
        if (c > d_) return c;
        const int blk = block_of(c);
        check_invariant(blk >= 0 && starts_[static_cast<size_t>(blk)] + used_[static_cast<size_t>(blk)] == c,
                        "compressed claim must consume a block frontier");
        ++used_[static_cast<size_t>(blk)];
        if (used_[static_cast<size_t>(blk)] == cap_[static_cast<size_t>(blk)] &&
            blk + 1 < static_cast<int>(starts_.size()))
            unite(blk, blk + 1);
        return c;
    }

    int universe_elements() const { return static_cast<int>(starts_.size()) + 1; }

private:
    int block_of(int x) const {
        // Largest block with start <= x, -1 when x precedes every block.
        auto it = std::upper_bound(starts_.begin(), starts_.end(), x);
        return static_cast<int>(it - starts_.begin()) - 1;
    }

    bool value_claimed(int x, int blk) const {
        return x < starts_[static_cast<size_t>(blk)] + used_[static_cast<size_t>(blk)];
    }

    int stretch_start(int blk) {
        return starts_[static_cast<size_t>(min_block_[static_cast<size_t>(find(blk))])];
    }

    int find(int k) {
        int root = k;
        while (parent_[static_cast<size_t>(root)] != root) root = parent_[static_cast<size_t>(root)];
        while (parent_[static_cast<size_t>(k)] != root) {
            int next = parent_[static_cast<size_t>(k)];
            parent_[static_cast<size_t>(k)] = root;
            k = next;
        }
        return root;
    }

    void unite(int a, int b) {
        const int ra = find(a), rb = find(b);
        check_invariant(ra != rb, "compressed union on joined blocks");
        parent_[static_cast<size_t>(ra)] = rb;
        min_block_[static_cast<size_t>(rb)] =
            std::min(min_block_[static_cast<size_t>(ra)], min_block_[static_cast<size_t>(rb)]);
        max_block_[static_cast<size_t>(rb)] =
            std::max(max_block_[static_cast<size_t>(ra)], max_block_[static_cast<size_t>(rb)]);
    }

    int d_;
    std::vector<int> starts_;
    std::vector<int> cap_;
    std::vector<int> used_;
    std::vector<int> parent_;
    std::vector<int> min_block_;
    std::vector<int> max_block_;
};

struct SweepContext {
    const Instance& inst;
    bool reflected;
    int d;
    std::vector<IntervalDomain> doms; // snapshot, already reflected when needed
    const PropagateOptions& opts;

    bool in_succ(int i, int j) const {
        return reflected ? inst.graph.in_predecessors(i, j) : inst.graph.in_successors(i, j);
    }
    std::string var_name(int j) const { return "X" + std::to_string(j + 1); }
};

// One outer iteration of the sweep for variable i. Returns false on wipeout.
template <class Availability>
bool sweep_outer(SweepContext& ctx, int i, Availability& avail, int& new_ub) {
    const int n = static_cast<int>(ctx.doms.size());
    const int d = ctx.d;

    std::vector<int> order(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) order[static_cast<size_t>(j)] = j;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (ctx.doms[static_cast<size_t>(a)].ub != ctx.doms[static_cast<size_t>(b)].ub)
            return ctx.doms[static_cast<size_t>(a)].ub < ctx.doms[static_cast<size_t>(b)].ub;
        return a < b;
    });

    SweepStats::Outer outer_stats{i, 0, 0};
    std::vector<char> claimed(static_cast<size_t>(2 * d + 4), 0);
    const bool tracing = ctx.opts.trace && !ctx.reflected;
    if (tracing) ctx.opts.trace->push_back("outer " + ctx.var_name(i));

    int b = ctx.doms[static_cast<size_t>(order[0])].ub + 1;
    int last_claim = -1;
    int processed_succ = 0;
    new_ub = ctx.doms[static_cast<size_t>(i)].ub;
    bool ok = true;

    for (int pos = 0; pos < n && ok; ++pos) {
        const int j = order[static_cast<size_t>(pos)];
        const int b_before = b;
        const bool is_succ = (j != i) && ctx.in_succ(i, j);
        int claim_for_trace = -1;

        if (j == i) {
            if (tracing) claim_for_trace = avail.next_avail(ctx.doms[static_cast<size_t>(j)].lb);
        } else if (!is_succ) {
            const int c = avail.claim(ctx.doms[static_cast<size_t>(j)].lb);
            if (c > d || c > ctx.doms[static_cast<size_t>(j)].ub) return false; // no slot left
            claimed[static_cast<size_t>(c)] = 1;
            last_claim = c;
            claim_for_trace = c;
        } else {
            ++processed_succ;
        }

        if (pos > 0) {
            const int delta = ctx.doms[static_cast<size_t>(j)].ub -
                              ctx.doms[static_cast<size_t>(order[static_cast<size_t>(pos) - 1])].ub;
            for (int k = 0; k < delta; ++k) {
                b = avail.next_avail(b) + 1;
                ++outer_stats.forward_steps;
            }
            bool back = false;
            if (j == i) {
                back = false; // the probed variable consumes nothing
            } else if (is_succ) {
                back = true;
            } else if (last_claim >= 0 &&
                       (last_claim >= b_before ||
                        avail.next_avail(last_claim) == avail.next_avail(b))) {
                // The claim either consumed an available value the pointer
                // tracks (at or above the pre-forward position), or glued its
                // run to the pointer's run, which only normalizes downward.
                back = true;
            }
            if (back) {
                b = (b <= 1) ? 0 : avail.run_min(b - 1);
                ++outer_stats.backward_steps;
            }
        }

        // The violated interval reaches up to max(X_j); the clamp applies
        // only while the working upper bound lies within it. Above it the
        // removal would be an interior hole, invisible to a bounds store.
        std::string clamp_note;
        if (b - 1 < new_ub && new_ub <= ctx.doms[static_cast<size_t>(j)].ub) {
            new_ub = b - 1;
            if (tracing)
                clamp_note = " clamp ub(" + ctx.var_name(i) + ") -> " + std::to_string(new_ub);
            if (new_ub < ctx.doms[static_cast<size_t>(i)].lb) ok = false;
        }

        if (tracing) {
            std::string line = "step " + std::to_string(pos + 1) + " " + ctx.var_name(j) + " ";
            line += (j != i && is_succ) ? "succ" : ("claim " + std::to_string(claim_for_trace));
            line += " b " + std::to_string(b_before) + " -> " + std::to_string(b);
            line += clamp_note;
            ctx.opts.trace->push_back(line);
        }

        if (ctx.opts.audit && ok) {
            const int hi = ctx.doms[static_cast<size_t>(j)].ub; // half-open [b, hi+1)
            int avail_count = 0;
            for (int v = std::max(b, 1); v <= hi; ++v)
                if (!claimed[static_cast<size_t>(v)]) ++avail_count;
            check_invariant(avail_count == processed_succ,
                            "sweep pointer invariant: available values between the pointer and "
                            "the current upper bound must match processed successors");
            if (ctx.opts.stats) ++ctx.opts.stats->audit_checks;
        }
    }

    if (ctx.opts.stats) {
        check_invariant(outer_stats.forward_steps <= d, "forward pointer budget exceeded");
        check_invariant(outer_stats.backward_steps <= n, "backward pointer budget exceeded");
        ctx.opts.stats->outers.push_back(outer_stats);
        if (ctx.opts.mode == UniverseMode::Compressed)
            ctx.opts.stats->max_compressed_universe =
                std::max(ctx.opts.stats->max_compressed_universe, avail.universe_elements());
    }
    return ok;
}

PropagationOutcome run_sweep_pass(const Instance& inst, Bounds bounds, const PropagateOptions& opts,
                                  bool reflected) {
    const Bounds entry = bounds;
    if (bounds.failed()) return make_failure(std::move(bounds));
    const int n = inst.size();
    const int d = inst.universe_max;

    // All outer iterations read the pass-entry store, where AllDifferent and
    // precedence BC hold; clamps only write into the result. Cascades are
    // picked up by the next fixpoint round.
    SweepContext ctx{inst, reflected, d, {}, opts};
    ctx.doms.resize(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        ctx.doms[static_cast<size_t>(j)] =
            reflected ? IntervalDomain{d + 1 - entry[j].ub, d + 1 - entry[j].lb} : entry[j];

    std::vector<int> distinct_lbs;
    if (opts.mode == UniverseMode::Compressed) {
        for (const auto& dom : ctx.doms) distinct_lbs.push_back(dom.lb);
        std::sort(distinct_lbs.begin(), distinct_lbs.end());
        distinct_lbs.erase(std::unique(distinct_lbs.begin(), distinct_lbs.end()),
                           distinct_lbs.end());
    }

    for (int i = 0; i < n; ++i) {
        int new_ub = 0;
        bool ok;
        if (opts.mode == UniverseMode::Compressed) {
            CompressedAvailability avail(d, distinct_lbs);
            ok = sweep_outer(ctx, i, avail, new_ub);
        } else {
            FullAvailability avail(d);
            ok = sweep_outer(ctx, i, avail, new_ub);
        }
        if (!ok) {
            bounds[i] = {1, 0};
            return make_failure(std::move(bounds));
        }
        if (reflected) bounds[i].lb = std::max(bounds[i].lb, d + 1 - new_ub);
        else bounds[i].ub = std::min(bounds[i].ub, new_ub);
        if (bounds[i].empty()) return make_failure(std::move(bounds));
    }
    return make_outcome(entry, std::move(bounds));
}

} // namespace

PropagationOutcome prune_upper_bounds(const Instance& inst, Bounds bounds,
                                      const PropagateOptions& opts) {
    check_invariant(weak_edge_condition_holds(inst, bounds),
                    "prune_upper_bounds requires preprocessed bounds");
    return run_sweep_pass(inst, std::move(bounds), opts, false);
}

PropagationOutcome prune_lower_bounds(const Instance& inst, Bounds bounds,
                                      const PropagateOptions& opts) {
    check_invariant(weak_edge_condition_holds(inst, bounds),
                    "prune_lower_bounds requires preprocessed bounds");
    return run_sweep_pass(inst, std::move(bounds), opts, true);
}

PropagationOutcome propagate_bc(const Instance& inst, Bounds bounds,
                                const PropagateOptions& opts) {
    const Bounds entry = bounds;
    if (bounds.failed()) return make_failure(std::move(bounds));
    for (;;) {
        bool changed = false;
        // Each sweep assumes AllDifferent and precedence BC jointly hold, and
        // its own clamps can break them again for the next one.
        PassResult base = establish_alldiff_prec_bc(inst, bounds);
        changed |= base.changed;
        if (base.failed) return make_failure(std::move(bounds));

        PropagationOutcome up = run_sweep_pass(inst, bounds, opts, false);
        if (up.failed) return make_failure(std::move(up.bounds));
        changed |= !up.changes.empty();
        bounds = std::move(up.bounds);

        PassResult mid = establish_alldiff_prec_bc(inst, bounds);
        changed |= mid.changed;
        if (mid.failed) return make_failure(std::move(bounds));

        PropagationOutcome lo = run_sweep_pass(inst, bounds, opts, true);
        if (lo.failed) return make_failure(std::move(lo.bounds));
        changed |= !lo.changes.empty();
        bounds = std::move(lo.bounds);

        if (!changed) break;
    }
    return make_outcome(entry, std::move(bounds));
}

} // namespace adp
