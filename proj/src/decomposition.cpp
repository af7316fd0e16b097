#include "adp/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <tuple>

namespace adp {

int DecompEncoding::b_id(int i, int l) const {
    if (l == 0) return -1; // X_i <= 0 is constant false
    check_invariant(l >= 1 && l <= d, "B index out of range");
    return b_ids[static_cast<size_t>(i) * static_cast<size_t>(d) + static_cast<size_t>(l - 1)];
}

int DecompEncoding::a_id(int i, int l, int u) const {
    const auto& row = a_ids[static_cast<size_t>(i)];
    auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(l, u),
                               [](const std::pair<int, int>& e, const std::pair<int, int>& k) {
                                   return e < k;
                               });
    check_invariant(it != row.end() && *it == std::make_pair(l, u), "A variable missing");
    return a_index_offset + static_cast<int>(it - row.begin()) + a_row_offsets[static_cast<size_t>(i)];
}

namespace {

std::vector<std::pair<int, int>> interval_set(int n, int d) {
    // Capped intervals plus the anchored families the sums reference.
    std::vector<std::pair<int, int>> iv;
    for (int l = 1; l <= d; ++l)
        for (int u = l; u <= d; ++u)
            if (u - l < n || l == 1 || u == d) iv.emplace_back(l, u);
    return iv;
}

} // namespace

DecompEncoding encode(const Instance& inst) {
    DecompEncoding enc;
    enc.n = inst.size();
    enc.d = inst.universe_max;
    enc.instance = &inst;
    const int n = enc.n;
    const int d = enc.d;

    enc.b_ids.assign(static_cast<size_t>(n) * static_cast<size_t>(d), -1);
    int next_id = 0;
    for (int i = 0; i < n; ++i)
        for (int l = 1; l <= d; ++l) {
            enc.b_ids[static_cast<size_t>(i) * static_cast<size_t>(d) + static_cast<size_t>(l - 1)] =
                next_id;
            enc.b_index.emplace_back(i, l);
            ++next_id;
        }
    enc.a_index_offset = next_id;

    const auto intervals = interval_set(n, d);
    enc.a_ids.resize(static_cast<size_t>(n));
    enc.a_row_offsets.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        enc.a_row_offsets[static_cast<size_t>(i)] = next_id - enc.a_index_offset;
        for (auto [l, u] : intervals) {
            enc.a_ids[static_cast<size_t>(i)].emplace_back(l, u);
            enc.a_index.emplace_back(i, l, u);
            ++next_id;
        }
    }
    enc.bool_count = next_id;

    // Channels.
    for (int i = 0; i < n; ++i)
        for (int l = 1; l <= d; ++l) {
            DecompConstraint c;
            c.kind = DecompConstraintKind::ChannelBil;
            c.i = i;
            c.l = l;
            c.positive = {enc.b_id(i, l)};
            enc.constraints.push_back(std::move(c));
        }
    for (int i = 0; i < n; ++i)
        for (auto [l, u] : intervals) {
            DecompConstraint c;
            c.kind = DecompConstraintKind::ChannelAilu;
            c.i = i;
            c.l = l;
            c.u = u;
            c.positive = {enc.a_id(i, l, u)};
            if (enc.b_id(i, l - 1) >= 0) c.negative = {enc.b_id(i, l - 1)};
            c.positive.push_back(enc.b_id(i, u));
            enc.constraints.push_back(std::move(c));
        }

    // Interval capacity over the capped family.
    for (auto [l, u] : intervals) {
        if (u - l >= n) continue;
        DecompConstraint c;
        c.kind = DecompConstraintKind::IntervalSum;
        c.l = l;
        c.u = u;
        c.rhs = u - l + 1;
        for (int i = 0; i < n; ++i) c.positive.push_back(enc.a_id(i, l, u));
        enc.constraints.push_back(std::move(c));
    }

    // Guarded capacity sums: when X_i lies inside [l, u], successors that can
    // only sit below u plus unrelated variables inside the interval must fit
    // in the remaining u - l slots; mirrored for predecessors.
    for (int i = 0; i < n; ++i) {
        const auto& succ = inst.graph.successors(i);
        const auto& pred = inst.graph.predecessors(i);
        for (auto [l, u] : intervals) {
            if (u - l >= n) continue;
            if (!succ.empty()) {
                DecompConstraint c;
                c.kind = DecompConstraintKind::SuccessorSum;
                c.i = i;
                c.l = l;
                c.u = u;
                c.rhs = u - l;
                for (int j : succ) c.positive.push_back(enc.a_id(j, 1, u));
                for (int j = 0; j < n; ++j)
                    if (j != i && !inst.graph.in_successors(i, j))
                        c.positive.push_back(enc.a_id(j, l, u));
                if (enc.b_id(i, l - 1) >= 0) c.negative.push_back(enc.b_id(i, l - 1));
                c.negative.push_back(enc.b_id(i, u));
                enc.constraints.push_back(std::move(c));
            }
            if (!pred.empty()) {
                DecompConstraint c;
                c.kind = DecompConstraintKind::PredecessorSum;
                c.i = i;
                c.l = l;
                c.u = u;
                c.rhs = u - l;
                for (int j : pred) c.positive.push_back(enc.a_id(j, l, d));
                for (int j = 0; j < n; ++j)
                    if (j != i && !inst.graph.in_predecessors(i, j))
                        c.positive.push_back(enc.a_id(j, l, u));
                if (enc.b_id(i, l - 1) >= 0) c.negative.push_back(enc.b_id(i, l - 1));
                c.negative.push_back(enc.b_id(i, u));
                enc.constraints.push_back(std::move(c));
            }
        }
    }

    for (auto [a, b] : inst.graph.edges()) {
        DecompConstraint c;
        c.kind = DecompConstraintKind::StrictLess;
        c.i = a;
        c.j = b;
        enc.constraints.push_back(std::move(c));
    }
    // Closure pairs beyond the direct edges.
    for (int i = 0; i < n; ++i)
        for (int j : inst.graph.successors(i)) {
            bool direct = false;
            for (auto [a, b] : inst.graph.edges())
                if (a == i && b == j) {
                    direct = true;
                    break;
                }
            if (!direct) {
                DecompConstraint c;
                c.kind = DecompConstraintKind::StrictLess;
                c.i = i;
                c.j = j;
                enc.constraints.push_back(std::move(c));
            }
        }
    return enc;
}

namespace {

struct BoolDom {
    signed char lb = 0;
    signed char ub = 1;
    bool fixed() const { return lb == ub; }
};

class Engine {
public:
    Engine(const DecompEncoding& enc, Bounds bounds)
        : enc_(enc), x_(std::move(bounds)), bools_(static_cast<size_t>(enc.bool_count)) {
        bool_watch_.resize(static_cast<size_t>(enc_.bool_count));
        x_watch_.resize(static_cast<size_t>(enc_.n));
        for (size_t c = 0; c < enc_.constraints.size(); ++c) {
            const auto& con = enc_.constraints[c];
            for (int b : con.positive) bool_watch_[static_cast<size_t>(b)].push_back(static_cast<int>(c));
            for (int b : con.negative) bool_watch_[static_cast<size_t>(b)].push_back(static_cast<int>(c));
            if (con.kind == DecompConstraintKind::ChannelBil ||
                con.kind == DecompConstraintKind::StrictLess) {
                x_watch_[static_cast<size_t>(con.i)].push_back(static_cast<int>(c));
                if (con.kind == DecompConstraintKind::StrictLess)
                    x_watch_[static_cast<size_t>(con.j)].push_back(static_cast<int>(c));
            }
        }
        in_queue_.assign(enc_.constraints.size(), true);
        for (size_t c = 0; c < enc_.constraints.size(); ++c) queue_.push_back(static_cast<int>(c));
    }

    bool run() {
        while (!queue_.empty()) {
            const int c = queue_.front();
            queue_.pop_front();
            in_queue_[static_cast<size_t>(c)] = false;
            if (!filter(enc_.constraints[static_cast<size_t>(c)])) return false;
        }
        return true;
    }

    Bounds take_bounds() { return std::move(x_); }

    BoolFixpoint bool_state() const {
        BoolFixpoint state(bools_.size(), -1);
        for (size_t b = 0; b < bools_.size(); ++b)
            if (bools_[b].fixed()) state[b] = bools_[b].lb;
        return state;
    }

private:
    void wake_bool(int b) {
        for (int c : bool_watch_[static_cast<size_t>(b)]) enqueue(c);
    }
    void wake_x(int i) {
        for (int c : x_watch_[static_cast<size_t>(i)]) enqueue(c);
    }
    void enqueue(int c) {
        if (!in_queue_[static_cast<size_t>(c)]) {
            in_queue_[static_cast<size_t>(c)] = true;
            queue_.push_back(c);
        }
    }

    bool set_bool(int id, bool value) {
        auto& b = bools_[static_cast<size_t>(id)];
        if (value) {
            if (b.ub == 0) return fail();
            if (b.lb == 0) {
                b.lb = 1;
                wake_bool(id);
            }
        } else {
            if (b.lb == 1) return fail();
            if (b.ub == 1) {
                b.ub = 0;
                wake_bool(id);
            }
        }
        return true;
    }

    bool raise_lb(int i, int v) {
        if (v > x_[i].lb) {
            x_[i].lb = v;
            if (x_[i].empty()) return fail();
            wake_x(i);
        }
        return true;
    }

    bool lower_ub(int i, int v) {
        if (v < x_[i].ub) {
            x_[i].ub = v;
            if (x_[i].empty()) return fail();
            wake_x(i);
        }
        return true;
    }

    bool fail() {
        failed_ = true;
        queue_.clear();
        return false;
    }

    // value of a possibly-constant boolean id: -1 unknown, 0, 1
    int bval(int id) const {
        if (id < 0) return 0; // B_{i,0} is constant false
        const auto& b = bools_[static_cast<size_t>(id)];
        return b.fixed() ? b.lb : -1;
    }

    bool filter(const DecompConstraint& con) {
        switch (con.kind) {
        case DecompConstraintKind::ChannelBil: {
            const int id = con.positive[0];
            const int i = con.i, l = con.l;
            if (x_[i].ub <= l && !set_bool(id, true)) return false;
            if (x_[i].lb > l && !set_bool(id, false)) return false;
            if (bval(id) == 1 && !lower_ub(i, l)) return false;
            if (bval(id) == 0 && !raise_lb(i, l + 1)) return false;
            return true;
        }
        case DecompConstraintKind::ChannelAilu: {
            const int a = con.positive[0];
            const int bu = con.positive[1];
            const int bl = con.negative.empty() ? -1 : con.negative[0];
            // A = 1  <->  Bl = 0 and Bu = 1
            if (bval(a) == 1) {
                if (bl >= 0 && !set_bool(bl, false)) return false;
                if (!set_bool(bu, true)) return false;
            }
            if (bval(bl) == 1 && !set_bool(a, false)) return false;
            if (bval(bu) == 0 && !set_bool(a, false)) return false;
            if (bval(bl) == 0 && bval(bu) == 1 && !set_bool(a, true)) return false;
            if (bval(a) == 0) {
                if (bval(bl) == 0 && !set_bool(bu, false)) return false;
                if (bval(bu) == 1 && bl >= 0 && !set_bool(bl, true)) return false;
            }
            return true;
        }
        case DecompConstraintKind::IntervalSum: {
            int forced = 0;
            for (int a : con.positive)
                if (bools_[static_cast<size_t>(a)].lb == 1) ++forced;
            if (forced > con.rhs) return fail();
            if (forced == con.rhs) {
                for (int a : con.positive) {
                    const auto& b = bools_[static_cast<size_t>(a)];
                    if (b.lb == 0 && b.ub == 1 && !set_bool(a, false)) return false;
                }
            }
            return true;
        }
        case DecompConstraintKind::SuccessorSum:
        case DecompConstraintKind::PredecessorSum: {
            // sum(A) <= rhs + n * B_{i,l-1} + n * (1 - B_{i,u}):
            // the capacity argument only binds when X_i lies inside [l, u].
            const int bl = con.negative.size() == 2 ? con.negative[0] : -1;
            const int bu = con.negative.back();
            int forced = 0;
            for (int a : con.positive)
                if (bools_[static_cast<size_t>(a)].lb == 1) ++forced;
            const int excess = forced - con.rhs; // violation when the guard holds
            if (excess > 0) {
                // X_i cannot lie inside [l, u]: Bl = 1 or Bu = 0.
                if (bval(bl) == 0 && !set_bool(bu, false)) return false;
                if (bval(bu) == 1) {
                    if (bl < 0) return fail();
                    if (!set_bool(bl, true)) return false;
                }
            }
            if (excess == 0 && bval(bl) == 0 && bval(bu) == 1) {
                // Guard holds and the interval is saturated: no further
                // variable of the family may enter it.
                for (int a : con.positive) {
                    const auto& b = bools_[static_cast<size_t>(a)];
                    if (b.lb == 0 && b.ub == 1 && !set_bool(a, false)) return false;
                }
            }
            return true;
        }
        case DecompConstraintKind::StrictLess: {
            if (!raise_lb(con.j, x_[con.i].lb + 1)) return false;
            if (!lower_ub(con.i, x_[con.j].ub - 1)) return false;
            return true;
        }
        }
        return true;
    }

    const DecompEncoding& enc_;
    Bounds x_;
    std::vector<BoolDom> bools_;
    std::vector<std::vector<int>> bool_watch_;
    std::vector<std::vector<int>> x_watch_;
    std::deque<int> queue_;
    std::vector<bool> in_queue_;
    bool failed_ = false;
};

} // namespace

PropagationOutcome propagate_decomposition(const DecompEncoding& enc, Bounds bounds,
                                           BoolFixpoint* bool_state) {
    const Bounds entry = bounds;
    if (bounds.failed()) return make_failure(std::move(bounds));
    Engine engine(enc, std::move(bounds));
    const bool ok = engine.run();
    if (bool_state) *bool_state = engine.bool_state();
    if (!ok) return make_failure(engine.take_bounds());
    return make_outcome(entry, engine.take_bounds());
}

std::string dump_encoding(const DecompEncoding& enc) {
    std::ostringstream out;
    auto bool_name = [&](int id) -> std::string {
        if (id < 0) return "0";
        if (id < enc.a_index_offset) {
            auto [i, l] = enc.b_index[static_cast<size_t>(id)];
            return "B(" + std::to_string(i + 1) + "," + std::to_string(l) + ")";
        }
        auto [i, l, u] = enc.a_index[static_cast<size_t>(id - enc.a_index_offset)];
        return "A(" + std::to_string(i + 1) + "," + std::to_string(l) + "," + std::to_string(u) +
               ")";
    };
    for (const auto& c : enc.constraints) {
        switch (c.kind) {
        case DecompConstraintKind::ChannelBil:
            out << bool_name(c.positive[0]) << " <=> X" << c.i + 1 << "<=" << c.l << "\n";
            break;
        case DecompConstraintKind::ChannelAilu:
            out << bool_name(c.positive[0]) << " <=> X" << c.i + 1 << " in [" << c.l << "," << c.u
                << "]\n";
            break;
        case DecompConstraintKind::IntervalSum: {
            out << "sum";
            for (int a : c.positive) out << " " << bool_name(a);
            out << " <= " << c.rhs << "\n";
            break;
        }
        case DecompConstraintKind::SuccessorSum:
        case DecompConstraintKind::PredecessorSum: {
            out << (c.kind == DecompConstraintKind::SuccessorSum ? "succsum X" : "predsum X")
                << c.i + 1 << " [" << c.l << "," << c.u << "]:";
            for (int a : c.positive) out << " " << bool_name(a);
            out << " <= " << c.rhs << " unless X" << c.i + 1 << " outside\n";
            break;
        }
        case DecompConstraintKind::StrictLess:
            out << "X" << c.i + 1 << " < X" << c.j + 1 << "\n";
            break;
        }
    }
    return out.str();
}

} // namespace adp
