#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adp/core_model.hpp"

namespace adp {

/// Disjoint sets over an integer range where unions only ever merge a set
/// with the set starting right after its maximum, so every set stays a
/// contiguous run of values.
class IntervalUnionFind {
public:
    explicit IntervalUnionFind(int max_value);

    int find(int x);
    int set_min(int x) { return min_[static_cast<size_t>(find(x))]; }
    int set_max(int x) { return max_[static_cast<size_t>(find(x))]; }

    /// Merges the set containing x with the adjacent set above it.
    void unite_with_next(int x);

    int max_value() const { return static_cast<int>(parent_.size()) - 1; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> min_;
    std::vector<int> max_;
};

enum class UniverseMode { FullUniverse, Compressed };

struct SweepStats {
    struct Outer {
        int var = 0;
        int forward_steps = 0;
        int backward_steps = 0;
    };
    std::vector<Outer> outers;     // one entry per outer sweep iteration
    int max_compressed_universe = 0; // elements in the compressed structure
    int64_t audit_checks = 0;
};

struct PropagateOptions {
    UniverseMode mode = UniverseMode::FullUniverse;
    bool audit = false;                      // re-derive the pointer invariant per step
    std::vector<std::string>* trace = nullptr; // inner-step log of upper-bound sweeps
    SweepStats* stats = nullptr;
};

/// One pass of the upper-bound sweep: for every variable, claims values for
/// unrelated variables in non-decreasing upper-bound order while a pointer
/// tracks where successor slots run out, clamping the variable's upper bound.
PropagationOutcome prune_upper_bounds(const Instance& inst, Bounds bounds,
                                      const PropagateOptions& opts = {});

/// Mirror pass pruning lower bounds (values reflected, predecessors take the
/// role of successors).
PropagationOutcome prune_lower_bounds(const Instance& inst, Bounds bounds,
                                      const PropagateOptions& opts = {});

/// Production fixpoint: precedence BC, AllDifferent BC, upper sweep, lower
/// sweep, round-robin until stable. Both universe modes reach identical
/// outcomes.
PropagationOutcome propagate_bc(const Instance& inst, Bounds bounds,
                                const PropagateOptions& opts = {});

} // namespace adp
