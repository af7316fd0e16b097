#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace adp {

class CycleError : public std::runtime_error {
public:
    explicit CycleError(const std::string& what) : std::runtime_error(what) {}
};

class EmptyDomainError : public std::runtime_error {
public:
    explicit EmptyDomainError(const std::string& what) : std::runtime_error(what) {}
};

class ExplosionError : public std::runtime_error {
public:
    explicit ExplosionError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal invariant check, active in all build types.
void check_invariant(bool ok, const char* what);

/// Interval view of a variable domain. lb > ub marks a failed (empty) domain.
struct IntervalDomain {
    int lb = 0;
    int ub = -1;

    bool empty() const { return lb > ub; }
    int size() const { return empty() ? 0 : ub - lb + 1; }
    bool contains(int v) const { return lb <= v && v <= ub; }
    bool operator==(const IntervalDomain&) const = default;
};

/// Explicit ordered value set; non-empty for a live domain.
class FiniteDomain {
public:
    FiniteDomain() = default;
    explicit FiniteDomain(std::vector<int> values);
    static FiniteDomain interval(int lb, int ub);

    const std::vector<int>& values() const { return values_; }
    int min() const { return values_.front(); }
    int max() const { return values_.back(); }
    int size() const { return static_cast<int>(values_.size()); }
    bool contains(int v) const;
    IntervalDomain interval_view() const { return {min(), max()}; }
    bool operator==(const FiniteDomain&) const = default;

private:
    std::vector<int> values_;
};

/// Per-variable interval bound store, the object every propagation route edits.
struct Bounds {
    std::vector<IntervalDomain> doms;

    int size() const { return static_cast<int>(doms.size()); }
    IntervalDomain& operator[](int i) { return doms[static_cast<size_t>(i)]; }
    const IntervalDomain& operator[](int i) const { return doms[static_cast<size_t>(i)]; }
    bool failed() const;
    bool operator==(const Bounds&) const = default;
};

/// Sorted distinct lower bounds (L) and upper bounds (U) of a store.
struct BoundsIndex {
    std::vector<int> lows;
    std::vector<int> highs;
};

BoundsIndex bounds_index(const Bounds& bounds);

enum class Side { Lower, Upper };

struct BoundChange {
    int var = 0;
    Side side = Side::Lower;
    int from = 0;
    int to = 0;
    bool operator==(const BoundChange&) const = default;
};

/// Result of a propagation route: Failure, or the fixpoint store plus the
/// bound changes relative to the entry store.
struct PropagationOutcome {
    bool failed = false;
    Bounds bounds;
    std::vector<BoundChange> changes;
};

PropagationOutcome make_outcome(const Bounds& entry, Bounds exit);
PropagationOutcome make_failure(Bounds partial);

/// DAG over variable indices with materialized transitive closures.
class PrecedenceGraph {
public:
    PrecedenceGraph() = default;
    PrecedenceGraph(int n, std::vector<std::pair<int, int>> edges,
                    std::vector<std::vector<int>> succ, std::vector<std::vector<int>> pred,
                    std::vector<int> topo_order);

    int size() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& successors(int i) const { return succ_[static_cast<size_t>(i)]; }
    const std::vector<int>& predecessors(int i) const { return pred_[static_cast<size_t>(i)]; }
    const std::vector<int>& topo_order() const { return topo_; }
    bool in_successors(int i, int j) const;   // j in S(i)
    bool in_predecessors(int i, int j) const; // j in P(i)

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> succ_;
    std::vector<std::vector<int>> pred_;
    std::vector<int> topo_;
    std::vector<uint64_t> succ_bits_;
    size_t words_ = 0;
};

/// Computes (S(i), P(i)) closures for an edge set, or throws CycleError.
std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>
transitive_closure(const std::vector<std::pair<int, int>>& edges, int n);

/// AllDiffPrec instance over a normalized value universe [1, d].
struct Instance {
    std::vector<FiniteDomain> domains; // normalized values
    PrecedenceGraph graph;
    int64_t value_offset = 0; // normalized = raw + offset
    int universe_max = 0;     // d

    int size() const { return static_cast<int>(domains.size()); }
    int64_t denormalize(int v) const { return static_cast<int64_t>(v) - value_offset; }
    int normalize(int64_t raw) const { return static_cast<int>(raw + value_offset); }
};

Instance build_instance(const std::vector<std::vector<int64_t>>& raw_domains,
                        const std::vector<std::pair<int, int>>& edges);

Bounds initial_bounds(const Instance& inst);

/// Independent solution checker: pairwise distinct, all precedence edges
/// strict, and every value a member of its variable's finite domain.
bool check_assignment(const Instance& inst, const std::vector<int>& values,
                      std::string* why = nullptr);

} // namespace adp
