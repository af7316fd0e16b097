#pragma once

#include <optional>

#include "adp/core_model.hpp"

namespace adp {

/// Weak precedence preprocessing: raise minima forward and lower maxima
/// backward until min(X_i) <= min(X_j) and max(X_i) <= max(X_j) holds for
/// every closure edge (i, j). Failure when a domain empties.
PropagationOutcome preprocess_bounds(const Instance& inst, Bounds bounds);

bool weak_edge_condition_holds(const Instance& inst, const Bounds& bounds);

/// Greedy bound-support construction over preprocessed bounds. Values are
/// swept in increasing order; each value goes to the candidate with the
/// smallest upper bound, ties resolved toward a variable that succeeds no
/// other tied candidate, then toward the lowest index. Returns nullopt when
/// no bound support exists.
std::optional<std::vector<int>> greedy_bound_support(const Instance& inst, const Bounds& bounds);

/// Full feasibility test for a bound box: preprocess, then greedy.
bool feasible_in_box(const Instance& inst, const Bounds& bounds);

} // namespace adp
