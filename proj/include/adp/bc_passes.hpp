#pragma once

#include "adp/core_model.hpp"

namespace adp {

struct PassResult {
    bool changed = false;
    bool failed = false;
};

/// Bounds consistency on the binary precedence constraints alone:
/// lb_j >= lb_i + 1 and ub_i <= ub_j - 1 for every closure edge (i, j).
PassResult precedence_bc_pass(const Instance& inst, Bounds& bounds);

/// Bounds consistency on the plain AllDifferent constraint via Hall-interval
/// sweeps over sorted bounds, run to its own fixpoint.
PassResult alldifferent_bc_pass(Bounds& bounds);

/// Joint fixpoint of the two passes above (the hypothesis required before
/// any per-bound support test).
PassResult establish_alldiff_prec_bc(const Instance& inst, Bounds& bounds);

/// The weak route: BC on the decomposition into AllDifferent plus binary
/// orders. Exists to demonstrate the propagation gap against the global
/// constraint routes.
PropagationOutcome propagate_binary_decomposition(const Instance& inst, Bounds bounds);

} // namespace adp
