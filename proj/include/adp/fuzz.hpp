#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "adp/applications.hpp"
#include "adp/core_model.hpp"

namespace adp {

struct FuzzParams {
    uint64_t seed = 1;
    int count = 1000;
    RandomInstanceParams instance;
    bool include_decomposition = false; // encoding is O(n d^2); keep d small
};

struct NamedRoute {
    std::string name;
    std::function<PropagationOutcome(const Instance&, Bounds)> run;
};

struct FuzzReport {
    int instances = 0;
    int discrepancies = 0;
    std::vector<std::string> details;

    bool clean() const { return discrepancies == 0; }
};

/// The standard routes: binary-search filter, interval-condition pruning,
/// the sweep propagator in both universe modes, optionally the Boolean
/// decomposition.
std::vector<NamedRoute> standard_routes(bool include_decomposition);

/// Runs every route on random instances and reports any fixpoint mismatch.
FuzzReport run_differential_fuzz(const FuzzParams& params,
                                 const std::vector<NamedRoute>& routes);
FuzzReport run_differential_fuzz(const FuzzParams& params);

/// Soundness against exhaustive enumeration: every pruned bound value has no
/// support within the entry box, every surviving bound has one at the
/// fixpoint.
FuzzReport run_bc_soundness_fuzz(const FuzzParams& params);

std::string describe_instance(const Instance& inst);

} // namespace adp
