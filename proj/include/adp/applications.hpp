#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "adp/core_model.hpp"

namespace adp {

struct RandomInstanceParams {
    int max_n = 7;
    int max_d = 9;
    double edge_probability = 0.3;
};

/// Random interval-domain instance with a random DAG (edges drawn on an
/// ordered pair set, then relabelled by a random permutation).
Instance random_instance(std::mt19937_64& rng, const RandomInstanceParams& params);

/// Single-machine unit-time schedule: one variable per instruction with
/// domain [1, n] (or the given release/due windows), one edge per dependency.
Instance gen_instruction_schedule(const std::vector<std::pair<int, int>>& dependencies,
                                  int n_instructions,
                                  const std::vector<std::pair<int, int>>& windows = {});

bool verify_schedule(const Instance& inst, const std::vector<int64_t>& slots,
                     const std::vector<std::pair<int, int>>& dependencies, int n_instructions);

/// Graceful labelling model of the triangular prism (two triangles joined by
/// a matching): vertex labels 0..9, all distinct, edge labels (absolute
/// differences) all distinct. First-occurrence index variables carry an
/// AllDiffPrec constraint with the published symmetry-breaking orders.
struct GracefulModel {
    int n_vertices = 6;
    int n_edges = 9;
    std::vector<std::pair<int, int>> graph_edges;    // vertex pairs
    std::vector<std::pair<int, int>> order_pairs;    // on first-occurrence variables
    Instance z_instance;                             // the AllDiffPrec component
};

GracefulModel gen_graceful_k3p2();

/// Depth-first search over vertex labels, pruned by the AllDiffPrec
/// propagation on the first-occurrence variables. Returns labels per vertex.
std::optional<std::vector<int>> solve_graceful(const GracefulModel& model);

bool verify_graceful(const GracefulModel& model, const std::vector<int>& labels);

} // namespace adp
