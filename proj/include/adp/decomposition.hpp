#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "adp/core_model.hpp"

namespace adp {

enum class DecompConstraintKind {
    ChannelBil,     // B_il = 1  <->  X_i <= l
    ChannelAilu,    // A_ilu = 1 <->  B_i(l-1) = 0 and B_iu = 1
    IntervalSum,    // sum_i A_ilu <= u - l + 1
    SuccessorSum,   // sum_{j in S(i)} A_j1u + sum_{j not in S(i), j != i} A_jlu - B_i(l-1) <= u - l
    PredecessorSum, // mirrored with predecessors and intervals [l, d]
    StrictLess,     // X_i < X_j
};

struct DecompConstraint {
    DecompConstraintKind kind;
    int i = -1; // owning variable for channels and sums, edge source for StrictLess
    int l = 0;
    int u = 0;
    int j = -1;                  // edge target for StrictLess
    std::vector<int> positive;   // boolean ids with coefficient +1
    std::vector<int> negative;   // boolean ids with coefficient -1
    int rhs = 0;
};

/// Boolean relaxation of an instance: interval-occupancy Booleans plus
/// channeling, interval capacity sums and strict orders.
struct DecompEncoding {
    int n = 0;
    int d = 0;
    const Instance* instance = nullptr;
    int bool_count = 0;
    std::vector<DecompConstraint> constraints;
    std::vector<std::pair<int, int>> b_index;             // bool id -> (i, l)
    std::vector<int> b_ids;                               // (i, l) -> id, l in [1, d]
    int a_index_offset = 0;                               // first A id
    std::vector<std::tuple<int, int, int>> a_index;       // A id - offset -> (i, l, u)
    std::vector<std::vector<std::pair<int, int>>> a_ids;  // per i: sorted (l, u) keys
    std::vector<int> a_row_offsets;                       // per i: offset into A ids

    int b_id(int i, int l) const; // -1 when l == 0 (constant false)
    int a_id(int i, int l, int u) const;
};

DecompEncoding encode(const Instance& inst);

/// Boolean state at the fixpoint: -1 unknown, else the fixed value.
using BoolFixpoint = std::vector<signed char>;

/// BC fixpoint over the encoding with X bounds read back through the
/// channels.
PropagationOutcome propagate_decomposition(const DecompEncoding& enc, Bounds bounds,
                                           BoolFixpoint* bool_state = nullptr);

/// One constraint per line, for inspection and golden tests.
std::string dump_encoding(const DecompEncoding& enc);

} // namespace adp
