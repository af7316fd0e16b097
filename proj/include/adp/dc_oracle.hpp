#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "adp/core_model.hpp"

namespace adp {

constexpr int64_t kDefaultEnumerationCap = 10'000'000;

/// Backtracking enumeration of every full assignment satisfying pairwise
/// difference and all strict edges. The visitor returns false to stop early.
/// Throws ExplosionError when the domain-size product exceeds the cap.
void enumerate_supports(const Instance& inst,
                        const std::function<bool(const std::vector<int>&)>& visit,
                        int64_t cap = kDefaultEnumerationCap);

std::vector<std::vector<int>> collect_supports(const Instance& inst,
                                               int64_t cap = kDefaultEnumerationCap);

bool has_support(const Instance& inst, int64_t cap = kDefaultEnumerationCap);

/// Domain consistency by exhaustion: each domain reduced to the values that
/// appear in some support; nullopt when no support exists.
std::optional<std::vector<FiniteDomain>> enforce_dc(const Instance& inst,
                                                    int64_t cap = kDefaultEnumerationCap);

/// A 3-CNF formula; literals are +-(1-based variable index), three per clause.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;
};

CnfFormula parse_dimacs(std::istream& in);

/// Truth-table satisfiability check (reference oracle for the reduction).
bool truth_table_satisfiable(const CnfFormula& formula);

struct SatEncoding {
    Instance instance;
    int num_vars = 0;    // N
    int num_clauses = 0; // M
};

/// Encodes 3-SAT as AllDiffPrec: truth variables X_{2i-1}, X_{2i} share
/// {i, N+M+i}; the three literal variables of clause i share
/// {N+i, 2N+M+2i-1, 2N+M+2i}; each literal adds one edge from its matching
/// truth variable. The encoding has a support iff the formula is satisfiable.
SatEncoding encode_3sat(const CnfFormula& formula);

/// The reduction's DAG is flat: no variable both receives and emits an edge.
bool dag_is_flat(const PrecedenceGraph& graph);

} // namespace adp
