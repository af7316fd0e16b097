#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adp/core_model.hpp"

namespace adp {

enum class VarOrder { MinDomain, Lex, Topological };
enum class ValueOrder { Ascending, Descending };
enum class Route { Fast, Reference, Decomposition, Binary };
enum class Branching { Assign, Split };

struct SearchConfig {
    VarOrder var_order = VarOrder::MinDomain;
    ValueOrder value_order = ValueOrder::Ascending;
    Route route = Route::Fast;
    Branching branching = Branching::Assign;
    int64_t node_limit = 1'000'000;
    uint64_t seed = 0; // reserved for randomized heuristics; fixed seed = deterministic run
};

enum class SearchStatus { Sat, Unsat, NodeLimit };

struct SearchResult {
    SearchStatus status = SearchStatus::Unsat;
    std::vector<int64_t> solution; // raw values when Sat
    int64_t nodes = 0;
};

/// Depth-first search with propagation at every node; assignments returned
/// only after passing the independent checker.
SearchResult solve(const Instance& inst, const SearchConfig& config);

std::optional<VarOrder> parse_var_order(const std::string& text);
std::optional<ValueOrder> parse_value_order(const std::string& text);
std::optional<Route> parse_route(const std::string& text);
std::optional<Branching> parse_branching(const std::string& text);

} // namespace adp
