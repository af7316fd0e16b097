#include "adp/dc_oracle.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <set>
#include <sstream>
#include <string>

namespace adp {

namespace {

struct Enumerator {
    const Instance& inst;
    const std::function<bool(const std::vector<int>&)>& visit;
    std::vector<int> assignment;
    std::vector<bool> used; // by normalized value
    bool stopped = false;

    Enumerator(const Instance& inst_, const std::function<bool(const std::vector<int>&)>& visit_)
        : inst(inst_), visit(visit_), assignment(static_cast<size_t>(inst_.size()), 0),
          used(static_cast<size_t>(inst_.universe_max) + 1, false) {}

    bool edge_ok(int i, int v) const {
        for (int p : inst.graph.predecessors(i))
            if (p < i && assignment[static_cast<size_t>(p)] >= v) return false;
        for (int s : inst.graph.successors(i))
            if (s < i && assignment[static_cast<size_t>(s)] <= v) return false;
        return true;
    }

    void run(int i) {
        if (stopped) return;
        if (i == inst.size()) {
            if (!visit(assignment)) stopped = true;
            return;
        }
        for (int v : inst.domains[static_cast<size_t>(i)].values()) {
            if (used[static_cast<size_t>(v)] || !edge_ok(i, v)) continue;
            used[static_cast<size_t>(v)] = true;
            assignment[static_cast<size_t>(i)] = v;
            run(i + 1);
            used[static_cast<size_t>(v)] = false;
            if (stopped) return;
        }
    }
};

} // namespace

void enumerate_supports(const Instance& inst,
                        const std::function<bool(const std::vector<int>&)>& visit, int64_t cap) {
    double product = 1.0;
    for (const auto& dom : inst.domains) product *= static_cast<double>(dom.size());
    if (product > static_cast<double>(cap))
        throw ExplosionError("domain-size product exceeds the enumeration cap");
    Enumerator e(inst, visit);
    e.run(0);
}

std::vector<std::vector<int>> collect_supports(const Instance& inst, int64_t cap) {
    std::vector<std::vector<int>> out;
    enumerate_supports(
        inst,
        [&](const std::vector<int>& a) {
            out.push_back(a);
            return true;
        },
        cap);
    return out;
}

bool has_support(const Instance& inst, int64_t cap) {
    bool found = false;
    enumerate_supports(
        inst,
        [&](const std::vector<int>&) {
            found = true;
            return false;
        },
        cap);
    return found;
}

std::optional<std::vector<FiniteDomain>> enforce_dc(const Instance& inst, int64_t cap) {
    std::vector<std::set<int>> seen(static_cast<size_t>(inst.size()));
    enumerate_supports(
        inst,
        [&](const std::vector<int>& a) {
            for (int i = 0; i < inst.size(); ++i) seen[static_cast<size_t>(i)].insert(a[static_cast<size_t>(i)]);
            return true;
        },
        cap);
    if (seen[0].empty()) return std::nullopt;
    std::vector<FiniteDomain> out;
    out.reserve(seen.size());
    for (auto& s : seen) out.push_back(FiniteDomain(std::vector<int>(s.begin(), s.end())));
    return out;
}

CnfFormula parse_dimacs(std::istream& in) {
    CnfFormula formula;
    int declared_clauses = -1;
    std::string line;
    std::vector<int> pending;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (line[0] == 'p') {
            std::string p, cnf;
            if (!(ls >> p >> cnf >> formula.num_vars >> declared_clauses) || cnf != "cnf")
                throw ParseError("malformed DIMACS header");
            continue;
        }
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (pending.size() != 3)
                    throw ParseError("every clause must have exactly 3 literals");
                formula.clauses.push_back({pending[0], pending[1], pending[2]});
                pending.clear();
            } else {
                pending.push_back(lit);
            }
        }
    }
    if (!pending.empty()) throw ParseError("clause not terminated by 0");
    if (declared_clauses < 0) throw ParseError("missing DIMACS header");
    if (static_cast<int>(formula.clauses.size()) != declared_clauses)
        throw ParseError("clause count does not match the header");
    for (const auto& clause : formula.clauses)
        for (int lit : clause) {
            const int var = std::abs(lit);
            if (var < 1 || var > formula.num_vars)
                throw ParseError("literal references an undeclared variable");
        }
    return formula;
}

bool truth_table_satisfiable(const CnfFormula& formula) {
    check_invariant(formula.num_vars <= 24, "truth-table oracle limited to small formulas");
    for (uint32_t m = 0; m < (uint32_t{1} << formula.num_vars); ++m) {
        bool all = true;
        for (const auto& clause : formula.clauses) {
            bool sat = false;
            for (int lit : clause) {
                const int var = std::abs(lit) - 1;
                const bool val = (m >> var) & 1;
                if ((lit > 0) == val) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

SatEncoding encode_3sat(const CnfFormula& formula) {
    const int n_vars = formula.num_vars;
    const int m = static_cast<int>(formula.clauses.size());
    if (n_vars < 1 || m < 1) throw ParseError("formula must have variables and clauses");
    for (const auto& clause : formula.clauses) {
        for (int lit : clause)
            for (int other : clause)
                if (lit == -other) throw ParseError("tautological clause not allowed");
    }

    // Variables are 1-based in the construction: truth pair X_{2i-1}, X_{2i}
    // for each proposition, then three literal variables per clause starting
    // at index 2N+1.
    std::vector<std::vector<int64_t>> domains(static_cast<size_t>(2 * n_vars + 3 * m));
    for (int i = 1; i <= n_vars; ++i) {
        const std::vector<int64_t> dom{i, static_cast<int64_t>(n_vars) + m + i};
        domains[static_cast<size_t>(2 * i - 2)] = dom;
        domains[static_cast<size_t>(2 * i - 1)] = dom;
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= m; ++i) {
        const auto& clause = formula.clauses[static_cast<size_t>(i - 1)];
        for (int t = 0; t < 3; ++t) {
            const int clause_var = 2 * n_vars + 3 * (i - 1) + t; // 0-based
            domains[static_cast<size_t>(clause_var)] = {
                static_cast<int64_t>(n_vars) + i,
                static_cast<int64_t>(2) * n_vars + m + 2 * i - 1,
                static_cast<int64_t>(2) * n_vars + m + 2 * i,
            };
            const int lit = clause[static_cast<size_t>(t)];
            // Positive literal x_j is indicated by X_{2j} = j, negative by
            // X_{2j-1} = j; the edge forces that truth variable low.
            const int truth_var = lit > 0 ? (2 * lit - 1) : (2 * (-lit) - 2); // 0-based
            edges.emplace_back(truth_var, clause_var);
        }
    }

    SatEncoding enc;
    enc.instance = build_instance(domains, edges);
    enc.num_vars = n_vars;
    enc.num_clauses = m;
    check_invariant(enc.instance.value_offset == 0, "reduction values start at 1 by design");
    check_invariant(dag_is_flat(enc.instance.graph), "reduction DAG must be flat");
    return enc;
}

bool dag_is_flat(const PrecedenceGraph& graph) {
    for (int i = 0; i < graph.size(); ++i)
        if (!graph.successors(i).empty() && !graph.predecessors(i).empty()) return false;
    return true;
}

} // namespace adp
