#include "adp/fuzz.hpp"

#include <sstream>

#include "adp/bc_fast.hpp"
#include "adp/bc_reference.hpp"
#include "adp/dc_oracle.hpp"
#include "adp/decomposition.hpp"

namespace adp {

std::vector<NamedRoute> standard_routes(bool include_decomposition) {
    std::vector<NamedRoute> routes;
    routes.push_back({"binary-search", [](const Instance& inst, Bounds b) {
                          return filter_binary_search(inst, std::move(b));
                      }});
    routes.push_back({"conditions", [](const Instance& inst, Bounds b) {
                          return conditions_prune(inst, std::move(b));
                      }});
    routes.push_back({"sweep-full", [](const Instance& inst, Bounds b) {
                          PropagateOptions opts;
                          opts.mode = UniverseMode::FullUniverse;
                          return propagate_bc(inst, std::move(b), opts);
                      }});
    routes.push_back({"sweep-compressed", [](const Instance& inst, Bounds b) {
                          PropagateOptions opts;
                          opts.mode = UniverseMode::Compressed;
                          return propagate_bc(inst, std::move(b), opts);
                      }});
    if (include_decomposition)
        routes.push_back({"decomposition", [](const Instance& inst, Bounds b) {
                              return propagate_decomposition(encode(inst), std::move(b));
                          }});
    return routes;
}

std::string describe_instance(const Instance& inst) {
    std::ostringstream out;
    out << "n=" << inst.size() << " d=" << inst.universe_max << " doms:";
    for (const auto& dom : inst.domains) out << " [" << dom.min() << "," << dom.max() << "]";
    out << " edges:";
    for (auto [a, b] : inst.graph.edges()) out << " (" << a + 1 << "," << b + 1 << ")";
    return out.str();
}

namespace {

std::string outcome_text(const PropagationOutcome& outcome) {
    if (outcome.failed) return "FAIL";
    std::ostringstream out;
    for (const auto& dom : outcome.bounds.doms) out << " [" << dom.lb << "," << dom.ub << "]";
    return out.str();
}

} // namespace

FuzzReport run_differential_fuzz(const FuzzParams& params, const std::vector<NamedRoute>& routes) {
    FuzzReport report;
    std::mt19937_64 rng(params.seed);
    for (int k = 0; k < params.count; ++k) {
        const Instance inst = random_instance(rng, params.instance);
        const Bounds entry = initial_bounds(inst);
        ++report.instances;

        std::vector<PropagationOutcome> outcomes;
        outcomes.reserve(routes.size());
        for (const auto& route : routes) outcomes.push_back(route.run(inst, entry));

        for (size_t r = 1; r < routes.size(); ++r) {
            const bool same_fail = outcomes[r].failed == outcomes[0].failed;
            const bool same_bounds =
                outcomes[r].failed || outcomes[0].failed || outcomes[r].bounds == outcomes[0].bounds;
            if (!(same_fail && same_bounds)) {
                ++report.discrepancies;
                std::ostringstream msg;
                msg << "instance " << k << " (" << describe_instance(inst) << "): "
                    << routes[0].name << " ->" << outcome_text(outcomes[0]) << " but "
                    << routes[r].name << " ->" << outcome_text(outcomes[r]);
                report.details.push_back(msg.str());
            }
        }
    }
    return report;
}

FuzzReport run_differential_fuzz(const FuzzParams& params) {
    return run_differential_fuzz(params, standard_routes(params.include_decomposition));
}

FuzzReport run_bc_soundness_fuzz(const FuzzParams& params) {
    FuzzReport report;
    std::mt19937_64 rng(params.seed);
    for (int k = 0; k < params.count; ++k) {
        const Instance inst = random_instance(rng, params.instance);
        const Bounds entry = initial_bounds(inst);
        ++report.instances;

        PropagationOutcome outcome = propagate_bc(inst, entry);
        auto complain = [&](const std::string& what) {
            ++report.discrepancies;
            report.details.push_back("instance " + std::to_string(k) + " (" +
                                     describe_instance(inst) + "): " + what);
        };

        // Pin X_i = v inside a box and ask the exhaustive enumerator.
        auto supported = [&](const Bounds& box, int i, int v) {
            std::vector<std::vector<int64_t>> doms(static_cast<size_t>(inst.size()));
            for (int j = 0; j < inst.size(); ++j) {
                const IntervalDomain dom = j == i ? IntervalDomain{v, v} : box[j];
                for (int x = dom.lb; x <= dom.ub; ++x)
                    doms[static_cast<size_t>(j)].push_back(inst.denormalize(x));
            }
            return has_support(build_instance(doms, inst.graph.edges()));
        };

        if (outcome.failed) {
            if (has_support(inst)) complain("route failed but a support exists");
            continue;
        }
        for (int i = 0; i < inst.size(); ++i) {
            for (int v = entry[i].lb; v < outcome.bounds[i].lb; ++v)
                if (supported(entry, i, v))
                    complain("pruned lower value " + std::to_string(v) + " of X" +
                             std::to_string(i + 1) + " has a support");
            for (int v = outcome.bounds[i].ub + 1; v <= entry[i].ub; ++v)
                if (supported(entry, i, v))
                    complain("pruned upper value " + std::to_string(v) + " of X" +
                             std::to_string(i + 1) + " has a support");
            if (!supported(outcome.bounds, i, outcome.bounds[i].lb))
                complain("surviving lower bound of X" + std::to_string(i + 1) +
                         " lacks a bound support");
            if (!supported(outcome.bounds, i, outcome.bounds[i].ub))
                complain("surviving upper bound of X" + std::to_string(i + 1) +
                         " lacks a bound support");
        }
    }
    return report;
}

} // namespace adp
