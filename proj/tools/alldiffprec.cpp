#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "adp/bc_fast.hpp"
#include "adp/bc_passes.hpp"
#include "adp/bc_reference.hpp"
#include "adp/dc_oracle.hpp"
#include "adp/decomposition.hpp"
#include "adp/fuzz.hpp"
#include "adp/instance_io.hpp"
#include "adp/search.hpp"

namespace {

constexpr int kExitSat = 0;
constexpr int kExitUnsat = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

adp::InstanceDoc load_doc(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw adp::ParseError("cannot open " + path);
    return adp::parse_instance(in);
}

void print_bounds(const adp::InstanceDoc& doc, const adp::Instance& inst,
                  const adp::Bounds& bounds) {
    for (int i = 0; i < inst.size(); ++i)
        std::cout << doc.names[static_cast<size_t>(i)] << " in ["
                  << inst.denormalize(bounds[i].lb) << ", " << inst.denormalize(bounds[i].ub)
                  << "]\n";
}

int cmd_propagate(const std::string& file, const std::string& route_name,
                  const std::string& mode_name, bool trace) {
    const auto route = adp::parse_route(route_name);
    if (!route) {
        std::cerr << "unknown route '" << route_name << "'\n";
        return kExitUsage;
    }
    const adp::InstanceDoc doc = load_doc(file);
    const adp::Instance inst = doc.to_instance();
    adp::Bounds bounds = initial_bounds(inst);

    adp::PropagationOutcome outcome;
    std::vector<std::string> trace_lines;
    switch (*route) {
    case adp::Route::Fast: {
        adp::PropagateOptions opts;
        opts.mode = mode_name == "compressed" ? adp::UniverseMode::Compressed
                                              : adp::UniverseMode::FullUniverse;
        if (trace) opts.trace = &trace_lines;
        outcome = adp::propagate_bc(inst, std::move(bounds), opts);
        break;
    }
    case adp::Route::Reference:
        outcome = adp::conditions_prune(inst, std::move(bounds));
        break;
    case adp::Route::Decomposition:
        outcome = adp::propagate_decomposition(adp::encode(inst), std::move(bounds));
        break;
    case adp::Route::Binary:
        outcome = adp::propagate_binary_decomposition(inst, std::move(bounds));
        break;
    }
    for (const auto& line : trace_lines) std::cout << line << "\n";
    if (outcome.failed) {
        std::cout << "FAILURE\n";
        return kExitUnsat;
    }
    print_bounds(doc, inst, outcome.bounds);
    return kExitSat;
}

int cmd_solve(const std::string& file, const adp::SearchConfig& config) {
    const adp::InstanceDoc doc = load_doc(file);
    const adp::Instance inst = doc.to_instance();
    const adp::SearchResult result = adp::solve(inst, config);
    std::cout << "nodes " << result.nodes << "\n";
    switch (result.status) {
    case adp::SearchStatus::Sat:
        for (int i = 0; i < inst.size(); ++i)
            std::cout << doc.names[static_cast<size_t>(i)] << " = "
                      << result.solution[static_cast<size_t>(i)] << "\n";
        return kExitSat;
    case adp::SearchStatus::Unsat:
        std::cout << "UNSATISFIABLE\n";
        return kExitUnsat;
    case adp::SearchStatus::NodeLimit:
        std::cout << "NODE LIMIT\n";
        return kExitLimit;
    }
    return kExitUsage;
}

int cmd_dc(const std::string& file, int64_t cap) {
    const adp::InstanceDoc doc = load_doc(file);
    const adp::Instance inst = doc.to_instance();
    const auto filtered = adp::enforce_dc(inst, cap);
    if (!filtered) {
        std::cout << "FAILURE\n";
        return kExitUnsat;
    }
    for (int i = 0; i < inst.size(); ++i) {
        std::cout << doc.names[static_cast<size_t>(i)] << " in {";
        bool first = true;
        for (int v : (*filtered)[static_cast<size_t>(i)].values()) {
            if (!first) std::cout << ", ";
            std::cout << inst.denormalize(v);
            first = false;
        }
        std::cout << "}\n";
    }
    return kExitSat;
}

int cmd_encode_sat(const std::string& cnf_path) {
    std::ifstream in(cnf_path);
    if (!in) {
        std::cerr << "cannot open " << cnf_path << "\n";
        return kExitUsage;
    }
    const adp::CnfFormula formula = adp::parse_dimacs(in);
    const adp::SatEncoding enc = adp::encode_3sat(formula);
    std::vector<std::string> names;
    for (int i = 0; i < enc.instance.size(); ++i) names.push_back("X" + std::to_string(i + 1));
    std::cout << adp::serialize_instance(adp::doc_from_instance(enc.instance, names));
    return kExitSat;
}

int cmd_fuzz(const adp::FuzzParams& params, bool with_dc) {
    const adp::FuzzReport report = adp::run_differential_fuzz(params);
    std::cout << "instances " << report.instances << "\n"
              << "discrepancies " << report.discrepancies << "\n";
    for (const auto& line : report.details) std::cout << line << "\n";
    bool clean = report.clean();
    if (with_dc) {
        const adp::FuzzReport sound = adp::run_bc_soundness_fuzz(params);
        std::cout << "dc-soundness instances " << sound.instances << "\n"
                  << "dc-soundness violations " << sound.discrepancies << "\n";
        for (const auto& line : sound.details) std::cout << line << "\n";
        clean = clean && sound.clean();
    }
    return clean ? kExitSat : kExitLimit;
}

int cmd_bench(int max_n, int step, uint64_t seed, double edge_p) {
    std::cout << "n\tfull_us\tcompressed_us\n";
    for (int n = step; n <= max_n; n += step) {
        std::mt19937_64 rng(seed + static_cast<uint64_t>(n));
        adp::RandomInstanceParams params;
        params.max_n = n;
        params.max_d = 2 * n;
        params.edge_probability = edge_p;
        // Fixed n for the row: redraw until the sampler returns exactly n.
        adp::Instance inst = adp::random_instance(rng, params);
        while (inst.size() != n) inst = adp::random_instance(rng, params);
        const adp::Bounds entry = initial_bounds(inst);

        auto time_route = [&](adp::UniverseMode mode) {
            adp::PropagateOptions opts;
            opts.mode = mode;
            const auto start = std::chrono::steady_clock::now();
            adp::propagate_bc(inst, entry, opts);
            const auto stop = std::chrono::steady_clock::now();
            return std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
        };
        std::cout << n << "\t" << time_route(adp::UniverseMode::FullUniverse) << "\t"
                  << time_route(adp::UniverseMode::Compressed) << "\n";
    }
    return kExitSat;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"AllDiffPrec: propagation and search for AllDifferent with precedences"};
    app.require_subcommand(1);

    std::string file, route = "fast", mode = "full", var_order = "min-domain";
    std::string value_order = "ascending", branching = "assign";
    bool trace = false;
    int64_t node_limit = 1'000'000;
    int64_t dc_cap = adp::kDefaultEnumerationCap;
    adp::FuzzParams fuzz_params;
    int bench_max_n = 200, bench_step = 50;
    uint64_t bench_seed = 1;
    double bench_edge_p = 0.1;

    auto* propagate = app.add_subcommand("propagate", "run one propagation route to fixpoint");
    propagate->add_option("file", file, "instance file")->required();
    propagate->add_option("--route", route, "fast|reference|decomp|binary");
    propagate->add_option("--mode", mode, "full|compressed (fast route)");
    propagate->add_flag("--trace", trace, "print the sweep trace (fast route)");

    auto* solve = app.add_subcommand("solve", "backtracking search");
    solve->add_option("file", file, "instance file")->required();
    solve->add_option("--route", route, "fast|reference|decomp|binary");
    solve->add_option("--var-order", var_order, "min-domain|lex|topological");
    solve->add_option("--value-order", value_order, "ascending|descending");
    solve->add_option("--branching", branching, "assign|split");
    solve->add_option("--node-limit", node_limit, "search node budget");

    auto* dc = app.add_subcommand("dc", "exhaustive domain-consistency oracle");
    dc->add_option("file", file, "instance file")->required();
    dc->add_option("--cap", dc_cap, "domain-size product cap");

    auto* encode_sat = app.add_subcommand("encode-sat", "encode a 3-CNF as AllDiffPrec");
    encode_sat->add_option("cnf", file, "DIMACS CNF file")->required();

    auto* fuzz = app.add_subcommand("fuzz", "differential fuzzing across all routes");
    fuzz->add_option("--seed", fuzz_params.seed, "random seed");
    fuzz->add_option("--count", fuzz_params.count, "instance count");
    fuzz->add_option("--max-n", fuzz_params.instance.max_n, "max variables");
    fuzz->add_option("--max-d", fuzz_params.instance.max_d, "max universe value");
    fuzz->add_option("--edge-p", fuzz_params.instance.edge_probability, "DAG edge probability");
    bool fuzz_with_dc = false;
    fuzz->add_flag("--with-decomp", fuzz_params.include_decomposition,
                   "also run the Boolean decomposition route");
    fuzz->add_flag("--with-dc", fuzz_with_dc,
                   "also check pruning soundness against exhaustive enumeration");

    auto* bench = app.add_subcommand("bench", "timing table for the fast propagator");
    bench->add_option("--max-n", bench_max_n, "largest instance size");
    bench->add_option("--step", bench_step, "size increment");
    bench->add_option("--seed", bench_seed, "random seed");
    bench->add_option("--edge-p", bench_edge_p, "DAG edge probability");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (propagate->parsed()) return cmd_propagate(file, route, mode, trace);
        if (solve->parsed()) {
            adp::SearchConfig config;
            const auto r = adp::parse_route(route);
            const auto vo = adp::parse_var_order(var_order);
            const auto val = adp::parse_value_order(value_order);
            const auto br = adp::parse_branching(branching);
            if (!r || !vo || !val || !br) {
                std::cerr << "bad search option\n";
                return kExitUsage;
            }
            config.route = *r;
            config.var_order = *vo;
            config.value_order = *val;
            config.branching = *br;
            config.node_limit = node_limit;
            return cmd_solve(file, config);
        }
        if (dc->parsed()) return cmd_dc(file, dc_cap);
        if (encode_sat->parsed()) return cmd_encode_sat(file);
        if (fuzz->parsed()) return cmd_fuzz(fuzz_params, fuzz_with_dc);
        if (bench->parsed()) return cmd_bench(bench_max_n, bench_step, bench_seed, bench_edge_p);
    } catch (const adp::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const adp::ExplosionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const adp::CycleError& e) {
        std::cout << "FAILURE (cycle): " << e.what() << "\n";
        return kExitUnsat;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
