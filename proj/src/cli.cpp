#include "dfed/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "dfed/harness.hpp"
#include "dfed/instance_file.hpp"
#include "dfed/instances.hpp"
#include "dfed/phase2.hpp"
#include "dfed/solver.hpp"
#include "json.hpp"

namespace dfed {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot write '" + path + "'");
    }
    out << text;
    if (!out) {
        throw Error("write to '" + path + "' failed");
    }
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
    } else {
        write_file(path, text);
    }
}

Json new_report(const std::string& command) {
    return {{"schema_version", kReportSchemaVersion}, {"command", command}};
}

void emit_report(Json report, const std::string& path, std::ostream& out) {
    report["digest"] = report_digest(report);
    const std::string text = report.dump(2) + "\n";
    if (path.empty()) {
        out << text;
    } else {
        write_file(path, text);
    }
}

Json edge_list(const std::vector<EdgeKey>& edges) {
    Json arr = Json::array();
    for (const EdgeKey& e : edges) {
        arr.push_back({e.u(), e.v()});
    }
    return arr;
}

struct Loaded {
    Instance instance;
    std::string digest;
};

Loaded load_instance(const std::string& path, const std::string& family_override) {
    const std::string text = read_file(path);
    Instance inst = parse_instance(text);
    if (!family_override.empty()) {
        inst.family = parse_family(family_override);
    }
    return {std::move(inst), fnv1a_hex(text)};
}

// --- kernelize -------------------------------------------------------------

struct KernelizeArgs {
    std::string input;
    std::string out;
    std::string report;
    std::string family;
    bool debug = false;
};

int cmd_kernelize(const KernelizeArgs& a, std::ostream& out, std::ostream& err) {
    Loaded loaded = load_instance(a.input, a.family);
    const FamilySpec& fam = loaded.instance.family;
    if (fam.s_diamond() && *fam.s_diamond() >= 2) {
        err << "error: no kernel implemented for the " << fam.token()
            << " family; kernelization for s-diamonds with s >= 2 is an open problem\n";
        return kExitFailure;
    }
    if (!fam.is_kernelizable()) {
        err << "error: no kernel implemented for the " << fam.token()
            << " family; supported are 'diamond' and 'diamond,k<t>' with t >= 4\n";
        return kExitFailure;
    }
    const KernelOutcome outcome = kernelize(loaded.instance, {a.debug, {}});
    Json report = new_report("kernelize");
    report["input"] = a.input;
    report["input_digest"] = loaded.digest;
    report["family"] = fam.token();
    report["status"] = outcome.decided_no() ? "decided_no" : "kernel";
    report["kernel"] = to_json(outcome.report);
    bool kernel_on_stdout = false;
    if (outcome.kernel) {
        const std::string text = serialize_instance(*outcome.kernel);
        report["kernel_digest"] = fnv1a_hex(text);
        kernel_on_stdout = a.out.empty();
        write_output(a.out, text, out);
    }
    // With the kernel on stdout the report is only written to --report.
    if (!kernel_on_stdout || !a.report.empty()) {
        emit_report(report, a.report, out);
    }
    return outcome.decided_no() ? kExitNo : kExitOk;
}

// --- solve -----------------------------------------------------------------

struct SolveArgs {
    std::string input;
    std::string out;
    std::string family;
    std::string engine = "branching";
    bool verify = false;
    bool packing_bound = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
    Loaded loaded = load_instance(a.input, a.family);
    const Instance& inst = loaded.instance;
    Json report = new_report("solve");
    report["input"] = a.input;
    report["input_digest"] = loaded.digest;
    report["engine"] = a.engine;
    report["family"] = inst.family.token();
    report["k"] = inst.k;

    std::optional<EditSet> found;
    SolveStats stats;
    if (a.engine == "branching") {
        if (auto sol = solve_branching(inst, {a.packing_bound, &stats})) {
            found = EditSet{*sol, {}};
        }
    } else if (a.engine == "brute") {
        auto all = brute_force_all_min_deletions(inst.graph, inst.family, inst.k);
        if (!all.empty()) {
            found = EditSet{all.front(), {}};
        }
    } else if (a.engine == "brute-edit") {
        auto all = brute_force_all_min_editings(inst.graph, inst.family, inst.k);
        if (!all.empty()) {
            found = all.front();
        }
    } else if (a.engine == "exact") {
        if (auto sol = exact_min_deletion(inst.graph, inst.family, inst.k, &stats)) {
            found = EditSet{*sol, {}};
        }
    } else if (a.engine == "exact-edit") {
        found = exact_min_editing(inst.graph, inst.family, inst.k, &stats);
    } else {
        err << "error: unknown engine '" << a.engine << "'\n";
        return kExitUsage;
    }

    report["status"] = found ? "feasible" : "infeasible";
    if (found) {
        report["size"] = found->size();
        report["deletions"] = edge_list(found->deletions);
        report["additions"] = edge_list(found->additions);
        if (a.verify) {
            const bool ok = is_edit_solution(inst.graph, inst.family, *found) &&
                            static_cast<int>(found->size()) <= inst.k;
            report["verified"] = ok;
            if (!ok) {
                err << "error: solution failed verification\n";
                emit_report(report, a.out, out);
                return kExitFailure;
            }
        }
    }
    if (a.engine == "branching" || a.engine == "exact" || a.engine == "exact-edit") {
        report["nodes"] = stats.nodes;
        report["max_branching"] = stats.max_branching;
    }
    emit_report(report, a.out, out);
    return found ? kExitOk : kExitNo;
}

// --- generate --------------------------------------------------------------

struct GenerateArgs {
    std::string out;
    Seed seed = 1;
    std::size_t n = 10;
    double p = 0.5;
    int k = 1;
    std::string family = "diamond";
    int s = 1;
    std::string input;
    std::string trace;
};

Json trace_json(const ReductionTrace& t) {
    Json subs = Json::array();
    for (const auto& [e, xs] : t.subdivisions) {
        subs.push_back({{"edge", {e.u(), e.v()}}, {"path", {e.u(), xs.first, xs.second, e.v()}}});
    }
    Json leaves = Json::array();
    for (const auto& [leaf, center] : t.leaf_center) {
        leaves.push_back({leaf, center});
    }
    return {{"schema_version", kReportSchemaVersion},
            {"stages", t.stages},
            {"source_vertices", t.source.num_vertices()},
            {"source_edges", t.source.num_edges()},
            {"source_k", t.source_k},
            {"budget_offset", t.budget_offset},
            {"result_k", t.result_k},
            {"s", t.s},
            {"universal", t.universal ? Json(*t.universal) : Json(nullptr)},
            {"subdivisions", subs},
            {"leaf_center", leaves}};
}

int cmd_generate(const std::string& kind, const GenerateArgs& a, std::ostream& out) {
    if (kind == "gnp") {
        const FamilySpec fam = parse_family(a.family);
        write_output(a.out, serialize_instance({gen_gnp(a.n, a.p, a.seed), a.k, fam}), out);
    } else if (kind == "planted") {
        write_output(a.out, serialize_instance(planted_instance(a.n, a.k, a.seed)), out);
    } else if (kind == "hard") {
        write_output(a.out, serialize_instance(gen_hard_structure(a.k)), out);
    } else {
        const VcInstance vc = parse_vc_instance(read_file(a.input));
        const ReducedInstance reduced = reduce_vc_to_sdfed(vc.graph, vc.k, a.s);
        write_output(a.out, serialize_instance(reduced.instance), out);
        std::string trace_path = a.trace;
        if (trace_path.empty() && !a.out.empty()) {
            trace_path = a.out + ".trace.json";
        }
        if (!trace_path.empty()) {
            write_file(trace_path, trace_json(reduced.trace).dump(2) + "\n");
        }
    }
    return kExitOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string out;
    std::string family = "diamond";
    Seed seed = 1;
    std::size_t trials = 200;
    std::size_t max_n = 8;
    int max_k = 3;
    int sunflower_slack = 1;
    bool rules = true;
    bool debug = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    VerifyConfig config;
    config.trials = a.trials;
    config.max_n = a.max_n;
    config.min_n = std::min<std::size_t>(5, a.max_n);
    config.max_k = a.max_k;
    config.family = parse_family(a.family);
    config.seed = a.seed;
    config.tuning.sunflower_slack = a.sunflower_slack;
    config.debug_checks = a.debug;
    const VerifyReport result = verify_rules(config);
    Json report = new_report("verify");
    report["seed"] = a.seed;
    report["trials"] = a.trials;
    report["max_n"] = a.max_n;
    report["max_k"] = a.max_k;
    report["family"] = config.family.token();
    report["sunflower_slack"] = a.sunflower_slack;
    report["result"] = to_json(result);
    emit_report(report, a.out, out);
    if (!result.ok()) {
        for (const CheckTally& c : result.checks) {
            if (c.failed() > 0) {
                err << "verify: " << c.name << " failed on " << c.failed() << " of " << c.applied << " instances\n";
            }
        }
        return kExitFailure;
    }
    return kExitOk;
}

// --- bench -----------------------------------------------------------------

struct BenchArgs {
    std::string out;
    std::string csv;
    Seed seed = 1;
    BenchConfig config;
};

int cmd_bench(BenchArgs a, std::ostream& out, std::ostream& err) {
    a.config.seed = a.seed;
    const std::vector<BenchRow> rows = run_bench(a.config);
    Json report = new_report("bench");
    report["seed"] = a.seed;
    Json arr = Json::array();
    bool ok = true;
    for (const BenchRow& r : rows) {
        arr.push_back(to_json(r));
        if (!r.within_bound) {
            err << "bench: " << r.corpus << " " << r.name << " exceeds the vertex bound\n";
            ok = false;
        }
        if (r.corpus == "hard" && !r.unchanged) {
            err << "bench: hard structure " << r.name << " was reduced\n";
            ok = false;
        }
    }
    report["rows"] = arr;
    report["ok"] = ok;
    emit_report(report, a.out, out);
    if (!a.csv.empty()) {
        write_file(a.csv, bench_csv(rows));
    }
    return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kernelization and exact solving for diamond-free edge deletion"};
    app.name("dfed");
    app.require_subcommand(1);

    KernelizeArgs ka;
    auto* kern = app.add_subcommand("kernelize", "Kernelize an instance file");
    kern->add_option("-i,--input", ka.input, "Instance file")->required();
    kern->add_option("-o,--out", ka.out, "Kernel instance file (stdout if omitted)");
    kern->add_option("--report", ka.report, "JSON report file (stdout if omitted and --out is given)");
    kern->add_option("--family", ka.family, "Override the family token");
    kern->add_flag("--debug-assert", ka.debug, "Check the structural properties the kernel relies on");

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "Solve an instance exactly");
    solve->add_option("-i,--input", sa.input, "Instance file")->required();
    solve->add_option("-o,--out", sa.out, "JSON report file (stdout if omitted)");
    solve->add_option("--family", sa.family, "Override the family token");
    solve->add_option("--engine", sa.engine, "branching | brute | brute-edit | exact | exact-edit")
        ->check(CLI::IsMember({"branching", "brute", "brute-edit", "exact", "exact-edit"}));
    solve->add_flag("--verify", sa.verify, "Re-check the solution");
    solve->add_flag("--packing-bound", sa.packing_bound, "Prune branching with a greedy packing bound");

    GenerateArgs ga;
    auto* gen = app.add_subcommand("generate", "Generate instance files");
    gen->require_subcommand(1);
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-o,--out", ga.out, "Output instance file (stdout if omitted)");
        sub->add_option("--seed", ga.seed, "Random seed");
    };
    auto* gnp = gen->add_subcommand("gnp", "Random G(n, p) instance");
    add_common(gnp);
    gnp->add_option("--n", ga.n, "Vertices")->required();
    gnp->add_option("--p", ga.p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
    gnp->add_option("--k", ga.k, "Budget")->check(CLI::NonNegativeNumber);
    gnp->add_option("--family", ga.family, "Family token");
    auto* planted = gen->add_subcommand("planted", "Planted yes-instance");
    add_common(planted);
    planted->add_option("--n", ga.n, "Approximate vertex count")->required();
    planted->add_option("--k", ga.k, "Extra edges and budget")->check(CLI::NonNegativeNumber);
    auto* hard = gen->add_subcommand("hard", "Hard structure with k^2 + 4 vertices");
    add_common(hard);
    hard->add_option("--k", ga.k, "Parameter (>= 2)")->required()->check(CLI::Range(2, 1000));
    auto* rvc = gen->add_subcommand("reduce-vc", "Reduce a vertex cover instance to s-diamond-free edge deletion");
    add_common(rvc);
    rvc->add_option("-i,--input", ga.input, "Vertex cover file ('p vc n m k')")->required();
    rvc->add_option("--s", ga.s, "s of the s-diamond")->check(CLI::Range(1, 1000));
    rvc->add_option("--trace", ga.trace, "Reduction trace JSON (default <out>.trace.json)");

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "Check rule safety against the brute-force oracle");
    ver->add_flag("--rules", va.rules, "Verify the reduction rules (default)");
    ver->add_option("-o,--out", va.out, "JSON report file (stdout if omitted)");
    ver->add_option("--seed", va.seed, "Random seed");
    ver->add_option("--trials", va.trials, "Number of random instances");
    ver->add_option("--max-n", va.max_n, "Largest vertex count (at most 9)");
    ver->add_option("--max-k", va.max_k, "Largest budget")->check(CLI::NonNegativeNumber);
    ver->add_option("--family", va.family, "Family token");
    ver->add_option("--sunflower-slack", va.sunflower_slack,
                    "Sunflower fires at non-matching >= k + slack (1 is correct; 0 injects a bug)");
    ver->add_flag("--debug-assert", va.debug, "Enable structural checks inside the kernelizer");

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "Time the kernelization over generated corpora");
    bench->add_option("-o,--out", ba.out, "JSON report file (stdout if omitted)");
    bench->add_option("--csv", ba.csv, "Also write CSV rows");
    bench->add_option("--seed", ba.seed, "Random seed");
    bench->add_option("--hard-max-k", ba.config.hard_max_k, "Largest hard-structure parameter");
    bench->add_option("--planted-n", ba.config.planted_n, "Planted instance size");
    bench->add_option("--planted-k", ba.config.planted_k, "Planted budget");
    bench->add_option("--planted-count", ba.config.planted_count, "Planted instances");
    bench->add_option("--gnp-sizes", ba.config.gnp_sizes, "G(n, p) sizes");

    std::vector<const char*> argv{"dfed"};
    for (const std::string& s : args) {
        argv.push_back(s.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*kern) {
            return cmd_kernelize(ka, out, err);
        }
        if (*solve) {
            return cmd_solve(sa, out, err);
        }
        if (*gen) {
            for (CLI::App* sub : {gnp, planted, hard, rvc}) {
                if (*sub) {
                    return cmd_generate(sub->get_name(), ga, out);
                }
            }
        }
        if (*ver) {
            return cmd_verify(va, out, err);
        }
        if (*bench) {
            return cmd_bench(ba, out, err);
        }
    } catch (const GuardError& e) {
        err << "refused: " << e.what() << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace dfed
