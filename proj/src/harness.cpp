#include "dfed/harness.hpp"

#include <algorithm>
#include <cstdio>

#include "dfed/instance_file.hpp"
#include "dfed/solver.hpp"

namespace dfed {

namespace {

constexpr std::size_t kMaxRecordedFailures = 10;
constexpr std::size_t kVerifyVertexGuard = 9;

CheckTally& tally(VerifyReport& report, const std::string& name) {
    for (CheckTally& c : report.checks) {
        if (c.name == name) {
            return c;
        }
    }
    report.checks.push_back({name, 0, 0, {}});
    return report.checks.back();
}

bool has_solution(const Instance& inst, std::uint64_t cap) {
    return brute_force_min_deletion(inst.graph, inst.family, inst.k, cap).has_value();
}

std::string describe(const Instance& inst) {
    return "n=" + std::to_string(inst.graph.num_vertices()) + " m=" + std::to_string(inst.graph.num_edges()) +
           " k=" + std::to_string(inst.k);
}

}  // namespace

void CheckTally::record(bool ok, const std::string& detail) {
    ++applied;
    if (ok) {
        ++passed;
    } else if (failures.size() < kMaxRecordedFailures) {
        failures.push_back(detail);
    }
}

bool VerifyReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckTally& c) { return c.failed() == 0; });
}

const CheckTally& VerifyReport::check(const std::string& name) const {
    for (const CheckTally& c : checks) {
        if (c.name == name) {
            return c;
        }
    }
    throw PreconditionError("no check named " + name);
}

void verify_instance(const Instance& inst, const VerifyConfig& config, VerifyReport& report, const std::string& label) {
    const std::uint64_t cap = config.oracle_cap;
    const bool decision = has_solution(inst, cap);
    auto same = [&](const Instance& reduced) { return has_solution(reduced, cap) == decision; };
    const std::string where = label + " (" + describe(inst) + ", answer " + (decision ? "yes" : "no") + ")";

    if (inst.family.supports_core_membership()) {
        {
            Instance copy = inst;
            if (rule_irrelevant_edge(copy)) {
                tally(report, "irrelevant_edge").record(same(copy), where);
            }
        }
        {
            Instance copy = inst;
            if (rule_sunflower(copy, config.tuning)) {
                tally(report, "sunflower").record(same(copy), where);
            }
        }
        {
            Instance copy = inst;
            SplitProvenance prov;
            if (rule_vertex_split(copy, prov)) {
                tally(report, "vertex_split").record(same(copy), where);
            }
        }
        {
            Instance copy = inst;
            if (rule_irrelevant_component(copy)) {
                tally(report, "irrelevant_component").record(same(copy), where);
            }
        }

        const Phase1Result p1 = run_phase1(inst, config.tuning);
        tally(report, "phase1").record(same(p1.instance), where);

        const Graph& out = p1.instance.graph;
        bool fixpoint = out.num_edges() <= inst.graph.num_edges() &&
                        out.num_vertices() <= 2 * inst.graph.num_edges() && p1.instance.k <= inst.k;
        for (const EdgeKey& e : out.edges()) {
            fixpoint = fixpoint && is_core_member_edge(out, e, inst.family);
        }
        for (VertexId v : out.vertices()) {
            fixpoint = fixpoint && neighborhood_components(out, v).size() <= 1;
        }
        tally(report, "phase1_fixpoint").record(fixpoint, where);

        if (inst.family.is_pure_diamond()) {
            Instance copy = p1.instance;
            auto mod = compute_modulator(copy);
            if (auto* m = std::get_if<Modulator>(&mod)) {
                if (rule_clique_reduction(copy, *m)) {
                    tally(report, "clique_reduction").record(same(copy), where);
                }
            }
        }
    }

    if (inst.family.is_kernelizable()) {
        const KernelOutcome outcome = kernelize(inst, {config.debug_checks, config.tuning});
        if (outcome.decided_no()) {
            tally(report, "kernelize").record(!decision, where + " decided no");
        } else {
            tally(report, "kernelize").record(same(*outcome.kernel), where);
            tally(report, "kernel_bound").record(outcome.report.within_bound, where);
        }
    }

    const std::optional<int> minimum = brute_force_min_deletion(inst.graph, inst.family, config.max_k, cap);
    for (int k = 0; k <= config.max_k; ++k) {
        const Solution sol = solve_branching({inst.graph, k, inst.family});
        const bool expected = minimum && *minimum <= k;
        const bool valid = !sol || (static_cast<int>(sol->size()) <= k && is_deletion_solution(inst.graph, inst.family, *sol));
        tally(report, "solve_branching").record(sol.has_value() == expected && valid,
                                                where + " at k=" + std::to_string(k));
    }
}

VerifyReport verify_rules(const VerifyConfig& config) {
    if (config.max_n > kVerifyVertexGuard) {
        throw GuardError("verify: --max-n " + std::to_string(config.max_n) + " exceeds the guard of " +
                         std::to_string(kVerifyVertexGuard) + " vertices");
    }
    if (config.min_n > config.max_n || config.max_k < 0) {
        throw PreconditionError("verify: need min_n <= max_n and max_k >= 0");
    }
    static constexpr double densities[] = {0.3, 0.5, 0.7};
    VerifyReport report;
    for (const char* name : {"irrelevant_edge", "sunflower", "vertex_split", "irrelevant_component", "phase1",
                             "phase1_fixpoint", "clique_reduction", "kernelize", "kernel_bound", "solve_branching"}) {
        tally(report, name);
    }
    Rng rng(config.seed);
    for (std::size_t i = 0; i < config.trials; ++i) {
        const auto n = static_cast<std::size_t>(rng.between(config.min_n, config.max_n));
        const double p = densities[rng.between(0, 2)];
        const int k = static_cast<int>(rng.between(0, static_cast<std::uint64_t>(config.max_k)));
        const Seed seed = rng.between(0, UINT64_MAX);
        const Instance inst{gen_gnp(n, p, seed), k, config.family};
        verify_instance(inst, config, report, "trial " + std::to_string(i));
        ++report.instances;
    }
    return report;
}

std::vector<Instance> clique_heavy_corpus(std::size_t count, Seed seed) {
    Rng rng(seed);
    std::vector<Instance> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto m = static_cast<VertexId>(rng.between(7, 9));
        const auto extra = static_cast<VertexId>(rng.between(1, 2));
        Graph g(m + extra);
        for (VertexId a = 0; a < m; ++a) {
            for (VertexId b = a + 1; b < m; ++b) {
                g.add_edge(a, b);
            }
        }
        for (VertexId x = m; x < m + extra; ++x) {
            const auto touches = rng.between(2, 3);
            while (g.degree(x) < touches) {
                g.add_edge(x, static_cast<VertexId>(rng.between(0, m - 1)));
            }
            for (VertexId y = m; y < x; ++y) {
                if (rng.unit() < 0.3) {
                    g.add_edge(x, y);
                }
            }
        }
        out.push_back({std::move(g), 1, FamilySpec::diamond()});
    }
    return out;
}

Instance planted_instance(std::size_t n, int k, Seed seed) {
    Rng rng(seed);
    std::vector<std::size_t> sizes;
    std::size_t vertices = 1;
    while (vertices < n) {
        const auto size = static_cast<std::size_t>(rng.between(3, 8));
        sizes.push_back(size);
        vertices += size - 1;
    }
    return gen_planted_yes(clique_tree_base(sizes, 1.0, seed), k, seed + 1);
}

namespace {

BenchRow bench_one(const std::string& corpus, const std::string& name, const Instance& inst) {
    const KernelOutcome outcome = kernelize(inst);
    BenchRow row;
    row.corpus = corpus;
    row.name = name;
    row.input = outcome.report.input;
    row.decided_no = outcome.decided_no();
    row.seconds_phase1 = outcome.report.seconds_phase1;
    row.seconds_phase2 = outcome.report.seconds_phase2;
    if (outcome.kernel) {
        row.output = outcome.report.output;
        row.unchanged = outcome.kernel->graph == inst.graph && outcome.kernel->k == inst.k;
        row.vertex_bound = outcome.report.vertex_bound;
        row.within_bound = outcome.report.within_bound;
    }
    return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    std::vector<BenchRow> rows;
    Rng rng(config.seed);
    if (config.hard) {
        for (int k = config.hard_min_k; k <= config.hard_max_k; ++k) {
            rows.push_back(bench_one("hard", "k=" + std::to_string(k), gen_hard_structure(k)));
        }
    }
    if (config.planted) {
        for (std::size_t i = 0; i < config.planted_count; ++i) {
            const Seed seed = rng.between(0, UINT64_MAX);
            rows.push_back(bench_one("planted", "n=" + std::to_string(config.planted_n) + " #" + std::to_string(i),
                                     planted_instance(config.planted_n, config.planted_k, seed)));
        }
    }
    if (config.gnp) {
        for (std::size_t n : config.gnp_sizes) {
            const Seed seed = rng.between(0, UINT64_MAX);
            rows.push_back(bench_one("gnp", "n=" + std::to_string(n),
                                     {gen_gnp(n, config.gnp_p, seed), config.gnp_k, FamilySpec::diamond()}));
        }
    }
    return rows;
}

nlohmann::ordered_json to_json(const StageSize& s) {
    return {{"vertices", s.vertices}, {"edges", s.edges}, {"k", s.k}};
}

nlohmann::ordered_json to_json(const KernelReport& r) {
    nlohmann::ordered_json firings = nlohmann::ordered_json::object();
    for (Rule rule : {Rule::IrrelevantEdge, Rule::Sunflower, Rule::VertexSplit, Rule::IrrelevantComponent,
                      Rule::CliqueReduction}) {
        auto it = r.firings.find(rule);
        firings[std::string(rule_name(rule))] = it == r.firings.end() ? 0 : it->second;
    }
    return {{"firings", firings},
            {"input", to_json(r.input)},
            {"after_phase1", to_json(r.after_phase1)},
            {"output", to_json(r.output)},
            {"packing_occurrences", r.packing_occurrences},
            {"packing_edges", r.packing_edges},
            {"modulator_vertices", r.modulator_vertices},
            {"cliques", r.cliques},
            {"quota_exceedances", r.quota_exceedances},
            {"vertex_bound", r.vertex_bound},
            {"within_bound", r.within_bound},
            {"seconds_phase1", r.seconds_phase1},
            {"seconds_phase2", r.seconds_phase2}};
}

nlohmann::ordered_json to_json(const VerifyReport& r) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const CheckTally& c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"applied", c.applied},
                          {"passed", c.passed},
                          {"failed", c.failed()},
                          {"failures", c.failures}});
    }
    return {{"instances", r.instances}, {"ok", r.ok()}, {"checks", checks}};
}

nlohmann::ordered_json to_json(const BenchRow& r) {
    return {{"corpus", r.corpus},
            {"name", r.name},
            {"input", to_json(r.input)},
            {"output", to_json(r.output)},
            {"decided_no", r.decided_no},
            {"unchanged", r.unchanged},
            {"vertex_bound", r.vertex_bound},
            {"within_bound", r.within_bound},
            {"seconds_phase1", r.seconds_phase1},
            {"seconds_phase2", r.seconds_phase2}};
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::string out =
        "corpus,name,n_in,m_in,k_in,n_out,m_out,k_out,decided_no,unchanged,vertex_bound,within_bound,"
        "seconds_phase1,seconds_phase2\n";
    for (const BenchRow& r : rows) {
        char times[64];
        std::snprintf(times, sizeof times, "%.6f,%.6f", r.seconds_phase1, r.seconds_phase2);
        out += r.corpus + "," + r.name + "," + std::to_string(r.input.vertices) + "," + std::to_string(r.input.edges) +
               "," + std::to_string(r.input.k) + "," + std::to_string(r.output.vertices) + "," +
               std::to_string(r.output.edges) + "," + std::to_string(r.output.k) + "," +
               (r.decided_no ? "1" : "0") + "," + (r.unchanged ? "1" : "0") + "," + std::to_string(r.vertex_bound) +
               "," + (r.within_bound ? "1" : "0") + "," + times + "\n";
    }
    return out;
}

namespace {

void strip_timings(nlohmann::ordered_json& j) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end();) {
            if (it.key().starts_with("seconds")) {
                it = j.erase(it);
            } else {
                strip_timings(*it);
                ++it;
            }
        }
    } else if (j.is_array()) {
        for (auto& item : j) {
            strip_timings(item);
        }
    }
}

}  // namespace

std::string report_digest(const nlohmann::ordered_json& report) {
    nlohmann::ordered_json copy = report;
    copy.erase("digest");
    strip_timings(copy);
    return fnv1a_hex(copy.dump());
}

}  // namespace dfed
