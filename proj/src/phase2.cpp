#include "dfed/phase2.hpp"

#include <algorithm>
#include <chrono>

namespace dfed {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

StageSize stage_of(const Instance& inst) {
    return {inst.graph.num_vertices(), inst.graph.num_edges(), inst.k};
}

std::size_t modulator_vertex_limit(const FamilySpec& fam, int k) {
    return fam.max_occurrence_vertices() * static_cast<std::size_t>(k);
}

std::size_t modulator_edge_limit(const FamilySpec& fam, int k) {
    return fam.max_occurrence_edges() * static_cast<std::size_t>(k);
}

void check_partition(const Graph& g, const std::vector<VertexSet>& cliques) {
    std::vector<EdgeKey> covered;
    for (const VertexSet& c : cliques) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                if (!g.has_edge(c[i], c[j])) {
                    throw InvariantError("clique partition member is not a clique");
                }
                covered.emplace_back(c[i], c[j]);
            }
        }
    }
    std::sort(covered.begin(), covered.end());
    if (std::adjacent_find(covered.begin(), covered.end()) != covered.end() || covered != g.edges()) {
        throw InvariantError("clique partition does not partition the edge set");
    }
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        for (std::size_t j = i + 1; j < cliques.size(); ++j) {
            const VertexSet shared = set_intersection(cliques[i], cliques[j]);
            if (shared.size() > 1) {
                throw InvariantError("two partition cliques share an edge");
            }
            if (shared.size() == 1) {
                for (VertexId x : cliques[i]) {
                    for (VertexId y : cliques[j]) {
                        if (x != shared[0] && y != shared[0] && g.has_edge(x, y)) {
                            throw InvariantError("edge between intersecting partition cliques");
                        }
                    }
                }
            }
        }
    }
}

// Structure every clique of the partition has at a Phase-1 fixpoint.
void check_fixpoint_clique(const Graph& g, const CliqueContext& ctx) {
    bool anchored = false;
    for (VertexId x : ctx.a) {
        for (VertexId y : g.neighbors(x)) {
            if (contains(ctx.a, y) || contains(ctx.d, y)) {
                anchored = true;
                break;
            }
        }
        if (anchored) {
            break;
        }
    }
    if (!anchored) {
        throw InvariantError("clique has no adjacent pair x in A_C, y in A_C or D_C");
    }
    for (const auto& [v, bs] : ctx.b_of) {
        if (!bs.empty() && !ctx.d_of.contains(v)) {
            throw InvariantError("clique vertex with B-neighbors but no D-neighbor");
        }
    }
}

}  // namespace

std::uint64_t dfed_vertex_bound(int k) {
    const auto kk = static_cast<std::uint64_t>(k);
    return 152 * kk * kk * kk + 70 * kk * kk + 7 * kk;
}

std::uint64_t dkt_vertex_bound(int k, int t) {
    const auto kk = static_cast<std::uint64_t>(k);
    const auto tt = static_cast<std::uint64_t>(t);
    const std::uint64_t packing = tt * (tt - 1) * kk / 2;
    const std::uint64_t modulator = tt * kk;
    const std::uint64_t modulator_pairs = modulator == 0 ? 0 : modulator * (modulator - 1) / 2;
    return modulator + (packing * (2 * kk + 1) + modulator_pairs) * tt + 2 * packing * (2 * kk + 1) * (tt - 1);
}

std::variant<DecidedNo, Modulator> compute_modulator(const Instance& inst, bool check) {
    if (!inst.family.supports_core_membership()) {
        throw PreconditionError("modulator requires {diamond} or {diamond, K_t}, got " + inst.family.token());
    }
    PackingResult packing = greedy_packing(inst.graph, inst.k, inst.family, check);
    if (packing.budget_exceeded()) {
        return DecidedNo{std::move(packing)};
    }
    Modulator mod;
    mod.packing_occurrences = packing.occurrences.size();
    mod.packing_edges = std::move(packing.edges);
    for (const EdgeKey& e : mod.packing_edges) {
        mod.vertices.push_back(e.u());
        mod.vertices.push_back(e.v());
    }
    mod.vertices = normalized(std::move(mod.vertices));
    mod.cliques = clique_partition(without_vertices(inst.graph, mod.vertices));
    if (check) {
        if (mod.packing_edges.size() > modulator_edge_limit(inst.family, inst.k) ||
            mod.vertices.size() > modulator_vertex_limit(inst.family, inst.k)) {
            throw InvariantError("modulator larger than the packing bound");
        }
        check_partition(without_vertices(inst.graph, mod.vertices), mod.cliques);
    }
    return mod;
}

CliqueContext classify_clique(const Graph& g, const VertexSet& modulator, const VertexSet& clique) {
    CliqueContext ctx;
    ctx.clique = clique;
    std::map<VertexId, VertexSet> touched;  // outside vertex -> its neighbors in C
    for (VertexId c : clique) {
        for (VertexId u : g.neighbors(c)) {
            if (!contains(clique, u)) {
                touched[u].push_back(c);
            }
        }
    }
    for (auto& [u, members] : touched) {
        const bool in_modulator = contains(modulator, u);
        if (members.size() == clique.size() && in_modulator) {
            ctx.a.push_back(u);
        } else if (members.size() == 1) {
            (in_modulator ? ctx.d : ctx.b).push_back(u);
            (in_modulator ? ctx.d_of : ctx.b_of)[members.front()].push_back(u);
        } else if (in_modulator) {
            throw InvariantError("modulator vertex " + std::to_string(u) +
                                 " sees some but not all of a partition clique");
        } else {
            throw InvariantError("non-modulator vertex " + std::to_string(u) +
                                 " sees several vertices of a partition clique");
        }
    }
    if (clique.size() > 1) {
        for (std::size_t i = 0; i < ctx.a.size(); ++i) {
            for (std::size_t j = i + 1; j < ctx.a.size(); ++j) {
                if (!g.has_edge(ctx.a[i], ctx.a[j])) {
                    throw InvariantError("A_C is not a clique");
                }
            }
        }
    }
    return ctx;
}

std::optional<CliqueReduction> rule_clique_reduction(Instance& inst, Modulator& mod) {
    if (!inst.family.is_pure_diamond()) {
        throw PreconditionError("clique reduction applies to diamond-free edge deletion only");
    }
    const auto limit = 4 * static_cast<std::size_t>(inst.k);
    for (VertexSet& clique : mod.cliques) {
        if (clique.size() < 3 || clique.size() <= limit) {
            continue;
        }
        if (mod.vertices.size() > limit) {
            throw InvariantError("modulator has more than 4k vertices");
        }
        const CliqueContext ctx = classify_clique(inst.graph, mod.vertices, clique);
        const VertexSet extended = set_union(clique, ctx.a);
        VertexSet local;
        for (VertexId v : clique) {
            auto nb = inst.graph.neighbors(v);
            if (std::all_of(nb.begin(), nb.end(), [&](VertexId u) { return contains(extended, u); })) {
                local.push_back(v);
            }
        }
        CliqueReduction red;
        red.clique_before = clique;
        if (local.size() > 1) {
            red.deleted.assign(local.begin() + 1, local.end());
        }
        const std::size_t retained = clique.size() - red.deleted.size();
        if (retained > limit) {
            throw InvariantError("clique reduction leaves " + std::to_string(retained) + " > 4k vertices");
        }
        const auto quota = static_cast<long long>(clique.size()) - (2LL * inst.k + 2);
        red.within_quota = static_cast<long long>(red.deleted.size()) <= quota;
        for (VertexId v : red.deleted) {
            inst.graph.remove_vertex(v);
        }
        clique = set_difference(clique, red.deleted);
        return red;
    }
    return std::nullopt;
}

KernelOutcome kernelize_dfed(Instance inst, const KernelOptions& options) {
    if (!inst.family.is_pure_diamond()) {
        throw PreconditionError("kernelize_dfed expects the diamond family, got " + inst.family.token());
    }
    KernelOutcome out;
    out.report.input = stage_of(inst);

    auto start = Clock::now();
    Phase1Result p1 = run_phase1(std::move(inst), options.tuning);
    out.report.seconds_phase1 = seconds_since(start);
    out.report.after_phase1 = stage_of(p1.instance);
    out.provenance = std::move(p1.provenance);
    out.log = std::move(p1.log);
    Instance cur = std::move(p1.instance);

    start = Clock::now();
    auto computed = compute_modulator(cur, options.debug_checks);
    if (auto* no = std::get_if<DecidedNo>(&computed)) {
        out.report.packing_occurrences = no->packing.occurrences.size();
        out.report.packing_edges = no->packing.edges.size();
        out.report.seconds_phase2 = seconds_since(start);
        for (const RuleEvent& ev : out.log) {
            ++out.report.firings[ev.rule];
        }
        return out;
    }
    Modulator mod = std::get<Modulator>(std::move(computed));
    out.report.packing_occurrences = mod.packing_occurrences;
    out.report.packing_edges = mod.packing_edges.size();
    out.report.modulator_vertices = mod.vertices.size();
    out.report.cliques = mod.cliques.size();
    if (options.debug_checks) {
        for (const VertexSet& c : mod.cliques) {
            check_fixpoint_clique(cur.graph, classify_clique(cur.graph, mod.vertices, c));
        }
    }

    while (true) {
        const int k_before = cur.k;
        auto red = rule_clique_reduction(cur, mod);
        if (!red) {
            break;
        }
        if (!red->within_quota) {
            ++out.report.quota_exceedances;
        }
        out.log.push_back({Rule::CliqueReduction, {}, red->deleted, {}, k_before, cur.k});
    }
    if (options.debug_checks) {
        auto recomputed = clique_partition(without_vertices(cur.graph, mod.vertices));
        auto in_place = mod.cliques;
        std::sort(in_place.begin(), in_place.end());
        if (recomputed != in_place) {
            throw InvariantError("in-place clique partition diverged from recomputation");
        }
    }
    out.report.seconds_phase2 = seconds_since(start);
    out.report.output = stage_of(cur);
    out.report.vertex_bound = dfed_vertex_bound(cur.k);
    out.report.within_bound = cur.graph.num_vertices() <= out.report.vertex_bound;
    for (const RuleEvent& ev : out.log) {
        ++out.report.firings[ev.rule];
    }
    out.kernel = std::move(cur);
    return out;
}

KernelOutcome kernelize_dkt(Instance inst, const KernelOptions& options) {
    if (!inst.family.is_kernelizable() || inst.family.is_pure_diamond()) {
        throw PreconditionError("kernelize_dkt expects {diamond, K_t} with t >= 4, got " + inst.family.token());
    }
    const int t = *inst.family.clique();
    KernelOutcome out;
    out.report.input = stage_of(inst);

    auto start = Clock::now();
    Phase1Result p1 = run_phase1(std::move(inst), options.tuning);
    out.report.seconds_phase1 = seconds_since(start);
    out.report.after_phase1 = stage_of(p1.instance);
    out.provenance = std::move(p1.provenance);
    out.log = std::move(p1.log);
    out.report.firings = p1.firing_counts();
    Instance cur = std::move(p1.instance);

    start = Clock::now();
    PackingResult packing = greedy_packing(cur.graph, cur.k, cur.family, options.debug_checks);
    out.report.packing_occurrences = packing.occurrences.size();
    out.report.packing_edges = packing.edges.size();
    if (packing.budget_exceeded()) {
        out.report.seconds_phase2 = seconds_since(start);
        return out;
    }
    if (options.debug_checks) {
        auto mod = compute_modulator(cur, true);
        const Modulator& m = std::get<Modulator>(mod);
        for (const VertexSet& c : m.cliques) {
            if (c.size() >= static_cast<std::size_t>(t)) {
                throw InvariantError("partition clique of size >= t outside the modulator");
            }
            classify_clique(cur.graph, m.vertices, c);
        }
    }
    VertexSet endpoints;
    for (const EdgeKey& e : packing.edges) {
        endpoints.push_back(e.u());
        endpoints.push_back(e.v());
    }
    out.report.modulator_vertices = normalized(std::move(endpoints)).size();
    out.report.seconds_phase2 = seconds_since(start);
    out.report.output = stage_of(cur);
    out.report.vertex_bound = dkt_vertex_bound(cur.k, t);
    out.report.within_bound = cur.graph.num_vertices() <= out.report.vertex_bound;
    out.kernel = std::move(cur);
    return out;
}

KernelOutcome kernelize(Instance inst, const KernelOptions& options) {
    if (inst.family.is_pure_diamond()) {
        return kernelize_dfed(std::move(inst), options);
    }
    if (inst.family.is_kernelizable()) {
        return kernelize_dkt(std::move(inst), options);
    }
    throw PreconditionError("no kernelization for family " + inst.family.token() +
                            " (only {diamond} and {diamond, K_t} with t >= 4)");
}

}  // namespace dfed
