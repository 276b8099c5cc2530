#include "dfed/phase1.hpp"

#include <algorithm>

namespace dfed {

std::string_view rule_name(Rule rule) {
    switch (rule) {
        case Rule::IrrelevantEdge:
            return "irrelevant_edge";
        case Rule::Sunflower:
            return "sunflower";
        case Rule::VertexSplit:
            return "vertex_split";
        case Rule::IrrelevantComponent:
            return "irrelevant_component";
        case Rule::CliqueReduction:
            return "clique_reduction";
    }
    return "unknown";
}

Graph replay(const Graph& input, const RuleLog& log) {
    Graph g = input;
    for (const RuleEvent& ev : log) {
        for (const EdgeKey& e : ev.deleted_edges) {
            if (!g.remove_edge(e)) {
                throw InvariantError("replay: edge " + to_string(e) + " missing");
            }
        }
        for (const auto& [fresh, component] : ev.created) {
            if (g.add_vertex() != fresh) {
                throw InvariantError("replay: fresh id mismatch");
            }
            for (VertexId u : component) {
                g.add_edge(fresh, u);
            }
        }
        for (VertexId v : ev.deleted_vertices) {
            g.remove_vertex(v);
        }
    }
    return g;
}

std::optional<EdgeKey> rule_irrelevant_edge(Instance& inst) {
    for (const EdgeKey& e : inst.graph.edges()) {
        if (!is_core_member_edge(inst.graph, e, inst.family)) {
            inst.graph.remove_edge(e);
            return e;
        }
    }
    return std::nullopt;
}

std::optional<EdgeKey> rule_sunflower(Instance& inst, const RuleTuning& tuning) {
    if (inst.k <= 0) {
        return std::nullopt;
    }
    const auto threshold = static_cast<std::size_t>(inst.k + tuning.sunflower_slack);
    for (const EdgeKey& e : inst.graph.edges()) {
        const VertexSet common = common_neighbors(inst.graph, e.u(), e.v());
        if (common.size() < 2 * threshold) {
            continue;
        }
        if (maximum_matching(complement_restricted(inst.graph, common)).size() >= threshold) {
            inst.graph.remove_edge(e);
            --inst.k;
            return e;
        }
    }
    return std::nullopt;
}

std::optional<VertexId> rule_vertex_split(Instance& inst, SplitProvenance& provenance) {
    Graph& g = inst.graph;
    for (VertexId v : g.vertices()) {
        auto components = neighborhood_components(g, v);
        if (components.size() < 2) {
            continue;
        }
        for (VertexSet& comp : components) {
            const VertexId fresh = g.add_vertex();
            for (VertexId u : comp) {
                g.add_edge(fresh, u);
            }
            provenance.emplace(fresh, SplitOrigin{v, std::move(comp)});
        }
        g.remove_vertex(v);
        return v;
    }
    return std::nullopt;
}

std::optional<VertexSet> rule_irrelevant_component(Instance& inst) {
    for (VertexSet& comp : connected_components(inst.graph)) {
        if (is_family_free(induced_subgraph(inst.graph, comp), inst.family)) {
            for (VertexId v : comp) {
                inst.graph.remove_vertex(v);
            }
            return std::move(comp);
        }
    }
    return std::nullopt;
}

std::map<Rule, std::size_t> Phase1Result::firing_counts() const {
    std::map<Rule, std::size_t> counts;
    for (const RuleEvent& ev : log) {
        ++counts[ev.rule];
    }
    return counts;
}

Phase1Result run_phase1(Instance inst, const RuleTuning& tuning) {
    if (!inst.family.supports_core_membership()) {
        throw PreconditionError("phase 1 supports {diamond} and {diamond, K_t} only, got " + inst.family.token());
    }
    if (inst.k < 0) {
        throw PreconditionError("budget must be non-negative");
    }
    Phase1Result result{std::move(inst), {}, {}};
    Instance& cur = result.instance;
    if (cur.graph.empty()) {
        return result;
    }
    while (true) {
        const int k_before = cur.k;
        if (auto e = rule_irrelevant_edge(cur)) {
            result.log.push_back({Rule::IrrelevantEdge, {*e}, {}, {}, k_before, cur.k});
            continue;
        }
        if (auto e = rule_sunflower(cur, tuning)) {
            result.log.push_back({Rule::Sunflower, {*e}, {}, {}, k_before, cur.k});
            continue;
        }
        const VertexId first_fresh = cur.graph.id_bound();
        if (auto v = rule_vertex_split(cur, result.provenance)) {
            RuleEvent ev{Rule::VertexSplit, {}, {*v}, {}, k_before, cur.k};
            for (VertexId fresh = first_fresh; fresh < cur.graph.id_bound(); ++fresh) {
                ev.created.emplace_back(fresh, result.provenance.at(fresh).component);
            }
            result.log.push_back(std::move(ev));
            continue;
        }
        if (auto comp = rule_irrelevant_component(cur)) {
            result.log.push_back({Rule::IrrelevantComponent, {}, std::move(*comp), {}, k_before, cur.k});
            continue;
        }
        break;
    }
    return result;
}

}  // namespace dfed
