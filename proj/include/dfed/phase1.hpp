#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "dfed/graph.hpp"
#include "dfed/patterns.hpp"

namespace dfed {

/// A parameterized instance: delete at most k edges so that the graph
/// becomes free of the family.
struct Instance {
    Graph graph;
    int k = 0;
    FamilySpec family = FamilySpec::diamond();

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Where a vertex created by vertex-split came from.
struct SplitOrigin {
    VertexId original;
    VertexSet component;  // the neighborhood component it was attached to

    friend bool operator==(const SplitOrigin&, const SplitOrigin&) = default;
};

using SplitProvenance = std::map<VertexId, SplitOrigin>;

enum class Rule { IrrelevantEdge, Sunflower, VertexSplit, IrrelevantComponent, CliqueReduction };

std::string_view rule_name(Rule rule);

/// One rule firing, with enough detail to replay it.
struct RuleEvent {
    Rule rule;
    std::vector<EdgeKey> deleted_edges;
    VertexSet deleted_vertices;
    std::vector<std::pair<VertexId, VertexSet>> created;  // vertex-split: fresh id and its component
    int k_before = 0;
    int k_after = 0;
};

using RuleLog = std::vector<RuleEvent>;

/// Re-applies a log to the graph it was recorded on.
/// Throws InvariantError if the log does not fit the graph.
Graph replay(const Graph& input, const RuleLog& log);

/// Knobs for mutation testing of the verification harness. The sunflower
/// rule fires when the maximum non-matching is at least k + sunflower_slack.
struct RuleTuning {
    int sunflower_slack = 1;
};

/// Deletes the smallest edge that is not a core member.
std::optional<EdgeKey> rule_irrelevant_edge(Instance& inst);

/// Deletes the first edge whose common neighborhood has a non-matching of
/// size at least k+1 and decrements k. Never fires at k = 0.
std::optional<EdgeKey> rule_sunflower(Instance& inst, const RuleTuning& tuning = {});

/// Splits the smallest vertex whose neighborhood is disconnected into one
/// fresh vertex per neighborhood component. Returns the split vertex.
std::optional<VertexId> rule_vertex_split(Instance& inst, SplitProvenance& provenance);

/// Deletes the first component that is free of the family.
std::optional<VertexSet> rule_irrelevant_component(Instance& inst);

struct Phase1Result {
    Instance instance;
    SplitProvenance provenance;
    RuleLog log;

    std::map<Rule, std::size_t> firing_counts() const;
};

/// Applies the four rules (in the order above, restarting after every
/// firing) until none applies.
Phase1Result run_phase1(Instance inst, const RuleTuning& tuning = {});

}  // namespace dfed
