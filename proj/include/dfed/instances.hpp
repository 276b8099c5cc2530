#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dfed/graph.hpp"
#include "dfed/phase1.hpp"
#include "dfed/solver.hpp"

namespace dfed {

using Seed = std::uint64_t;

/// Deterministic generator shared by all instance builders: mt19937_64 with
/// hand-rolled uniform draws so that output does not depend on the standard
/// library's distribution implementations.
class Rng {
public:
    explicit Rng(Seed seed);
    /// Uniform in [0, 1).
    double unit();
    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi);

private:
    std::mt19937_64 engine_;
};

/// G(n, p) over pairs in canonical order.
Graph gen_gnp(std::size_t n, double p, Seed seed);

/// Cliques on vertices 0..n-1. Valid when cliques pairwise share at most
/// one vertex and their union is diamond-free.
struct PlantedBase {
    std::size_t n = 0;
    std::vector<VertexSet> cliques;

    /// Throws PreconditionError when the conditions above fail.
    void validate() const;
    Graph graph() const;
};

/// Cliques of the given sizes, each glued at one random existing vertex
/// with probability `glue_probability` and disjoint otherwise.
PlantedBase clique_tree_base(const std::vector<std::size_t>& sizes, double glue_probability, Seed seed);

/// The base plus `extra_edges` random non-edges, budget `extra_edges`,
/// family {diamond}. Deleting the added edges solves it.
Instance gen_planted_yes(const PlantedBase& base, int extra_edges, Seed seed);

/// k disjoint k-cliques (vertices i*k .. i*k+k-1) and a diamond on
/// w1..w4 = k^2 .. k^2+3 with middle edge w1w2; w1 sees every clique vertex,
/// w2 sees the smallest vertex of each clique. Budget k, family {diamond}.
Instance gen_hard_structure(int k);

/// A random instance of the rule-safety corpus.
struct CorpusItem {
    Instance instance;
    std::size_t n = 0;
    double p = 0.0;
    Seed seed = 0;
};

/// n in [5,9], p in {0.3, 0.5, 0.7}, k in [0,3], family `fam`.
std::vector<CorpusItem> random_corpus(std::size_t count, const FamilySpec& fam, Seed seed);

/// Bookkeeping of the vertex cover to s-diamond-free reduction.
struct ReductionTrace {
    std::vector<std::string> stages;
    Graph source;
    int source_k = 0;
    /// Source edge {u,v} -> (x1, x2) on the path u - x1 - x2 - v.
    std::map<EdgeKey, std::pair<VertexId, VertexId>> subdivisions;
    /// Star leaf -> the vertex it hangs from.
    std::map<VertexId, VertexId> leaf_center;
    std::optional<VertexId> universal;
    /// Added to the budget by the stages so far.
    int budget_offset = 0;
    Graph result;
    int result_k = 0;
    int s = 0;
};

struct StageOutput {
    Graph graph;
    int k = 0;
    ReductionTrace trace;
};

/// Replaces every edge by a path with three edges; budget k + |E|.
StageOutput subdivide_twice(const Graph& g, int k);

/// Hangs c fresh leaves off every vertex. Budget unchanged.
StageOutput attach_stars(const Graph& g, int c, int k = 0);

class NotTriangleFreeError : public PreconditionError {
public:
    explicit NotTriangleFreeError(VertexSet triangle);
    const VertexSet& witness() const noexcept { return witness_; }

private:
    VertexSet witness_;
};

/// Adds a vertex adjacent to every vertex. Requires a triangle-free input.
StageOutput add_universal(const Graph& g, int k = 0);

struct ReducedInstance {
    Instance instance;
    ReductionTrace trace;
};

/// subdivide_twice, attach_stars(c = s), add_universal; budget k + |E|,
/// family {s-diamond}.
ReducedInstance reduce_vc_to_sdfed(const Graph& g, int k, int s);

/// Maps a solution of the reduced instance back to a vertex cover of the
/// source graph. Throws PreconditionError if `sol` does not solve the
/// reduced instance within its budget.
VertexSet lift_solution(const ReductionTrace& trace, const DeletionSet& sol);
VertexSet lift_solution(const ReductionTrace& trace, const EditSet& sol);

bool is_vertex_cover(const Graph& g, const VertexSet& cover);

}  // namespace dfed
