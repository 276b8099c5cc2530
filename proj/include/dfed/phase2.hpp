#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "dfed/graph.hpp"
#include "dfed/patterns.hpp"
#include "dfed/phase1.hpp"

namespace dfed {

/// Packing edges X, their endpoints V_X (the modulator) and the maximal
/// clique partitioning of G - V_X.
struct Modulator {
    std::size_t packing_occurrences = 0;
    std::vector<EdgeKey> packing_edges;
    VertexSet vertices;
    std::vector<VertexSet> cliques;
};

/// The packing found more than k edge-disjoint occurrences.
struct DecidedNo {
    PackingResult packing;
};

/// How the outside world attaches to a clique C of the partition.
///   a: modulator vertices adjacent to all of C
///   b: non-modulator outside vertices adjacent to exactly one vertex of C
///   d: modulator vertices adjacent to exactly one vertex of C
struct CliqueContext {
    VertexSet clique;
    VertexSet a;
    VertexSet b;
    VertexSet d;
    std::map<VertexId, VertexSet> b_of;  // per member of C; absent means empty
    std::map<VertexId, VertexSet> d_of;
};

struct CliqueReduction {
    VertexSet clique_before;
    VertexSet deleted;
    /// Whether the deletion count stayed within min(|C''|-1, |C|-(2k+2)).
    bool within_quota = true;
};

struct StageSize {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    int k = 0;
};

struct KernelReport {
    std::map<Rule, std::size_t> firings;
    StageSize input;
    StageSize after_phase1;
    StageSize output;
    std::size_t packing_occurrences = 0;
    std::size_t packing_edges = 0;
    std::size_t modulator_vertices = 0;
    std::size_t cliques = 0;
    std::size_t quota_exceedances = 0;
    double seconds_phase1 = 0.0;
    double seconds_phase2 = 0.0;
    std::uint64_t vertex_bound = 0;
    bool within_bound = true;
};

struct KernelOutcome {
    std::optional<Instance> kernel;  // empty when decided no
    KernelReport report;
    SplitProvenance provenance;
    RuleLog log;

    bool decided_no() const noexcept { return !kernel.has_value(); }
};

struct KernelOptions {
    /// Checks the structural properties the kernel relies on and throws
    /// InvariantError when one fails.
    bool debug_checks = false;
    RuleTuning tuning;
};

std::variant<DecidedNo, Modulator> compute_modulator(const Instance& inst, bool check = false);

/// Throws InvariantError when C's attachments contradict a valid modulator.
CliqueContext classify_clique(const Graph& g, const VertexSet& modulator, const VertexSet& clique);

/// One application of the clique reduction on the first clique of size
/// >= 3 and > 4k. Updates the graph and the clique in `mod`.
std::optional<CliqueReduction> rule_clique_reduction(Instance& inst, Modulator& mod);

/// Diamond-free edge deletion: Phase 1, modulator, exhaustive clique reduction.
KernelOutcome kernelize_dfed(Instance inst, const KernelOptions& options = {});

/// {diamond, K_t}-free edge deletion: Phase 1 and the packing check.
KernelOutcome kernelize_dkt(Instance inst, const KernelOptions& options = {});

/// Dispatches on the family; throws PreconditionError for other families.
KernelOutcome kernelize(Instance inst, const KernelOptions& options = {});

/// 152k^3 + 70k^2 + 7k.
std::uint64_t dfed_vertex_bound(int k);

/// tk + [|X|(2k+1) + C(tk,2)] * t + 2|X|(2k+1)(t-1) with |X| = t(t-1)k/2.
std::uint64_t dkt_vertex_bound(int k, int t);

}  // namespace dfed
