#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dfed/graph.hpp"
#include "dfed/patterns.hpp"
#include "dfed/phase1.hpp"

namespace dfed {

/// Edges to delete, sorted.
using DeletionSet = std::vector<EdgeKey>;
/// nullopt means infeasible within the budget.
using Solution = std::optional<DeletionSet>;

struct EditSet {
    std::vector<EdgeKey> deletions;  // existing edges, sorted
    std::vector<EdgeKey> additions;  // non-edges, sorted

    std::size_t size() const noexcept { return deletions.size() + additions.size(); }
    friend bool operator==(const EditSet&, const EditSet&) = default;
};

using EditSolution = std::optional<EditSet>;

struct SolveStats {
    std::size_t nodes = 0;
    std::size_t max_branching = 0;
};

struct SolveOptions {
    /// Prune a node when a greedy packing of the current graph exceeds the
    /// remaining budget.
    bool packing_bound = false;
    SolveStats* stats = nullptr;
};

/// Depth-first branching on the edges of the lexicographically first
/// occurrence. Returns a solution of size <= k iff one exists.
Solution solve_branching(const Instance& inst, const SolveOptions& options = {});

/// Whether g minus `deletions` is free of the family (checked with the
/// pattern detector).
bool is_deletion_solution(const Graph& g, const FamilySpec& fam, const DeletionSet& deletions);
bool is_edit_solution(const Graph& g, const FamilySpec& fam, const EditSet& edits);
Graph apply_edits(const Graph& g, const EditSet& edits);

// ---------------------------------------------------------------------------
// Brute-force oracles. They enumerate candidate sets by increasing size and
// test freeness by enumerating vertex subsets, independently of the pattern
// detector. Each refuses (GuardError) when the number of candidate sets of
// size kmax exceeds `cap`.

/// 10^7, or DIAMOND_KERNEL_ORACLE_CAP when set to a positive integer.
std::uint64_t default_oracle_cap();

/// Binomial coefficient saturated at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

/// Freeness test by vertex-subset enumeration (at most 64 vertices).
bool brute_force_is_free(const Graph& g, const FamilySpec& fam);

std::optional<int> brute_force_min_deletion(const Graph& g, const FamilySpec& fam, int kmax,
                                            std::uint64_t cap = default_oracle_cap());

std::optional<int> brute_force_min_editing(const Graph& g, const FamilySpec& fam, int kmax,
                                           std::uint64_t cap = default_oracle_cap());

/// Every minimum deletion set of size <= kmax (empty if none).
std::vector<DeletionSet> brute_force_all_min_deletions(const Graph& g, const FamilySpec& fam, int kmax,
                                                       std::uint64_t cap = default_oracle_cap());

/// Every minimum edit set of size <= kmax (empty if none).
std::vector<EditSet> brute_force_all_min_editings(const Graph& g, const FamilySpec& fam, int kmax,
                                                  std::uint64_t cap = default_oracle_cap());

/// What the remaining graph must avoid after vertex deletion.
struct VertexDeletionTarget {
    enum class Kind { VertexCover, InducedStar };

    Kind kind = Kind::VertexCover;
    int leaves = 0;  // InducedStar: forbid induced K_{1,leaves}

    static VertexDeletionTarget vertex_cover() { return {Kind::VertexCover, 0}; }
    static VertexDeletionTarget induced_star(int leaves) { return {Kind::InducedStar, leaves}; }
};

std::optional<int> brute_force_vertex_deletion(const Graph& g, VertexDeletionTarget target, int kmax,
                                               std::uint64_t cap = default_oracle_cap());

/// Whether g minus `removed` satisfies the target.
bool satisfies_vertex_target(const Graph& g, VertexDeletionTarget target, const VertexSet& removed);

// ---------------------------------------------------------------------------
// Exact branch-and-bound engines for graphs beyond the brute-force guards.
// Iterative deepening on the budget; each node branches on the free pairs
// of the occurrence with the fewest free pairs, forbidding earlier siblings'
// pairs, and is pruned when the free pairs of the current occurrences admit
// no hitting set within the remaining budget.

/// Minimum deletion set of size <= kmax, or nullopt.
Solution exact_min_deletion(const Graph& g, const FamilySpec& fam, int kmax, SolveStats* stats = nullptr);

/// Minimum edit set of size <= kmax, or nullopt.
EditSolution exact_min_editing(const Graph& g, const FamilySpec& fam, int kmax, SolveStats* stats = nullptr);

/// Minimum vertex set of size <= kmax whose removal meets the target, or nullopt.
std::optional<VertexSet> exact_min_vertex_deletion(const Graph& g, VertexDeletionTarget target, int kmax);

}  // namespace dfed
