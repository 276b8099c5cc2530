#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dfed/errors.hpp"
#include "dfed/graph.hpp"

namespace dfed {

/// One forbidden shape: the s-diamond K2 x (s+1)K1 (s = 1 is the plain
/// diamond) or the complete graph K_t.
struct Pattern {
    enum class Kind { SDiamond, Clique };

    Kind kind;
    int size;  // s for SDiamond, t for Clique

    static Pattern s_diamond(int s) { return {Kind::SDiamond, s}; }
    static Pattern clique(int t) { return {Kind::Clique, t}; }

    std::size_t vertex_count() const;
    std::size_t edge_count() const;
    std::string token() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// The forbidden family: at most one s-diamond and at most one clique.
class FamilySpec {
public:
    FamilySpec(std::optional<int> s_diamond, std::optional<int> clique);

    static FamilySpec diamond() { return FamilySpec(1, std::nullopt); }
    static FamilySpec s_diamond_only(int s) { return FamilySpec(s, std::nullopt); }
    static FamilySpec diamond_and_clique(int t) { return FamilySpec(1, t); }

    const std::optional<int>& s_diamond() const noexcept { return s_; }
    const std::optional<int>& clique() const noexcept { return t_; }

    /// SDiamond items first, then Clique.
    std::vector<Pattern> patterns() const;

    bool is_pure_diamond() const noexcept { return s_ == 1 && !t_; }
    /// {diamond} or {diamond, K_t} with t >= 4: the families the kernel handles.
    bool is_kernelizable() const noexcept { return s_ == 1 && (!t_ || *t_ >= 4); }
    /// {diamond} or {diamond, K_t}: the families the Phase-1 rules handle.
    bool supports_core_membership() const noexcept { return s_ == 1; }

    std::size_t max_occurrence_edges() const;
    std::size_t max_occurrence_vertices() const;

    /// Instance-file token, e.g. "diamond", "2-diamond", "diamond,k4".
    std::string token() const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

private:
    std::optional<int> s_;
    std::optional<int> t_;
};

/// An induced copy of a pattern inside a host graph.
struct PatternOccurrence {
    Pattern pattern;
    VertexSet vertices;
    std::vector<EdgeKey> edges;  // sorted

    friend bool operator==(const PatternOccurrence&, const PatternOccurrence&) = default;
};

class NotDiamondFreeError : public PreconditionError {
public:
    explicit NotDiamondFreeError(PatternOccurrence witness);
    const PatternOccurrence& witness() const noexcept { return witness_; }

private:
    PatternOccurrence witness_;
};

/// Lexicographically first induced occurrence (by sorted vertex tuple); all
/// s-diamonds are considered before any clique.
std::optional<PatternOccurrence> find_induced_occurrence(const Graph& g, const FamilySpec& fam);

/// Every induced occurrence, s-diamonds first, each group in lexicographic order.
std::vector<PatternOccurrence> enumerate_induced_occurrences(const Graph& g, const FamilySpec& fam);

bool is_family_free(const Graph& g, const FamilySpec& fam);

/// Whether e lies in a (not necessarily induced) diamond, or in a K_t when
/// the family has a clique item.
bool is_core_member_edge(const Graph& g, const EdgeKey& e, const FamilySpec& fam);
bool is_core_member_vertex(const Graph& g, VertexId v, const FamilySpec& fam);

struct PackingResult {
    enum class Status { Packed, BudgetExceeded };

    Status status = Status::Packed;
    std::vector<EdgeKey> edges;  // X, sorted
    std::vector<PatternOccurrence> occurrences;

    bool budget_exceeded() const noexcept { return status == Status::BudgetExceeded; }
};

/// Greedy maximal packing of edge-disjoint induced occurrences. Stops with
/// BudgetExceeded as soon as k+1 occurrences are packed. With `check`, also
/// verifies that every induced occurrence of g meets X.
PackingResult greedy_packing(const Graph& g, int k, const FamilySpec& fam, bool check = false);

/// Vertex sets of the maximal cliques of a diamond-free graph, one per
/// clique, isolated vertices as singletons, in lexicographic order.
/// Throws NotDiamondFreeError otherwise.
std::vector<VertexSet> clique_partition(const Graph& g);

}  // namespace dfed
