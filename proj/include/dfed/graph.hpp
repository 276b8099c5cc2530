#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dfed {

using VertexId = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

/// Undirected edge stored with the smaller endpoint first.
class EdgeKey {
public:
    EdgeKey(VertexId a, VertexId b);

    VertexId u() const noexcept { return u_; }
    VertexId v() const noexcept { return v_; }
    bool touches(VertexId x) const noexcept { return x == u_ || x == v_; }
    VertexId other(VertexId x) const noexcept { return x == u_ ? v_ : u_; }

    friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
    friend bool operator==(const EdgeKey&, const EdgeKey&) = default;

private:
    VertexId u_;
    VertexId v_;
};

std::string to_string(const EdgeKey& e);

/// Simple undirected graph over stable vertex ids.
///
/// Ids are never recycled: vertices created by add_vertex() always receive an
/// id larger than any id this graph (or the graph it was derived from) has
/// ever used. All enumeration is in ascending id order.
class Graph {
public:
    Graph() = default;
    /// Graph on vertices 0..n-1 with no edges.
    explicit Graph(std::size_t n);

    VertexId add_vertex();
    void remove_vertex(VertexId v);

    /// Returns false if the edge already existed.
    bool add_edge(VertexId a, VertexId b);
    bool add_edge(const EdgeKey& e) { return add_edge(e.u(), e.v()); }
    /// Returns false if the edge was absent.
    bool remove_edge(VertexId a, VertexId b);
    bool remove_edge(const EdgeKey& e) { return remove_edge(e.u(), e.v()); }

    bool has_vertex(VertexId v) const noexcept;
    bool has_edge(VertexId a, VertexId b) const noexcept;
    bool has_edge(const EdgeKey& e) const noexcept { return has_edge(e.u(), e.v()); }

    /// Sorted neighbor list of v.
    std::span<const VertexId> neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    VertexSet vertices() const;
    std::vector<EdgeKey> edges() const;
    std::size_t num_vertices() const noexcept { return vertex_count_; }
    std::size_t num_edges() const noexcept { return edge_count_; }
    bool empty() const noexcept { return vertex_count_ == 0; }

    /// One past the largest id ever handed out.
    VertexId id_bound() const noexcept { return static_cast<VertexId>(slots_.size()); }

    /// Throws InvariantError if symmetry, loop-freeness or bookkeeping is broken.
    void validate() const;

    /// Structural equality: same vertex ids and same edges.
    friend bool operator==(const Graph& a, const Graph& b);

    friend Graph induced_subgraph(const Graph& g, std::span<const VertexId> vs);

private:
    struct Slot {
        bool alive = false;
        std::vector<VertexId> adj;
    };

    const Slot& slot(VertexId v) const;
    Slot& slot(VertexId v);

    std::vector<Slot> slots_;
    std::size_t vertex_count_ = 0;
    std::size_t edge_count_ = 0;
};

bool contains(const VertexSet& set, VertexId v);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
/// Sorts and deduplicates in place; returns the argument.
VertexSet normalized(VertexSet vs);

/// Sorted common neighborhood N(a) ∩ N(b).
VertexSet common_neighbors(const Graph& g, VertexId a, VertexId b);

/// Components of g[N(v)], ordered by smallest member.
std::vector<VertexSet> neighborhood_components(const Graph& g, VertexId v);

/// Components of g, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// g[vs] with ids preserved. Throws UnknownVertexError for ids not in g.
Graph induced_subgraph(const Graph& g, std::span<const VertexId> vs);

/// Graph on vs whose edges are exactly the non-edges of g[vs].
Graph complement_restricted(const Graph& g, std::span<const VertexId> vs);

/// g with the given edges deleted (vertex set unchanged).
Graph without_edges(const Graph& g, std::span<const EdgeKey> edges);

/// g with the given vertices (and incident edges) deleted.
Graph without_vertices(const Graph& g, std::span<const VertexId> vs);

/// Maximum-cardinality matching of a general graph (Edmonds' blossom algorithm).
std::vector<EdgeKey> maximum_matching(const Graph& g);

}  // namespace dfed
