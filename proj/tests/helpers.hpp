#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "dfed/graph.hpp"

namespace dfed::testing {

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
    Graph g(n);
    for (auto [a, b] : edges) {
        g.add_edge(a, b);
    }
    return g;
}

inline Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) {
            g.add_edge(a, b);
        }
    }
    return g;
}

inline Graph path_graph(std::size_t n) {
    Graph g(n);
    for (VertexId a = 0; a + 1 < n; ++a) {
        g.add_edge(a, a + 1);
    }
    return g;
}

inline Graph cycle_graph(std::size_t n) {
    Graph g = path_graph(n);
    g.add_edge(0, static_cast<VertexId>(n - 1));
    return g;
}

// p=0, q=1, r=2, s=3 with middle edge q-r.
inline Graph diamond() { return make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.num_vertices() + b.num_vertices());
    auto off = static_cast<VertexId>(a.num_vertices());
    for (const auto& e : a.edges()) {
        g.add_edge(e);
    }
    for (const auto& e : b.edges()) {
        g.add_edge(e.u() + off, e.v() + off);
    }
    return g;
}

inline std::vector<EdgeKey> keys(std::initializer_list<std::pair<VertexId, VertexId>> edges) {
    std::vector<EdgeKey> out;
    for (auto [a, b] : edges) {
        out.emplace_back(a, b);
    }
    return out;
}

}  // namespace dfed::testing
