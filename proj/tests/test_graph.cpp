#include <algorithm>

#include "doctest.h"
#include "dfed/errors.hpp"
#include "dfed/graph.hpp"
#include "dfed/instances.hpp"
#include "helpers.hpp"

using namespace dfed;
using namespace dfed::testing;

namespace {

bool is_matching(const Graph& g, const std::vector<EdgeKey>& m) {
    std::vector<VertexId> ends;
    for (const auto& e : m) {
        if (!g.has_edge(e)) {
            return false;
        }
        ends.push_back(e.u());
        ends.push_back(e.v());
    }
    std::sort(ends.begin(), ends.end());
    return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
}

// Largest matching by exhaustive search over edges.
std::size_t brute_matching(const std::vector<EdgeKey>& edges, std::size_t from, std::vector<bool>& used) {
    std::size_t best = 0;
    for (std::size_t i = from; i < edges.size(); ++i) {
        const auto& e = edges[i];
        if (used[e.u()] || used[e.v()]) {
            continue;
        }
        used[e.u()] = used[e.v()] = true;
        best = std::max(best, 1 + brute_matching(edges, i + 1, used));
        used[e.u()] = used[e.v()] = false;
    }
    return best;
}

}  // namespace

TEST_CASE("edge keys are canonical") {
    EdgeKey e(5, 2);
    CHECK(e.u() == 2);
    CHECK(e.v() == 5);
    CHECK(e == EdgeKey(2, 5));
    CHECK(EdgeKey(1, 9) < EdgeKey(2, 3));
    CHECK_THROWS_AS(EdgeKey(3, 3), PreconditionError);
}

TEST_CASE("mutation keeps the graph consistent") {
    Graph g(3);
    CHECK(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(1, 0));
    CHECK(g.add_edge(1, 2));
    CHECK(g.num_edges() == 2);
    CHECK_THROWS_AS(g.add_edge(1, 1), PreconditionError);
    CHECK_THROWS_AS(g.add_edge(0, 7), UnknownVertexError);
    g.remove_vertex(1);
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 0);
    g.validate();
    VertexId fresh = g.add_vertex();
    CHECK(fresh == 3);  // ids are not recycled
    CHECK_FALSE(g.has_vertex(1));
    CHECK(g.remove_edge(0, 2) == false);
}

TEST_CASE("neighborhood components") {
    // bowtie: v=0, triangles {0,1,2} and {0,3,4}
    Graph bowtie = make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    CHECK(neighborhood_components(bowtie, 0) == std::vector<VertexSet>{{1, 2}, {3, 4}});
    CHECK(neighborhood_components(diamond(), 1) == std::vector<VertexSet>{{0, 2, 3}});
    Graph single(1);
    CHECK(neighborhood_components(single, 0).empty());
    CHECK_THROWS_AS(neighborhood_components(single, 4), UnknownVertexError);
}

TEST_CASE("connected components") {
    Graph two = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK(connected_components(two) == std::vector<VertexSet>{{0, 1, 2}, {3, 4, 5}});
    CHECK(connected_components(Graph{}).empty());
    CHECK(connected_components(path_graph(3)) == std::vector<VertexSet>{{0, 1, 2}});
}

TEST_CASE("induced subgraph") {
    Graph k4 = complete_graph(4);
    VertexSet abc{0, 1, 2};
    Graph tri = induced_subgraph(k4, abc);
    CHECK(tri == complete_graph(3));
    CHECK(induced_subgraph(k4, VertexSet{}).empty());
    VertexSet tips{0, 3};
    Graph two = induced_subgraph(diamond(), tips);
    CHECK(two.num_vertices() == 2);
    CHECK(two.num_edges() == 0);
    VertexSet all = k4.vertices();
    CHECK(induced_subgraph(k4, all) == k4);
    VertexSet bad{0, 9};
    CHECK_THROWS_AS(induced_subgraph(k4, bad), UnknownVertexError);
}

TEST_CASE("complement restricted") {
    Graph g(4);
    VertexSet all{0, 1, 2, 3};
    CHECK(complement_restricted(g, all) == complete_graph(4));
    CHECK(complement_restricted(complete_graph(4), all).num_edges() == 0);
    Graph c = complement_restricted(diamond(), all);
    CHECK(c.edges() == keys({{0, 3}}));
}

TEST_CASE("edge and vertex removal helpers") {
    Graph d = diamond();
    auto middle = keys({{1, 2}});
    Graph c4 = without_edges(d, middle);
    CHECK(c4.num_edges() == 4);
    CHECK(c4.num_vertices() == 4);
    VertexSet drop{1};
    Graph rest = without_vertices(d, drop);
    CHECK(rest.vertices() == VertexSet{0, 2, 3});
    CHECK(rest.num_edges() == 2);
}

TEST_CASE("set helpers") {
    CHECK(normalized({3, 1, 3, 2}) == VertexSet{1, 2, 3});
    CHECK(set_intersection({1, 2, 3}, {2, 3, 4}) == VertexSet{2, 3});
    CHECK(set_union({1, 3}, {2}) == VertexSet{1, 2, 3});
    CHECK(set_difference({1, 2, 3}, {2}) == VertexSet{1, 3});
    CHECK(common_neighbors(diamond(), 1, 2) == VertexSet{0, 3});
}

TEST_CASE("maximum matching examples") {
    auto m = maximum_matching(path_graph(4));
    CHECK(m == keys({{0, 1}, {2, 3}}));
    CHECK(maximum_matching(cycle_graph(5)).size() == 2);

    Graph petersen(10);
    for (VertexId i = 0; i < 5; ++i) {
        petersen.add_edge(i, (i + 1) % 5);
        petersen.add_edge(i, i + 5);
        petersen.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    auto pm = maximum_matching(petersen);
    CHECK(pm.size() == 5);
    CHECK(is_matching(petersen, pm));
    CHECK(maximum_matching(Graph(3)).empty());
}

TEST_CASE("maximum matching against brute force") {
    for (Seed seed = 0; seed < 60; ++seed) {
        std::size_t n = 3 + seed % 8;
        Graph g = gen_gnp(n, 0.2 + 0.1 * static_cast<double>(seed % 5), seed);
        auto m = maximum_matching(g);
        std::vector<bool> used(n, false);
        auto edges = g.edges();
        CHECK(is_matching(g, m));
        CHECK(m.size() == brute_matching(edges, 0, used));
    }
}

TEST_CASE("matching a blossom reached through a stem") {
    // triangle 1-2-3 with stem 0-1 and tails 2-4, 3-5
    Graph g = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {1, 3}, {2, 4}, {3, 5}});
    CHECK(maximum_matching(g).size() == 3);
}
