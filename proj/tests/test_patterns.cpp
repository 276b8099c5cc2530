#include <algorithm>
#include <array>

#include "doctest.h"
#include "dfed/instances.hpp"
#include "dfed/patterns.hpp"
#include "dfed/solver.hpp"
#include "helpers.hpp"

using namespace dfed;
using namespace dfed::testing;

namespace {

// Non-induced diamond through e, found by trying every ordered 4-tuple.
bool edge_in_diamond_subgraph(const Graph& g, const EdgeKey& e) {
    auto vs = g.vertices();
    constexpr std::array<std::pair<int, int>, 5> shape{{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}};
    for (auto a : vs)
        for (auto b : vs)
            for (auto c : vs)
                for (auto d : vs) {
                    std::array<VertexId, 4> t{a, b, c, d};
                    if (a == b || a == c || a == d || b == c || b == d || c == d) {
                        continue;
                    }
                    bool all = true;
                    bool hit = false;
                    for (auto [i, j] : shape) {
                        all = all && g.has_edge(t[i], t[j]);
                        hit = hit || EdgeKey(t[i], t[j]) == e;
                    }
                    if (all && hit) {
                        return true;
                    }
                }
    return false;
}

// K2 joined with an independent set of size s+1: hubs 0 and 1.
Graph s_diamond_graph(int s) {
    Graph g(static_cast<std::size_t>(s) + 3);
    g.add_edge(0, 1);
    for (VertexId i = 2; i < static_cast<VertexId>(s) + 3; ++i) {
        g.add_edge(0, i);
        g.add_edge(1, i);
    }
    return g;
}

}  // namespace

TEST_CASE("family tokens and sizes") {
    CHECK(FamilySpec::diamond().token() == "diamond");
    CHECK(FamilySpec::s_diamond_only(2).token() == "2-diamond");
    CHECK(FamilySpec::diamond_and_clique(4).token() == "diamond,k4");
    CHECK(Pattern::s_diamond(2).vertex_count() == 5);
    CHECK(Pattern::s_diamond(2).edge_count() == 7);
    CHECK(Pattern::clique(5).edge_count() == 10);
    CHECK_THROWS_AS(FamilySpec(std::nullopt, std::nullopt), PreconditionError);
    CHECK_THROWS_AS(FamilySpec(0, std::nullopt), PreconditionError);
    CHECK_THROWS_AS(FamilySpec(1, 2), PreconditionError);
    CHECK(FamilySpec::diamond_and_clique(4).is_kernelizable());
    CHECK_FALSE(FamilySpec::diamond_and_clique(3).is_kernelizable());
    CHECK_FALSE(FamilySpec::s_diamond_only(2).is_kernelizable());
}

TEST_CASE("find induced occurrence") {
    auto occ = find_induced_occurrence(diamond(), FamilySpec::diamond());
    REQUIRE(occ);
    CHECK(occ->vertices == VertexSet{0, 1, 2, 3});
    CHECK(occ->edges.size() == 5);
    CHECK(occ->pattern == Pattern::s_diamond(1));

    CHECK_FALSE(find_induced_occurrence(complete_graph(4), FamilySpec::diamond()));

    auto two = find_induced_occurrence(s_diamond_graph(2), FamilySpec::s_diamond_only(2));
    REQUIRE(two);
    CHECK(two->vertices.size() == 5);
    CHECK(two->edges.size() == 7);

    auto k = find_induced_occurrence(complete_graph(5), FamilySpec::diamond_and_clique(4));
    REQUIRE(k);
    CHECK(k->pattern == Pattern::clique(4));
    CHECK(k->vertices == VertexSet{0, 1, 2, 3});
}

TEST_CASE("s-diamonds come before cliques") {
    Graph g = disjoint_union(complete_graph(4), diamond());
    auto occ = find_induced_occurrence(g, FamilySpec::diamond_and_clique(4));
    REQUIRE(occ);
    CHECK(occ->pattern == Pattern::s_diamond(1));
    CHECK(occ->vertices == VertexSet{4, 5, 6, 7});
}

TEST_CASE("family freeness") {
    CHECK(is_family_free(cycle_graph(4), FamilySpec::diamond()));
    CHECK_FALSE(is_family_free(complete_graph(5), FamilySpec::diamond_and_clique(4)));
    Graph cliques = disjoint_union(disjoint_union(complete_graph(4), complete_graph(3)), complete_graph(1));
    CHECK(is_family_free(cliques, FamilySpec::diamond()));
    CHECK(brute_force_is_free(cliques, FamilySpec::diamond()));
}

TEST_CASE("detector agrees with subset enumeration") {
    const FamilySpec fams[] = {FamilySpec::diamond(), FamilySpec::s_diamond_only(2),
                               FamilySpec::diamond_and_clique(4)};
    for (Seed seed = 0; seed < 150; ++seed) {
        Graph g = gen_gnp(4 + seed % 6, 0.3 + 0.1 * static_cast<double>(seed % 5), seed);
        for (const auto& fam : fams) {
            CHECK(is_family_free(g, fam) == brute_force_is_free(g, fam));
            for (const auto& occ : enumerate_induced_occurrences(g, fam)) {
                Graph sub = induced_subgraph(g, occ.vertices);
                CHECK(sub.edges() == occ.edges);
                CHECK(occ.edges.size() == occ.pattern.edge_count());
            }
        }
    }
}

TEST_CASE("core membership examples") {
    auto fam = FamilySpec::diamond();
    CHECK_FALSE(is_core_member_edge(path_graph(3), EdgeKey(0, 1), fam));
    Graph k4 = complete_graph(4);
    for (const auto& e : k4.edges()) {
        CHECK(is_core_member_edge(k4, e, fam));
    }
    Graph d = diamond();
    for (const auto& e : d.edges()) {
        CHECK(is_core_member_edge(d, e, fam));
        CHECK(edge_in_diamond_subgraph(d, e));
    }
    for (auto v : d.vertices()) {
        CHECK(is_core_member_vertex(d, v, fam));
    }
    CHECK_FALSE(is_core_member_vertex(Graph(1), 0, fam));
    Graph pendant = complete_graph(4);
    VertexId p = pendant.add_vertex();
    pendant.add_edge(3, p);
    CHECK_FALSE(is_core_member_vertex(pendant, p, fam));
    CHECK_THROWS_AS(is_core_member_edge(d, EdgeKey(0, 3), fam), PreconditionError);
    CHECK_THROWS_AS(is_core_member_edge(d, EdgeKey(0, 1), FamilySpec::s_diamond_only(2)), PreconditionError);
}

TEST_CASE("core membership matches subgraph search") {
    for (Seed seed = 0; seed < 80; ++seed) {
        Graph g = gen_gnp(4 + seed % 5, 0.5, seed + 1000);
        for (const auto& e : g.edges()) {
            CHECK(is_core_member_edge(g, e, FamilySpec::diamond()) == edge_in_diamond_subgraph(g, e));
        }
    }
}

TEST_CASE("core membership with a clique item") {
    // a triangle edge is core only when K3 itself is forbidden
    Graph tri = complete_graph(3);
    CHECK_FALSE(is_core_member_edge(tri, EdgeKey(0, 1), FamilySpec::diamond_and_clique(4)));
    CHECK(is_core_member_edge(tri, EdgeKey(0, 1), FamilySpec::diamond_and_clique(3)));
}

TEST_CASE("greedy packing") {
    auto fam = FamilySpec::diamond();
    auto one = greedy_packing(diamond(), 1, fam, true);
    CHECK_FALSE(one.budget_exceeded());
    CHECK(one.occurrences.size() == 1);
    CHECK(one.edges.size() == 5);

    auto two = greedy_packing(disjoint_union(diamond(), diamond()), 1, fam);
    CHECK(two.budget_exceeded());

    auto hard = gen_hard_structure(3);
    auto packed = greedy_packing(hard.graph, 3, fam, true);
    CHECK_FALSE(packed.budget_exceeded());
    CHECK(packed.occurrences.size() == 1);
}

TEST_CASE("packing covers every occurrence") {
    const FamilySpec fams[] = {FamilySpec::diamond(), FamilySpec::diamond_and_clique(4)};
    for (Seed seed = 0; seed < 100; ++seed) {
        Graph g = gen_gnp(5 + seed % 5, 0.5, seed + 77);
        for (const auto& fam : fams) {
            auto res = greedy_packing(g, 20, fam, true);
            REQUIRE_FALSE(res.budget_exceeded());
            for (std::size_t i = 0; i < res.occurrences.size(); ++i) {
                for (std::size_t j = i + 1; j < res.occurrences.size(); ++j) {
                    std::vector<EdgeKey> common;
                    std::set_intersection(res.occurrences[i].edges.begin(), res.occurrences[i].edges.end(),
                                          res.occurrences[j].edges.begin(), res.occurrences[j].edges.end(),
                                          std::back_inserter(common));
                    CHECK(common.empty());
                }
            }
            std::size_t limit = fam.max_occurrence_edges() * res.occurrences.size();
            CHECK(res.edges.size() <= limit);
        }
    }
}

TEST_CASE("clique partition") {
    Graph shared = make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(clique_partition(shared) == std::vector<VertexSet>{{0, 1, 2}, {2, 3, 4}});
    CHECK(clique_partition(Graph(3)) == std::vector<VertexSet>{{0}, {1}, {2}});
    Graph k4e = disjoint_union(complete_graph(4), complete_graph(2));
    CHECK(clique_partition(k4e) == std::vector<VertexSet>{{0, 1, 2, 3}, {4, 5}});
    try {
        clique_partition(diamond());
        FAIL("expected NotDiamondFreeError");
    } catch (const NotDiamondFreeError& err) {
        CHECK(err.witness().vertices == VertexSet{0, 1, 2, 3});
    }
}

TEST_CASE("clique partition properties on diamond-free graphs") {
    for (Seed seed = 0; seed < 40; ++seed) {
        PlantedBase base = clique_tree_base({3, 4, 2, 5, 3}, 0.7, seed);
        Graph g = base.graph();
        auto parts = clique_partition(g);
        std::vector<EdgeKey> covered;
        for (const auto& c : parts) {
            for (std::size_t i = 0; i < c.size(); ++i) {
                for (std::size_t j = i + 1; j < c.size(); ++j) {
                    REQUIRE(g.has_edge(c[i], c[j]));
                    covered.emplace_back(c[i], c[j]);
                }
            }
        }
        std::sort(covered.begin(), covered.end());
        CHECK(covered == g.edges());
        for (std::size_t i = 0; i < parts.size(); ++i) {
            for (std::size_t j = i + 1; j < parts.size(); ++j) {
                auto common = set_intersection(parts[i], parts[j]);
                CHECK(common.size() <= 1);
                if (common.size() == 1) {
                    for (auto a : set_difference(parts[i], common)) {
                        for (auto b : set_difference(parts[j], common)) {
                            CHECK_FALSE(g.has_edge(a, b));
                        }
                    }
                }
            }
        }
    }
}
