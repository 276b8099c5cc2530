#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>

#include "doctest.h"
#include "dfed/instances.hpp"
#include "dfed/phase1.hpp"
#include "dfed/solver.hpp"
#include "helpers.hpp"

using namespace dfed;
using namespace dfed::testing;

namespace {

Instance inst_of(Graph g, int k, FamilySpec fam = FamilySpec::diamond()) { return Instance{std::move(g), k, fam}; }

// x=0, y=1 adjacent and both adjacent to the independent set {2,3,4,5}.
Graph sunflower_gadget() {
    Graph g(6);
    g.add_edge(0, 1);
    for (VertexId v = 2; v < 6; ++v) {
        g.add_edge(0, v);
        g.add_edge(1, v);
    }
    return g;
}

std::size_t distance(const Graph& g, VertexId from, VertexId to) {
    std::map<VertexId, std::size_t> dist{{from, 0}};
    std::queue<VertexId> todo;
    todo.push(from);
    while (!todo.empty()) {
        VertexId v = todo.front();
        todo.pop();
        if (v == to) {
            return dist[v];
        }
        for (VertexId u : g.neighbors(v)) {
            if (dist.emplace(u, dist[v] + 1).second) {
                todo.push(u);
            }
        }
    }
    return SIZE_MAX;
}

std::size_t disconnected_count(const Graph& g) {
    std::size_t n = 0;
    for (VertexId v : g.vertices()) {
        n += neighborhood_components(g, v).size() >= 2 ? 1 : 0;
    }
    return n;
}

}  // namespace

TEST_CASE("irrelevant edge") {
    Instance path = inst_of(path_graph(3), 1);
    auto e = rule_irrelevant_edge(path);
    REQUIRE(e);
    CHECK(*e == EdgeKey(0, 1));
    CHECK(path.graph.num_edges() == 1);
    CHECK(path.k == 1);

    Instance d = inst_of(diamond(), 1);
    CHECK_FALSE(rule_irrelevant_edge(d));

    Graph g = complete_graph(4);
    VertexId p = g.add_vertex();
    g.add_edge(3, p);
    Instance pendant = inst_of(g, 1);
    auto pe = rule_irrelevant_edge(pendant);
    REQUIRE(pe);
    CHECK(*pe == EdgeKey(3, p));
}

TEST_CASE("sunflower") {
    Instance one = inst_of(sunflower_gadget(), 1);
    auto e = rule_sunflower(one);
    REQUIRE(e);
    CHECK(*e == EdgeKey(0, 1));
    CHECK(one.k == 0);
    CHECK_FALSE(one.graph.has_edge(0, 1));

    // every solution of size 1 deletes x-y
    auto all = brute_force_all_min_deletions(sunflower_gadget(), FamilySpec::diamond(), 1);
    REQUIRE_FALSE(all.empty());
    for (const auto& sol : all) {
        CHECK(std::find(sol.begin(), sol.end(), EdgeKey(0, 1)) != sol.end());
    }

    Instance d = inst_of(diamond(), 1);
    CHECK_FALSE(rule_sunflower(d));
    Instance two = inst_of(sunflower_gadget(), 2);
    CHECK_FALSE(rule_sunflower(two));
    Instance zero = inst_of(sunflower_gadget(), 0);
    CHECK_FALSE(rule_sunflower(zero));
}

TEST_CASE("vertex split") {
    Instance bowtie = inst_of(make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}), 1);
    SplitProvenance prov;
    auto v = rule_vertex_split(bowtie, prov);
    REQUIRE(v);
    CHECK(*v == 0);
    CHECK_FALSE(bowtie.graph.has_vertex(0));
    CHECK(bowtie.graph.vertices() == VertexSet{1, 2, 3, 4, 5, 6});
    CHECK(connected_components(bowtie.graph) == std::vector<VertexSet>{{1, 2, 5}, {3, 4, 6}});
    REQUIRE(prov.size() == 2);
    CHECK(prov.at(5) == SplitOrigin{0, {1, 2}});
    CHECK(prov.at(6) == SplitOrigin{0, {3, 4}});

    Instance d = inst_of(diamond(), 1);
    CHECK_FALSE(rule_vertex_split(d, prov));

    Instance star = inst_of(make_graph(4, {{0, 1}, {0, 2}, {0, 3}}), 0);
    SplitProvenance p2;
    REQUIRE(rule_vertex_split(star, p2));
    CHECK(star.graph.num_vertices() == 6);
    CHECK(star.graph.num_edges() == 3);
    CHECK(connected_components(star.graph).size() == 3);
}

TEST_CASE("vertex split separates copies and shrinks the disconnected set") {
    for (Seed seed = 0; seed < 60; ++seed) {
        Instance inst = inst_of(gen_gnp(8, 0.35, seed), 2);
        std::size_t before = disconnected_count(inst.graph);
        SplitProvenance prov;
        auto v = rule_vertex_split(inst, prov);
        if (!v) {
            CHECK(before == 0);
            continue;
        }
        CHECK(disconnected_count(inst.graph) < before);
        std::vector<VertexId> fresh;
        for (const auto& [id, origin] : prov) {
            CHECK(origin.original == *v);
            fresh.push_back(id);
        }
        for (std::size_t i = 0; i < fresh.size(); ++i) {
            for (std::size_t j = i + 1; j < fresh.size(); ++j) {
                CHECK(distance(inst.graph, fresh[i], fresh[j]) >= 4);
            }
        }
    }
}

TEST_CASE("irrelevant component") {
    Instance mixed = inst_of(disjoint_union(diamond(), complete_graph(3)), 1);
    auto c = rule_irrelevant_component(mixed);
    REQUIRE(c);
    CHECK(*c == VertexSet{4, 5, 6});
    CHECK(mixed.graph.num_vertices() == 4);

    Instance d = inst_of(diamond(), 1);
    CHECK_FALSE(rule_irrelevant_component(d));

    Instance k4d = inst_of(disjoint_union(complete_graph(4), diamond()), 1);
    auto k = rule_irrelevant_component(k4d);
    REQUIRE(k);
    CHECK(*k == VertexSet{0, 1, 2, 3});
}

TEST_CASE("phase 1 examples") {
    auto d = run_phase1(inst_of(diamond(), 1));
    CHECK(d.instance.graph == diamond());
    CHECK(d.instance.k == 1);
    CHECK(d.log.empty());

    auto tri = run_phase1(inst_of(complete_graph(3), 0));
    CHECK(tri.instance.graph.empty());

    for (int k = 2; k <= 6; ++k) {
        Instance hard = gen_hard_structure(k);
        auto out = run_phase1(hard);
        CHECK(out.instance == hard);
    }
    CHECK(run_phase1(inst_of(Graph{}, 0)).instance.graph.empty());
    CHECK_THROWS_AS(run_phase1(inst_of(diamond(), 1, FamilySpec::s_diamond_only(2))), PreconditionError);
}

TEST_CASE("phase 1 log replays and counts firings") {
    for (Seed seed = 0; seed < 40; ++seed) {
        Instance in = inst_of(gen_gnp(8, 0.5, seed + 300), 2);
        auto out = run_phase1(in);
        CHECK(replay(in.graph, out.log) == out.instance.graph);
        std::size_t total = 0;
        for (const auto& [rule, count] : out.firing_counts()) {
            total += count;
        }
        CHECK(total == out.log.size());
        std::size_t size = in.graph.num_vertices() + in.graph.num_edges();
        CHECK(out.log.size() <= 4 * size * size);
        for (const auto& ev : out.log) {
            CHECK(ev.k_after <= ev.k_before);
        }
    }
}

TEST_CASE("phase 1 fixpoint properties") {
    for (Seed seed = 0; seed < 60; ++seed) {
        FamilySpec fam = seed % 2 ? FamilySpec::diamond_and_clique(4) : FamilySpec::diamond();
        Instance in = inst_of(gen_gnp(9, 0.5, seed + 500), static_cast<int>(seed % 4), fam);
        auto out = run_phase1(in);
        const Graph& g = out.instance.graph;
        for (const auto& e : g.edges()) {
            CHECK(is_core_member_edge(g, e, fam));
        }
        for (auto v : g.vertices()) {
            CHECK(neighborhood_components(g, v).size() <= 1);
        }
        CHECK(g.num_edges() <= in.graph.num_edges());
        CHECK(g.num_vertices() <= 2 * in.graph.num_edges());
        CHECK(out.instance.k <= in.k);
    }
}

TEST_CASE("single rules preserve the decision") {
    for (Seed seed = 0; seed < 60; ++seed) {
        Instance in = inst_of(gen_gnp(7, 0.5, seed + 900), static_cast<int>(seed % 4));
        bool yes = brute_force_min_deletion(in.graph, in.family, in.k).has_value();
        Instance a = in;
        if (rule_sunflower(a)) {
            CHECK(brute_force_min_deletion(a.graph, a.family, a.k).has_value() == yes);
        }
        Instance b = in;
        if (rule_irrelevant_edge(b)) {
            CHECK(brute_force_min_deletion(b.graph, b.family, b.k).has_value() == yes);
        }
    }
}
