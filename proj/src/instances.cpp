#include "dfed/instances.hpp"

#include <algorithm>
#include <limits>

namespace dfed {

Rng::Rng(Seed seed) : engine_(seed) {}

double Rng::unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::between(std::uint64_t lo, std::uint64_t hi) {
    if (hi < lo) {
        throw PreconditionError("empty range");
    }
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) {
        return engine_();
    }
    // Rejection sampling keeps the draw exactly uniform.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = engine_();
    while (x >= limit) {
        x = engine_();
    }
    return lo + x % span;
}

Graph gen_gnp(std::size_t n, double p, Seed seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw PreconditionError("edge probability must lie in [0, 1]");
    }
    Rng rng(seed);
    Graph g(n);
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) {
            if (rng.unit() < p) {
                g.add_edge(a, b);
            }
        }
    }
    return g;
}

void PlantedBase::validate() const {
    for (const VertexSet& c : cliques) {
        if (c.empty()) {
            throw PreconditionError("planted base has an empty clique");
        }
        if (normalized(c) != c) {
            throw PreconditionError("planted base clique is not sorted and duplicate-free");
        }
        if (c.back() >= n) {
            throw PreconditionError("planted base clique vertex " + std::to_string(c.back()) + " out of range");
        }
    }
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        for (std::size_t j = i + 1; j < cliques.size(); ++j) {
            if (set_intersection(cliques[i], cliques[j]).size() > 1) {
                throw PreconditionError("planted base cliques " + std::to_string(i) + " and " + std::to_string(j) +
                                        " share more than one vertex");
            }
        }
    }
    if (auto occ = find_induced_occurrence(graph(), FamilySpec::diamond())) {
        throw PreconditionError("planted base is not diamond-free");
    }
}

Graph PlantedBase::graph() const {
    Graph g(n);
    for (const VertexSet& c : cliques) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                g.add_edge(c[i], c[j]);
            }
        }
    }
    return g;
}

PlantedBase clique_tree_base(const std::vector<std::size_t>& sizes, double glue_probability, Seed seed) {
    Rng rng(seed);
    PlantedBase base;
    for (std::size_t size : sizes) {
        if (size == 0) {
            throw PreconditionError("clique sizes must be positive");
        }
        VertexSet clique;
        if (base.n > 0 && rng.unit() < glue_probability) {
            clique.push_back(static_cast<VertexId>(rng.between(0, base.n - 1)));
        }
        while (clique.size() < size) {
            clique.push_back(static_cast<VertexId>(base.n++));
        }
        base.cliques.push_back(normalized(std::move(clique)));
    }
    return base;
}

Instance gen_planted_yes(const PlantedBase& base, int extra_edges, Seed seed) {
    base.validate();
    if (extra_edges < 0) {
        throw PreconditionError("extra edge count must be non-negative");
    }
    Graph g = base.graph();
    std::vector<EdgeKey> absent;
    for (VertexId a = 0; a < base.n; ++a) {
        for (VertexId b = a + 1; b < base.n; ++b) {
            if (!g.has_edge(a, b)) {
                absent.emplace_back(a, b);
            }
        }
    }
    const auto want = static_cast<std::size_t>(extra_edges);
    if (want > absent.size()) {
        throw PreconditionError("base has only " + std::to_string(absent.size()) + " non-edges");
    }
    Rng rng(seed);
    // Partial Fisher-Yates: the first `want` slots become a uniform sample.
    for (std::size_t i = 0; i < want; ++i) {
        std::swap(absent[i], absent[rng.between(i, absent.size() - 1)]);
    }
    for (std::size_t i = 0; i < want; ++i) {
        g.add_edge(absent[i]);
    }
    return {std::move(g), extra_edges, FamilySpec::diamond()};
}

Instance gen_hard_structure(int k) {
    if (k < 2) {
        throw PreconditionError("hard structure needs k >= 2");
    }
    const auto kk = static_cast<VertexId>(k);
    Graph g(kk * kk + 4);
    const VertexId w1 = kk * kk;
    const VertexId w2 = w1 + 1;
    const VertexId w3 = w1 + 2;
    const VertexId w4 = w1 + 3;
    for (VertexId i = 0; i < kk; ++i) {
        for (VertexId a = i * kk; a < (i + 1) * kk; ++a) {
            for (VertexId b = a + 1; b < (i + 1) * kk; ++b) {
                g.add_edge(a, b);
            }
            g.add_edge(a, w1);
        }
        g.add_edge(i * kk, w2);
    }
    g.add_edge(w1, w2);
    g.add_edge(w1, w3);
    g.add_edge(w1, w4);
    g.add_edge(w2, w3);
    g.add_edge(w2, w4);
    return {std::move(g), k, FamilySpec::diamond()};
}

std::vector<CorpusItem> random_corpus(std::size_t count, const FamilySpec& fam, Seed seed) {
    static constexpr double densities[] = {0.3, 0.5, 0.7};
    Rng rng(seed);
    std::vector<CorpusItem> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        CorpusItem item;
        item.n = rng.between(5, 9);
        item.p = densities[rng.between(0, 2)];
        const int k = static_cast<int>(rng.between(0, 3));
        item.seed = rng.between(0, std::numeric_limits<std::uint64_t>::max());
        item.instance = {gen_gnp(item.n, item.p, item.seed), k, fam};
        out.push_back(std::move(item));
    }
    return out;
}

StageOutput subdivide_twice(const Graph& g, int k) {
    StageOutput out{g, k + static_cast<int>(g.num_edges()), {}};
    out.trace.stages = {"subdivide"};
    out.trace.source = g;
    out.trace.source_k = k;
    for (const EdgeKey& e : g.edges()) {
        out.graph.remove_edge(e);
        const VertexId x1 = out.graph.add_vertex();
        const VertexId x2 = out.graph.add_vertex();
        out.graph.add_edge(e.u(), x1);
        out.graph.add_edge(x1, x2);
        out.graph.add_edge(x2, e.v());
        out.trace.subdivisions.emplace(e, std::make_pair(x1, x2));
    }
    out.trace.budget_offset = static_cast<int>(g.num_edges());
    out.trace.result = out.graph;
    out.trace.result_k = out.k;
    return out;
}

StageOutput attach_stars(const Graph& g, int c, int k) {
    if (c < 1) {
        throw PreconditionError("attach_stars needs at least one leaf per vertex");
    }
    StageOutput out{g, k, {}};
    out.trace.stages = {"stars"};
    out.trace.source = g;
    out.trace.source_k = k;
    for (VertexId v : g.vertices()) {
        for (int i = 0; i < c; ++i) {
            const VertexId leaf = out.graph.add_vertex();
            out.graph.add_edge(v, leaf);
            out.trace.leaf_center.emplace(leaf, v);
        }
    }
    out.trace.result = out.graph;
    out.trace.result_k = k;
    return out;
}

NotTriangleFreeError::NotTriangleFreeError(VertexSet triangle)
    : PreconditionError("graph is not triangle-free"), witness_(std::move(triangle)) {}

StageOutput add_universal(const Graph& g, int k) {
    for (const EdgeKey& e : g.edges()) {
        const VertexSet common = common_neighbors(g, e.u(), e.v());
        if (!common.empty()) {
            throw NotTriangleFreeError(normalized({e.u(), e.v(), common.front()}));
        }
    }
    StageOutput out{g, k, {}};
    out.trace.stages = {"universal"};
    out.trace.source = g;
    out.trace.source_k = k;
    const VertexId w = out.graph.add_vertex();
    for (VertexId v : g.vertices()) {
        out.graph.add_edge(w, v);
    }
    out.trace.universal = w;
    out.trace.result = out.graph;
    out.trace.result_k = k;
    return out;
}

ReducedInstance reduce_vc_to_sdfed(const Graph& g, int k, int s) {
    if (s < 1) {
        throw PreconditionError("s-diamond requires s >= 1");
    }
    if (k < 0) {
        throw PreconditionError("budget must be non-negative");
    }
    StageOutput sub = subdivide_twice(g, k);
    StageOutput stars = attach_stars(sub.graph, s, sub.k);
    StageOutput uni = add_universal(stars.graph, stars.k);

    ReductionTrace trace = std::move(sub.trace);
    trace.stages = {"subdivide", "stars", "universal"};
    trace.leaf_center = std::move(stars.trace.leaf_center);
    trace.universal = uni.trace.universal;
    trace.result = uni.graph;
    trace.result_k = uni.k;
    trace.s = s;
    return {{std::move(uni.graph), uni.k, FamilySpec::s_diamond_only(s)}, std::move(trace)};
}

bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
    const VertexSet c = normalized(cover);
    for (const EdgeKey& e : g.edges()) {
        if (!contains(c, e.u()) && !contains(c, e.v())) {
            return false;
        }
    }
    return true;
}

namespace {

VertexSet lift_pairs(const ReductionTrace& trace, const std::vector<EdgeKey>& pairs) {
    const VertexId w = *trace.universal;
    VertexSet selected;
    for (const EdgeKey& e : pairs) {
        // A pair away from w is charged to the w-edge of its smaller endpoint.
        selected.push_back(e.touches(w) ? e.other(w) : e.u());
    }
    for (VertexId& v : selected) {
        if (auto it = trace.leaf_center.find(v); it != trace.leaf_center.end()) {
            v = it->second;
        }
    }
    selected = normalized(std::move(selected));
    VertexSet cover;
    for (VertexId v : selected) {
        if (trace.source.has_vertex(v)) {
            cover.push_back(v);
        }
    }
    VertexSet extra;
    for (const EdgeKey& e : trace.source.edges()) {
        if (!contains(cover, e.u()) && !contains(cover, e.v())) {
            extra.push_back(e.u());
        }
    }
    return normalized(set_union(cover, normalized(std::move(extra))));
}

void require_full_trace(const ReductionTrace& trace) {
    if (!trace.universal || trace.s < 1) {
        throw PreconditionError("lift_solution needs the trace of a full reduce_vc_to_sdfed pipeline");
    }
}

}  // namespace

VertexSet lift_solution(const ReductionTrace& trace, const DeletionSet& sol) {
    require_full_trace(trace);
    if (static_cast<int>(sol.size()) > trace.result_k ||
        !is_deletion_solution(trace.result, FamilySpec::s_diamond_only(trace.s), sol)) {
        throw PreconditionError("lift_solution: not a solution of the reduced instance");
    }
    return lift_pairs(trace, sol);
}

VertexSet lift_solution(const ReductionTrace& trace, const EditSet& sol) {
    require_full_trace(trace);
    if (static_cast<int>(sol.size()) > trace.result_k ||
        !is_edit_solution(trace.result, FamilySpec::s_diamond_only(trace.s), sol)) {
        throw PreconditionError("lift_solution: not an edit solution of the reduced instance");
    }
    std::vector<EdgeKey> pairs = sol.deletions;
    pairs.insert(pairs.end(), sol.additions.begin(), sol.additions.end());
    return lift_pairs(trace, pairs);
}

}  // namespace dfed
