#include "dfed/graph.hpp"

#include <algorithm>
#include <iterator>

#include "dfed/errors.hpp"

namespace dfed {

EdgeKey::EdgeKey(VertexId a, VertexId b) : u_(std::min(a, b)), v_(std::max(a, b)) {
    if (a == b) {
        throw PreconditionError("edge endpoints must be distinct (got " + std::to_string(a) + ")");
    }
}

std::string to_string(const EdgeKey& e) {
    return "{" + std::to_string(e.u()) + "," + std::to_string(e.v()) + "}";
}

Graph::Graph(std::size_t n) : slots_(n), vertex_count_(n) {
    for (auto& s : slots_) {
        s.alive = true;
    }
}

const Graph::Slot& Graph::slot(VertexId v) const {
    if (v >= slots_.size() || !slots_[v].alive) {
        throw UnknownVertexError("unknown vertex " + std::to_string(v));
    }
    return slots_[v];
}

Graph::Slot& Graph::slot(VertexId v) {
    return const_cast<Slot&>(std::as_const(*this).slot(v));
}

VertexId Graph::add_vertex() {
    const auto id = static_cast<VertexId>(slots_.size());
    slots_.push_back(Slot{true, {}});
    ++vertex_count_;
    return id;
}

void Graph::remove_vertex(VertexId v) {
    Slot& s = slot(v);
    for (VertexId u : s.adj) {
        auto& adj = slots_[u].adj;
        adj.erase(std::lower_bound(adj.begin(), adj.end(), v));
    }
    edge_count_ -= s.adj.size();
    s.adj.clear();
    s.adj.shrink_to_fit();
    s.alive = false;
    --vertex_count_;
}

bool Graph::add_edge(VertexId a, VertexId b) {
    if (a == b) {
        throw PreconditionError("self-loop on vertex " + std::to_string(a));
    }
    auto& adj_a = slot(a).adj;
    auto& adj_b = slot(b).adj;
    auto it = std::lower_bound(adj_a.begin(), adj_a.end(), b);
    if (it != adj_a.end() && *it == b) {
        return false;
    }
    adj_a.insert(it, b);
    adj_b.insert(std::lower_bound(adj_b.begin(), adj_b.end(), a), a);
    ++edge_count_;
    return true;
}

bool Graph::remove_edge(VertexId a, VertexId b) {
    auto& adj_a = slot(a).adj;
    auto& adj_b = slot(b).adj;
    auto it = std::lower_bound(adj_a.begin(), adj_a.end(), b);
    if (it == adj_a.end() || *it != b) {
        return false;
    }
    adj_a.erase(it);
    adj_b.erase(std::lower_bound(adj_b.begin(), adj_b.end(), a));
    --edge_count_;
    return true;
}

bool Graph::has_vertex(VertexId v) const noexcept {
    return v < slots_.size() && slots_[v].alive;
}

bool Graph::has_edge(VertexId a, VertexId b) const noexcept {
    if (!has_vertex(a) || !has_vertex(b)) {
        return false;
    }
    const auto& sa = slots_[a].adj;
    const auto& sb = slots_[b].adj;
    return sa.size() <= sb.size() ? std::binary_search(sa.begin(), sa.end(), b)
                                  : std::binary_search(sb.begin(), sb.end(), a);
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    return slot(v).adj;
}

VertexSet Graph::vertices() const {
    VertexSet out;
    out.reserve(vertex_count_);
    for (VertexId v = 0; v < slots_.size(); ++v) {
        if (slots_[v].alive) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<EdgeKey> Graph::edges() const {
    std::vector<EdgeKey> out;
    out.reserve(edge_count_);
    for (VertexId v = 0; v < slots_.size(); ++v) {
        if (!slots_[v].alive) {
            continue;
        }
        for (VertexId u : slots_[v].adj) {
            if (u > v) {
                out.emplace_back(v, u);
            }
        }
    }
    return out;
}

void Graph::validate() const {
    std::size_t alive = 0;
    std::size_t degree_sum = 0;
    for (VertexId v = 0; v < slots_.size(); ++v) {
        const Slot& s = slots_[v];
        if (!s.alive) {
            if (!s.adj.empty()) {
                throw InvariantError("deleted vertex " + std::to_string(v) + " keeps adjacency");
            }
            continue;
        }
        ++alive;
        degree_sum += s.adj.size();
        if (!std::is_sorted(s.adj.begin(), s.adj.end()) ||
            std::adjacent_find(s.adj.begin(), s.adj.end()) != s.adj.end()) {
            throw InvariantError("adjacency of " + std::to_string(v) + " not sorted/unique");
        }
        for (VertexId u : s.adj) {
            if (u == v) {
                throw InvariantError("self-loop at " + std::to_string(v));
            }
            if (!has_vertex(u)) {
                throw InvariantError("dangling endpoint " + std::to_string(u));
            }
            const auto& back = slots_[u].adj;
            if (!std::binary_search(back.begin(), back.end(), v)) {
                throw InvariantError("asymmetric edge " + std::to_string(v) + "-" + std::to_string(u));
            }
        }
    }
    if (alive != vertex_count_ || degree_sum != 2 * edge_count_) {
        throw InvariantError("vertex/edge counters out of sync");
    }
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.vertex_count_ != b.vertex_count_ || a.edge_count_ != b.edge_count_) {
        return false;
    }
    const std::size_t bound = std::max(a.slots_.size(), b.slots_.size());
    for (VertexId v = 0; v < bound; ++v) {
        const bool in_a = a.has_vertex(v);
        if (in_a != b.has_vertex(v)) {
            return false;
        }
        if (in_a && a.slots_[v].adj != b.slots_[v].adj) {
            return false;
        }
    }
    return true;
}

bool contains(const VertexSet& set, VertexId v) {
    return std::binary_search(set.begin(), set.end(), v);
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet normalized(VertexSet vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

VertexSet common_neighbors(const Graph& g, VertexId a, VertexId b) {
    auto na = g.neighbors(a);
    auto nb = g.neighbors(b);
    VertexSet out;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
    return out;
}

namespace {

// Components of the subgraph induced by `members` (sorted), by smallest member.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& members) {
    std::vector<VertexSet> out;
    std::vector<char> seen(members.size(), 0);
    auto index_of = [&](VertexId v) -> std::ptrdiff_t {
        auto it = std::lower_bound(members.begin(), members.end(), v);
        return (it != members.end() && *it == v) ? it - members.begin() : -1;
    };
    std::vector<VertexId> stack;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (seen[i]) {
            continue;
        }
        VertexSet comp;
        seen[i] = 1;
        stack.push_back(members[i]);
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (VertexId y : g.neighbors(x)) {
                auto j = index_of(y);
                if (j >= 0 && !seen[j]) {
                    seen[j] = 1;
                    stack.push_back(y);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace

std::vector<VertexSet> neighborhood_components(const Graph& g, VertexId v) {
    auto nb = g.neighbors(v);
    return components_within(g, VertexSet(nb.begin(), nb.end()));
}

std::vector<VertexSet> connected_components(const Graph& g) {
    return components_within(g, g.vertices());
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vs) {
    VertexSet keep(vs.begin(), vs.end());
    keep = normalized(std::move(keep));
    Graph out;
    out.slots_.resize(g.slots_.size());
    for (VertexId v : keep) {
        g.slot(v);  // throws for unknown ids
        out.slots_[v].alive = true;
    }
    out.vertex_count_ = keep.size();
    for (VertexId v : keep) {
        auto& adj = out.slots_[v].adj;
        for (VertexId u : g.slots_[v].adj) {
            if (contains(keep, u)) {
                adj.push_back(u);
            }
        }
        out.edge_count_ += adj.size();
    }
    out.edge_count_ /= 2;
    return out;
}

Graph complement_restricted(const Graph& g, std::span<const VertexId> vs) {
    Graph out = induced_subgraph(g, vs);
    const VertexSet members = out.vertices();
    Graph comp = out;
    for (const EdgeKey& e : out.edges()) {
        comp.remove_edge(e);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (!out.has_edge(members[i], members[j])) {
                comp.add_edge(members[i], members[j]);
            }
        }
    }
    return comp;
}

Graph without_edges(const Graph& g, std::span<const EdgeKey> edges) {
    Graph out = g;
    for (const EdgeKey& e : edges) {
        out.remove_edge(e);
    }
    return out;
}

Graph without_vertices(const Graph& g, std::span<const VertexId> vs) {
    Graph out = g;
    for (VertexId v : vs) {
        if (out.has_vertex(v)) {
            out.remove_vertex(v);
        }
    }
    return out;
}

}  // namespace dfed
