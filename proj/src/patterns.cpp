#include "dfed/patterns.hpp"

#include <algorithm>
#include <set>

namespace dfed {

std::size_t Pattern::vertex_count() const {
    return kind == Kind::SDiamond ? static_cast<std::size_t>(size) + 3 : static_cast<std::size_t>(size);
}

std::size_t Pattern::edge_count() const {
    const auto n = static_cast<std::size_t>(size);
    return kind == Kind::SDiamond ? 2 * (n + 1) + 1 : n * (n - 1) / 2;
}

std::string Pattern::token() const {
    if (kind == Kind::Clique) {
        return "k" + std::to_string(size);
    }
    return size == 1 ? "diamond" : std::to_string(size) + "-diamond";
}

FamilySpec::FamilySpec(std::optional<int> s_diamond, std::optional<int> clique)
    : s_(s_diamond), t_(clique) {
    if (!s_ && !t_) {
        throw PreconditionError("family must contain at least one pattern");
    }
    if (s_ && *s_ < 1) {
        throw PreconditionError("s-diamond requires s >= 1");
    }
    if (t_ && *t_ < 3) {
        throw PreconditionError("clique pattern requires t >= 3");
    }
}

std::vector<Pattern> FamilySpec::patterns() const {
    std::vector<Pattern> out;
    if (s_) {
        out.push_back(Pattern::s_diamond(*s_));
    }
    if (t_) {
        out.push_back(Pattern::clique(*t_));
    }
    return out;
}

std::size_t FamilySpec::max_occurrence_edges() const {
    std::size_t best = 0;
    for (const Pattern& p : patterns()) {
        best = std::max(best, p.edge_count());
    }
    return best;
}

std::size_t FamilySpec::max_occurrence_vertices() const {
    std::size_t best = 0;
    for (const Pattern& p : patterns()) {
        best = std::max(best, p.vertex_count());
    }
    return best;
}

std::string FamilySpec::token() const {
    std::string out;
    for (const Pattern& p : patterns()) {
        if (!out.empty()) {
            out += ',';
        }
        out += p.token();
    }
    return out;
}

NotDiamondFreeError::NotDiamondFreeError(PatternOccurrence witness)
    : PreconditionError("graph is not diamond-free"), witness_(std::move(witness)) {}

namespace {

// Calls fn(x, y, independent) for every edge {x,y} and every (s+1)-subset of
// pairwise non-adjacent common neighbors; stops early when fn returns true.
template <class Fn>
bool for_each_s_diamond(const Graph& g, int s, Fn&& fn) {
    const auto need = static_cast<std::size_t>(s) + 1;
    VertexSet chosen;
    for (const EdgeKey& e : g.edges()) {
        const VertexSet common = common_neighbors(g, e.u(), e.v());
        if (common.size() < need) {
            continue;
        }
        chosen.clear();
        auto extend = [&](auto&& self, std::size_t from) -> bool {
            if (chosen.size() == need) {
                return fn(e.u(), e.v(), chosen);
            }
            for (std::size_t i = from; i + (need - chosen.size()) <= common.size(); ++i) {
                const VertexId c = common[i];
                bool independent = std::none_of(chosen.begin(), chosen.end(),
                                                [&](VertexId o) { return g.has_edge(c, o); });
                if (!independent) {
                    continue;
                }
                chosen.push_back(c);
                if (self(self, i + 1)) {
                    return true;
                }
                chosen.pop_back();
            }
            return false;
        };
        if (extend(extend, 0)) {
            return true;
        }
    }
    return false;
}

// Calls fn(clique) for every t-clique as an ascending tuple, in lexicographic order.
template <class Fn>
bool for_each_clique(const Graph& g, int t, Fn&& fn) {
    const auto need = static_cast<std::size_t>(t);
    VertexSet chosen;
    auto extend = [&](auto&& self, const VertexSet& candidates) -> bool {
        if (chosen.size() == need) {
            return fn(chosen);
        }
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (candidates.size() - i < need - chosen.size()) {
                break;
            }
            const VertexId c = candidates[i];
            VertexSet next;
            for (std::size_t j = i + 1; j < candidates.size(); ++j) {
                if (g.has_edge(c, candidates[j])) {
                    next.push_back(candidates[j]);
                }
            }
            chosen.push_back(c);
            if (self(self, next)) {
                return true;
            }
            chosen.pop_back();
        }
        return false;
    };
    return extend(extend, g.vertices());
}

PatternOccurrence make_s_diamond(int s, VertexId x, VertexId y, const VertexSet& independent) {
    PatternOccurrence occ{Pattern::s_diamond(s), {}, {}};
    occ.vertices = independent;
    occ.vertices.push_back(x);
    occ.vertices.push_back(y);
    occ.vertices = normalized(std::move(occ.vertices));
    occ.edges.emplace_back(x, y);
    for (VertexId c : independent) {
        occ.edges.emplace_back(x, c);
        occ.edges.emplace_back(y, c);
    }
    std::sort(occ.edges.begin(), occ.edges.end());
    return occ;
}

PatternOccurrence make_clique(const VertexSet& members) {
    PatternOccurrence occ{Pattern::clique(static_cast<int>(members.size())), members, {}};
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            occ.edges.emplace_back(members[i], members[j]);
        }
    }
    return occ;
}

std::optional<PatternOccurrence> first_s_diamond(const Graph& g, int s) {
    std::optional<PatternOccurrence> best;
    for_each_s_diamond(g, s, [&](VertexId x, VertexId y, const VertexSet& independent) {
        // Cheap pre-check on the smallest vertex before building the occurrence.
        if (best) {
            VertexId lo = std::min({x, y, independent.front()});
            if (lo > best->vertices.front()) {
                return false;
            }
        }
        PatternOccurrence occ = make_s_diamond(s, x, y, independent);
        if (!best || occ.vertices < best->vertices) {
            best = std::move(occ);
        }
        return false;
    });
    return best;
}

bool has_clique_in(const Graph& g, const VertexSet& candidates, std::size_t need) {
    if (need == 0) {
        return true;
    }
    for (std::size_t i = 0; i + need <= candidates.size(); ++i) {
        VertexSet next;
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            if (g.has_edge(candidates[i], candidates[j])) {
                next.push_back(candidates[j]);
            }
        }
        if (has_clique_in(g, next, need - 1)) {
            return true;
        }
    }
    return false;
}

bool in_diamond_subgraph(const Graph& g, VertexId x, VertexId y) {
    const VertexSet common = common_neighbors(g, x, y);
    if (common.size() >= 2) {
        return true;
    }
    if (common.empty()) {
        return false;
    }
    // Exactly one common neighbor a: a fourth vertex must see a and one of x, y.
    const VertexId a = common.front();
    return common_neighbors(g, a, x).size() > 1 || common_neighbors(g, a, y).size() > 1;
}

void require_core_family(const FamilySpec& fam) {
    if (!fam.supports_core_membership()) {
        throw PreconditionError("core membership is only defined here for {diamond} and {diamond, K_t}, got " +
                                fam.token());
    }
}

}  // namespace

std::optional<PatternOccurrence> find_induced_occurrence(const Graph& g, const FamilySpec& fam) {
    if (fam.s_diamond()) {
        if (auto occ = first_s_diamond(g, *fam.s_diamond())) {
            return occ;
        }
    }
    if (fam.clique()) {
        std::optional<PatternOccurrence> found;
        for_each_clique(g, *fam.clique(), [&](const VertexSet& members) {
            found = make_clique(members);
            return true;
        });
        return found;
    }
    return std::nullopt;
}

std::vector<PatternOccurrence> enumerate_induced_occurrences(const Graph& g, const FamilySpec& fam) {
    std::vector<PatternOccurrence> out;
    if (fam.s_diamond()) {
        const int s = *fam.s_diamond();
        for_each_s_diamond(g, s, [&](VertexId x, VertexId y, const VertexSet& independent) {
            out.push_back(make_s_diamond(s, x, y, independent));
            return false;
        });
        std::sort(out.begin(), out.end(),
                  [](const PatternOccurrence& a, const PatternOccurrence& b) { return a.vertices < b.vertices; });
    }
    if (fam.clique()) {
        for_each_clique(g, *fam.clique(), [&](const VertexSet& members) {
            out.push_back(make_clique(members));
            return false;
        });
    }
    return out;
}

bool is_family_free(const Graph& g, const FamilySpec& fam) {
    if (fam.s_diamond() && for_each_s_diamond(g, *fam.s_diamond(), [](auto, auto, const auto&) { return true; })) {
        return false;
    }
    if (fam.clique() && for_each_clique(g, *fam.clique(), [](const auto&) { return true; })) {
        return false;
    }
    return true;
}

bool is_core_member_edge(const Graph& g, const EdgeKey& e, const FamilySpec& fam) {
    require_core_family(fam);
    if (!g.has_edge(e)) {
        throw PreconditionError("edge " + to_string(e) + " is not in the graph");
    }
    if (in_diamond_subgraph(g, e.u(), e.v())) {
        return true;
    }
    if (fam.clique()) {
        return has_clique_in(g, common_neighbors(g, e.u(), e.v()), static_cast<std::size_t>(*fam.clique()) - 2);
    }
    return false;
}

bool is_core_member_vertex(const Graph& g, VertexId v, const FamilySpec& fam) {
    require_core_family(fam);
    // Every vertex of a diamond or clique subgraph is incident to one of its edges.
    for (VertexId u : g.neighbors(v)) {
        if (is_core_member_edge(g, EdgeKey(v, u), fam)) {
            return true;
        }
    }
    return false;
}

PackingResult greedy_packing(const Graph& g, int k, const FamilySpec& fam, bool check) {
    if (k < 0) {
        throw PreconditionError("budget must be non-negative");
    }
    PackingResult result;
    // First fit over the occurrences of g in detector order: each pick is
    // the first occurrence edge-disjoint from everything packed so far.
    std::set<EdgeKey> used;
    for (PatternOccurrence& occ : enumerate_induced_occurrences(g, fam)) {
        if (std::any_of(occ.edges.begin(), occ.edges.end(), [&](const EdgeKey& e) { return used.contains(e); })) {
            continue;
        }
        used.insert(occ.edges.begin(), occ.edges.end());
        result.edges.insert(result.edges.end(), occ.edges.begin(), occ.edges.end());
        result.occurrences.push_back(std::move(occ));
        if (result.occurrences.size() >= static_cast<std::size_t>(k) + 1) {
            result.status = PackingResult::Status::BudgetExceeded;
            break;
        }
    }
    std::sort(result.edges.begin(), result.edges.end());
    if (check && !result.budget_exceeded()) {
        for (const PatternOccurrence& occ : enumerate_induced_occurrences(g, fam)) {
            bool hit = std::any_of(occ.edges.begin(), occ.edges.end(), [&](const EdgeKey& e) {
                return std::binary_search(result.edges.begin(), result.edges.end(), e);
            });
            if (!hit) {
                throw InvariantError("packing is not maximal: occurrence misses X");
            }
        }
    }
    return result;
}

std::vector<VertexSet> clique_partition(const Graph& g) {
    if (auto witness = find_induced_occurrence(g, FamilySpec::diamond())) {
        throw NotDiamondFreeError(std::move(*witness));
    }
    std::vector<VertexSet> out;
    std::set<EdgeKey> covered;
    for (const EdgeKey& e : g.edges()) {
        if (covered.contains(e)) {
            continue;
        }
        // In a diamond-free graph the common neighborhood of an edge is a clique.
        VertexSet clique = common_neighbors(g, e.u(), e.v());
        clique.push_back(e.u());
        clique.push_back(e.v());
        clique = normalized(std::move(clique));
        for (std::size_t i = 0; i < clique.size(); ++i) {
            for (std::size_t j = i + 1; j < clique.size(); ++j) {
                covered.emplace(clique[i], clique[j]);
            }
        }
        out.push_back(std::move(clique));
    }
    for (VertexId v : g.vertices()) {
        if (g.degree(v) == 0) {
            out.push_back({v});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dfed
