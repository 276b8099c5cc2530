#include "dfed/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>
#include <string>

namespace dfed {

bool is_deletion_solution(const Graph& g, const FamilySpec& fam, const DeletionSet& deletions) {
    for (const EdgeKey& e : deletions) {
        if (!g.has_edge(e)) {
            return false;
        }
    }
    return is_family_free(without_edges(g, deletions), fam);
}

Graph apply_edits(const Graph& g, const EditSet& edits) {
    Graph out = g;
    for (const EdgeKey& e : edits.deletions) {
        if (!out.remove_edge(e)) {
            throw PreconditionError("edit deletes missing edge " + to_string(e));
        }
    }
    for (const EdgeKey& e : edits.additions) {
        if (!out.has_vertex(e.u()) || !out.has_vertex(e.v())) {
            throw UnknownVertexError("edit adds edge on unknown vertex " + to_string(e));
        }
        if (!out.add_edge(e)) {
            throw PreconditionError("edit adds existing edge " + to_string(e));
        }
    }
    return out;
}

bool is_edit_solution(const Graph& g, const FamilySpec& fam, const EditSet& edits) {
    try {
        return is_family_free(apply_edits(g, edits), fam);
    } catch (const Error&) {
        return false;
    }
}

namespace {

bool branch(Graph& g, const FamilySpec& fam, int k, DeletionSet& chosen, const SolveOptions& options) {
    if (options.stats) {
        ++options.stats->nodes;
    }
    auto occ = find_induced_occurrence(g, fam);
    if (!occ) {
        return true;
    }
    if (k == 0) {
        return false;
    }
    if (options.packing_bound && greedy_packing(g, k, fam).budget_exceeded()) {
        return false;
    }
    if (options.stats) {
        options.stats->max_branching = std::max(options.stats->max_branching, occ->edges.size());
    }
    for (const EdgeKey& e : occ->edges) {
        g.remove_edge(e);
        chosen.push_back(e);
        if (branch(g, fam, k - 1, chosen, options)) {
            return true;
        }
        chosen.pop_back();
        g.add_edge(e);
    }
    return false;
}

}  // namespace

Solution solve_branching(const Instance& inst, const SolveOptions& options) {
    if (inst.k < 0) {
        return std::nullopt;
    }
    Graph g = inst.graph;
    DeletionSet chosen;
    if (!branch(g, inst.family, inst.k, chosen, options)) {
        return std::nullopt;
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

// ---------------------------------------------------------------------------
// Brute force

std::uint64_t default_oracle_cap() {
    constexpr std::uint64_t fallback = 10'000'000;
    const char* env = std::getenv("DIAMOND_KERNEL_ORACLE_CAP");
    if (env == nullptr || *env == '\0') {
        return fallback;
    }
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0) {
        return fallback;
    }
    return value;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) {
        return 0;
    }
    r = std::min(r, n - r);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        const std::uint64_t num = n - r + i;
        // result * num / i is exact at every step; guard the multiplication.
        if (result > std::numeric_limits<std::uint64_t>::max() / num) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        result = result * num / i;
    }
    return result;
}

namespace {

using Mask = std::uint64_t;

// Dense copy of a small graph: vertex i of `ids` is bit i.
struct Dense {
    VertexSet ids;
    std::vector<Mask> adj;

    explicit Dense(const Graph& g) : ids(g.vertices()), adj(ids.size(), 0) {
        if (ids.size() > 63) {
            throw GuardError("brute-force oracle supports at most 63 vertices, got " + std::to_string(ids.size()));
        }
        for (const EdgeKey& e : g.edges()) {
            toggle(index(e.u()), index(e.v()));
        }
    }

    int index(VertexId v) const {
        return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    }
    int size() const { return static_cast<int>(ids.size()); }
    Mask all() const { return ids.empty() ? 0 : (Mask{1} << ids.size()) - 1; }
    void toggle(int a, int b) {
        adj[a] ^= Mask{1} << b;
        adj[b] ^= Mask{1} << a;
    }
    bool has(int a, int b) const { return (adj[a] >> b) & 1; }
};

std::vector<Mask> subsets_of_size(int n, int r) {
    std::vector<Mask> out;
    if (r > n || r < 0) {
        return out;
    }
    if (r == 0) {
        out.push_back(0);
        return out;
    }
    // Gosper's hack over n <= 63 bits.
    Mask m = (Mask{1} << r) - 1;
    const Mask limit = Mask{1} << n;
    while (m < limit) {
        out.push_back(m);
        const Mask c = m & (~m + 1);
        const Mask r2 = m + c;
        m = (((r2 ^ m) >> 2) / c) | r2;
    }
    return out;
}

// Induced-copy tests over precomputed vertex subsets.
class FreenessOracle {
public:
    FreenessOracle(int n, const FamilySpec& fam) {
        if (fam.s_diamond()) {
            s_ = *fam.s_diamond();
            diamond_sets_ = subsets_of_size(n, s_ + 3);
        }
        if (fam.clique()) {
            clique_sets_ = subsets_of_size(n, *fam.clique());
        }
    }

    bool is_free(const std::vector<Mask>& adj) const {
        for (Mask m : diamond_sets_) {
            if (is_s_diamond(adj, m)) {
                return false;
            }
        }
        for (Mask m : clique_sets_) {
            if (is_clique(adj, m)) {
                return false;
            }
        }
        return true;
    }

private:
    bool is_s_diamond(const std::vector<Mask>& adj, Mask m) const {
        const int hub_degree = s_ + 2;
        int hubs[2];
        int hub_count = 0;
        for (Mask rest = m; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const int d = std::popcount(adj[v] & m);
            if (d == hub_degree) {
                if (hub_count == 2) {
                    return false;
                }
                hubs[hub_count++] = v;
            } else if (d != 2) {
                return false;
            }
        }
        return hub_count == 2 && ((adj[hubs[0]] >> hubs[1]) & 1);
    }

    static bool is_clique(const std::vector<Mask>& adj, Mask m) {
        for (Mask rest = m; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            if ((adj[v] & m) != (m & ~(Mask{1} << v))) {
                return false;
            }
        }
        return true;
    }

    int s_ = 0;
    std::vector<Mask> diamond_sets_;
    std::vector<Mask> clique_sets_;
};

void guard(std::uint64_t candidates, int kmax, std::uint64_t cap, const char* what) {
    const auto r = std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(kmax, 0)), candidates);
    const std::uint64_t count = binomial(candidates, r);
    if (count > cap) {
        throw GuardError(std::string(what) + ": C(" + std::to_string(candidates) + ", " + std::to_string(r) +
                         ") = " + std::to_string(count) + " exceeds the enumeration cap " + std::to_string(cap) +
                         " (set DIAMOND_KERNEL_ORACLE_CAP to raise it)");
    }
}

// Calls fn(indices) for every r-combination of 0..n-1 in lexicographic
// order; stops when fn returns true.
template <class Fn>
bool for_each_combination(int n, int r, Fn&& fn) {
    if (r > n) {
        return false;
    }
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        idx[static_cast<std::size_t>(i)] = i;
    }
    while (true) {
        if (fn(idx)) {
            return true;
        }
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) {
            --i;
        }
        if (i < 0) {
            return false;
        }
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j) {
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

struct PairSearch {
    std::optional<int> minimum;
    std::vector<std::vector<std::pair<int, int>>> optima;  // filled when collecting
};

// Smallest j <= kmax such that toggling some j of the candidate pairs
// leaves dense.adj free; optionally collects every such j-set.
PairSearch search_pairs(Dense& dense, const FamilySpec& fam, const std::vector<std::pair<int, int>>& pairs,
                        int kmax, bool collect) {
    const FreenessOracle oracle(dense.size(), fam);
    PairSearch result;
    for (int j = 0; j <= std::min<int>(kmax, static_cast<int>(pairs.size())); ++j) {
        for_each_combination(static_cast<int>(pairs.size()), j, [&](const std::vector<int>& idx) {
            for (int i : idx) {
                dense.toggle(pairs[static_cast<std::size_t>(i)].first, pairs[static_cast<std::size_t>(i)].second);
            }
            const bool ok = oracle.is_free(dense.adj);
            for (int i : idx) {
                dense.toggle(pairs[static_cast<std::size_t>(i)].first, pairs[static_cast<std::size_t>(i)].second);
            }
            if (ok) {
                result.minimum = j;
                if (!collect) {
                    return true;
                }
                std::vector<std::pair<int, int>> chosen;
                for (int i : idx) {
                    chosen.push_back(pairs[static_cast<std::size_t>(i)]);
                }
                result.optima.push_back(std::move(chosen));
            }
            return false;
        });
        if (result.minimum) {
            break;
        }
    }
    return result;
}

std::vector<std::pair<int, int>> edge_pairs(const Dense& d) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < d.size(); ++a) {
        for (int b = a + 1; b < d.size(); ++b) {
            if (d.has(a, b)) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

std::vector<std::pair<int, int>> all_pairs(const Dense& d) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < d.size(); ++a) {
        for (int b = a + 1; b < d.size(); ++b) {
            out.emplace_back(a, b);
        }
    }
    return out;
}

}  // namespace

bool brute_force_is_free(const Graph& g, const FamilySpec& fam) {
    const Dense d(g);
    return FreenessOracle(d.size(), fam).is_free(d.adj);
}

std::optional<int> brute_force_min_deletion(const Graph& g, const FamilySpec& fam, int kmax, std::uint64_t cap) {
    if (kmax < 0) {
        return std::nullopt;
    }
    Dense d(g);
    const auto pairs = edge_pairs(d);
    guard(pairs.size(), kmax, cap, "brute-force deletion");
    return search_pairs(d, fam, pairs, kmax, false).minimum;
}

std::optional<int> brute_force_min_editing(const Graph& g, const FamilySpec& fam, int kmax, std::uint64_t cap) {
    if (kmax < 0) {
        return std::nullopt;
    }
    Dense d(g);
    const auto pairs = all_pairs(d);
    guard(pairs.size(), kmax, cap, "brute-force editing");
    return search_pairs(d, fam, pairs, kmax, false).minimum;
}

std::vector<DeletionSet> brute_force_all_min_deletions(const Graph& g, const FamilySpec& fam, int kmax,
                                                       std::uint64_t cap) {
    std::vector<DeletionSet> out;
    if (kmax < 0) {
        return out;
    }
    Dense d(g);
    const auto pairs = edge_pairs(d);
    guard(pairs.size(), kmax, cap, "brute-force deletion");
    for (const auto& chosen : search_pairs(d, fam, pairs, kmax, true).optima) {
        DeletionSet set;
        for (auto [a, b] : chosen) {
            set.emplace_back(d.ids[static_cast<std::size_t>(a)], d.ids[static_cast<std::size_t>(b)]);
        }
        std::sort(set.begin(), set.end());
        out.push_back(std::move(set));
    }
    return out;
}

std::vector<EditSet> brute_force_all_min_editings(const Graph& g, const FamilySpec& fam, int kmax,
                                                  std::uint64_t cap) {
    std::vector<EditSet> out;
    if (kmax < 0) {
        return out;
    }
    Dense d(g);
    const auto pairs = all_pairs(d);
    guard(pairs.size(), kmax, cap, "brute-force editing");
    for (const auto& chosen : search_pairs(d, fam, pairs, kmax, true).optima) {
        EditSet set;
        for (auto [a, b] : chosen) {
            EdgeKey e(d.ids[static_cast<std::size_t>(a)], d.ids[static_cast<std::size_t>(b)]);
            (d.has(a, b) ? set.deletions : set.additions).push_back(e);
        }
        out.push_back(std::move(set));
    }
    return out;
}

namespace {

// Whether some `need` pairwise non-adjacent vertices exist in `candidates`.
bool has_independent(const std::vector<Mask>& adj, Mask candidates, int need) {
    if (need == 0) {
        return true;
    }
    if (std::popcount(candidates) < need) {
        return false;
    }
    const int v = std::countr_zero(candidates);
    const Mask rest = candidates & ~(Mask{1} << v);
    return has_independent(adj, rest & ~adj[v], need - 1) || has_independent(adj, rest, need);
}

bool dense_meets_target(const std::vector<Mask>& adj, Mask alive, VertexDeletionTarget target) {
    for (Mask rest = alive; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const Mask nb = adj[static_cast<std::size_t>(v)] & alive;
        if (target.kind == VertexDeletionTarget::Kind::VertexCover) {
            if (nb) {
                return false;
            }
        } else if (has_independent(adj, nb, target.leaves)) {
            return false;
        }
    }
    return true;
}

void check_target(VertexDeletionTarget target) {
    if (target.kind == VertexDeletionTarget::Kind::InducedStar && target.leaves < 1) {
        throw PreconditionError("induced star target needs at least one leaf");
    }
}

}  // namespace

bool satisfies_vertex_target(const Graph& g, VertexDeletionTarget target, const VertexSet& removed) {
    check_target(target);
    const Graph rest = without_vertices(g, removed);
    for (VertexId v : rest.vertices()) {
        auto nb = rest.neighbors(v);
        if (target.kind == VertexDeletionTarget::Kind::VertexCover) {
            if (!nb.empty()) {
                return false;
            }
            continue;
        }
        const VertexSet nbs(nb.begin(), nb.end());
        const Graph local = complement_restricted(rest, nbs);
        std::vector<VertexId> chosen;
        auto extend = [&](auto&& self, std::size_t from) -> bool {
            if (chosen.size() == static_cast<std::size_t>(target.leaves)) {
                return true;
            }
            for (std::size_t i = from; i < nbs.size(); ++i) {
                if (std::all_of(chosen.begin(), chosen.end(), [&](VertexId c) { return local.has_edge(c, nbs[i]); })) {
                    chosen.push_back(nbs[i]);
                    if (self(self, i + 1)) {
                        return true;
                    }
                    chosen.pop_back();
                }
            }
            return false;
        };
        if (extend(extend, 0)) {
            return false;
        }
    }
    return true;
}

std::optional<int> brute_force_vertex_deletion(const Graph& g, VertexDeletionTarget target, int kmax,
                                               std::uint64_t cap) {
    check_target(target);
    if (kmax < 0) {
        return std::nullopt;
    }
    const Dense d(g);
    guard(static_cast<std::uint64_t>(d.size()), kmax, cap, "brute-force vertex deletion");
    for (int j = 0; j <= std::min(kmax, d.size()); ++j) {
        for (Mask removed : subsets_of_size(d.size(), j)) {
            if (dense_meets_target(d.adj, d.all() & ~removed, target)) {
                return j;
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exact branch and bound

namespace {

// Sets of element ids, each sorted.
using SetFamily = std::vector<std::vector<int>>;

void take_element(SetFamily& sets, int e) {
    std::erase_if(sets, [e](const std::vector<int>& s) { return std::binary_search(s.begin(), s.end(), e); });
}

void drop_element(SetFamily& sets, int e) {
    for (std::vector<int>& s : sets) {
        if (auto it = std::lower_bound(s.begin(), s.end(), e); it != s.end() && *it == e) {
            s.erase(it);
        }
    }
}

// Removes duplicate and superset members. False if some set is empty.
bool drop_supersets(SetFamily& sets) {
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    SetFamily kept;
    for (std::vector<int>& s : sets) {
        if (s.empty()) {
            return false;
        }
        const bool covered = std::any_of(kept.begin(), kept.end(), [&](const std::vector<int>& k) {
            return std::includes(s.begin(), s.end(), k.begin(), k.end());
        });
        if (!covered) {
            kept.push_back(std::move(s));
        }
    }
    sets = std::move(kept);
    return true;
}

// Drops every element e whose sets all contain some other element f; a
// hitting set using e stays one after swapping e for f. Returns whether
// anything changed.
bool drop_dominated_elements(SetFamily& sets) {
    std::map<int, std::vector<int>> where;  // element -> indices of its sets
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (int e : sets[i]) {
            where[e].push_back(static_cast<int>(i));
        }
    }
    std::vector<int> dominated;
    for (const auto& [e, mine] : where) {
        for (int f : sets[static_cast<std::size_t>(mine.front())]) {
            if (f == e) {
                continue;
            }
            const std::vector<int>& theirs = where.at(f);
            if (std::includes(theirs.begin(), theirs.end(), mine.begin(), mine.end()) &&
                (theirs.size() > mine.size() || f < e)) {
                dominated.push_back(e);
                break;
            }
        }
    }
    for (int e : dominated) {
        drop_element(sets, e);
    }
    return !dominated.empty();
}

// Whether at most `budget` elements meet every set: exhaustive branching
// after the forced-element, superset and dominated-element reductions.
bool hitting_set_within(SetFamily sets, int budget) {
    while (true) {
        if (sets.empty()) {
            return true;
        }
        if (budget <= 0 || !drop_supersets(sets)) {
            return false;
        }
        if (sets.front().size() == 1) {
            take_element(sets, sets.front().front());
            --budget;
            continue;
        }
        if (!drop_dominated_elements(sets)) {
            break;
        }
    }
    std::set<int> used;
    int packed = 0;
    for (const std::vector<int>& s : sets) {
        if (std::none_of(s.begin(), s.end(), [&](int e) { return used.contains(e); })) {
            used.insert(s.begin(), s.end());
            if (++packed > budget) {
                return false;
            }
        }
    }
    const std::vector<int> pick = sets.front();
    for (int e : pick) {
        SetFamily with = sets;
        take_element(with, e);
        if (hitting_set_within(std::move(with), budget - 1)) {
            return true;
        }
        drop_element(sets, e);
    }
    return false;
}

template <class T>
SetFamily index_family(const std::vector<std::vector<T>>& sets) {
    std::map<T, int> ids;
    SetFamily out;
    out.reserve(sets.size());
    for (const std::vector<T>& s : sets) {
        std::vector<int> mapped;
        for (const T& x : s) {
            mapped.push_back(ids.emplace(x, static_cast<int>(ids.size())).first->second);
        }
        std::sort(mapped.begin(), mapped.end());
        out.push_back(std::move(mapped));
    }
    return out;
}

struct PairEngine {
    Graph g;
    const FamilySpec& fam;
    bool editing;
    std::set<EdgeKey> fixed;  // toggled or forbidden
    std::vector<EdgeKey> toggled;
    SolveStats* stats;

    std::vector<EdgeKey> free_pairs(const PatternOccurrence& occ) const {
        std::vector<EdgeKey> out;
        if (editing) {
            for (std::size_t i = 0; i < occ.vertices.size(); ++i) {
                for (std::size_t j = i + 1; j < occ.vertices.size(); ++j) {
                    EdgeKey e(occ.vertices[i], occ.vertices[j]);
                    if (!fixed.contains(e)) {
                        out.push_back(e);
                    }
                }
            }
        } else {
            for (const EdgeKey& e : occ.edges) {
                if (!fixed.contains(e)) {
                    out.push_back(e);
                }
            }
        }
        return out;
    }

    void toggle(const EdgeKey& e) {
        if (!g.remove_edge(e)) {
            g.add_edge(e);
        }
    }

    bool search(int budget) {
        if (stats) {
            ++stats->nodes;
        }
        const auto occs = enumerate_induced_occurrences(g, fam);
        if (occs.empty()) {
            return true;
        }
        if (budget == 0) {
            return false;
        }
        std::vector<std::vector<EdgeKey>> frees;
        frees.reserve(occs.size());
        for (const PatternOccurrence& occ : occs) {
            frees.push_back(free_pairs(occ));
            if (frees.back().empty()) {
                return false;
            }
        }
        std::vector<std::size_t> order(occs.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            order[i] = i;
        }
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return frees[a].size() < frees[b].size(); });
        // Every current occurrence needs one of its free pairs toggled.
        if (!hitting_set_within(index_family(frees), budget)) {
            return false;
        }
        const std::vector<EdgeKey>& options = frees[order.front()];
        if (stats) {
            stats->max_branching = std::max(stats->max_branching, options.size());
        }
        std::size_t forbidden = 0;
        bool found = false;
        for (const EdgeKey& e : options) {
            toggle(e);
            fixed.insert(e);
            toggled.push_back(e);
            if (search(budget - 1)) {
                found = true;
                break;
            }
            toggled.pop_back();
            toggle(e);
            ++forbidden;  // e stays in `fixed`: later siblings must not use it
        }
        for (std::size_t i = 0; i < forbidden; ++i) {
            fixed.erase(options[i]);
        }
        if (found) {
            fixed.erase(options[forbidden]);
        }
        return found;
    }

    std::optional<std::vector<EdgeKey>> run(int kmax) {
        for (int budget = 0; budget <= kmax; ++budget) {
            toggled.clear();
            if (search(budget)) {
                return toggled;
            }
        }
        return std::nullopt;
    }
};

}  // namespace

Solution exact_min_deletion(const Graph& g, const FamilySpec& fam, int kmax, SolveStats* stats) {
    if (kmax < 0) {
        return std::nullopt;
    }
    PairEngine engine{g, fam, false, {}, {}, stats};
    auto found = engine.run(kmax);
    if (!found) {
        return std::nullopt;
    }
    std::sort(found->begin(), found->end());
    return *found;
}

EditSolution exact_min_editing(const Graph& g, const FamilySpec& fam, int kmax, SolveStats* stats) {
    if (kmax < 0) {
        return std::nullopt;
    }
    PairEngine engine{g, fam, true, {}, {}, stats};
    auto found = engine.run(kmax);
    if (!found) {
        return std::nullopt;
    }
    std::sort(found->begin(), found->end());
    EditSet out;
    for (const EdgeKey& e : *found) {
        (g.has_edge(e) ? out.deletions : out.additions).push_back(e);
    }
    return out;
}

namespace {

struct VertexEngine {
    Graph g;
    VertexDeletionTarget target;
    std::set<VertexId> forbidden;
    VertexSet removed;

    // Vertex sets that must each lose a vertex: edges, or induced stars.
    std::vector<VertexSet> obstructions() const {
        std::vector<VertexSet> out;
        if (target.kind == VertexDeletionTarget::Kind::VertexCover) {
            for (const EdgeKey& e : g.edges()) {
                out.push_back({e.u(), e.v()});
            }
            return out;
        }
        const auto leaves = static_cast<std::size_t>(target.leaves);
        for (VertexId c : g.vertices()) {
            auto nb = g.neighbors(c);
            const VertexSet nbs(nb.begin(), nb.end());
            VertexSet chosen;
            auto extend = [&](auto&& self, std::size_t from) -> void {
                if (chosen.size() == leaves) {
                    VertexSet occ = chosen;
                    occ.push_back(c);
                    out.push_back(normalized(std::move(occ)));
                    return;
                }
                for (std::size_t i = from; i + (leaves - chosen.size()) <= nbs.size(); ++i) {
                    if (std::none_of(chosen.begin(), chosen.end(), [&](VertexId o) { return g.has_edge(o, nbs[i]); })) {
                        chosen.push_back(nbs[i]);
                        self(self, i + 1);
                        chosen.pop_back();
                    }
                }
            };
            extend(extend, 0);
        }
        return out;
    }

    bool search(int budget) {
        const auto obs = obstructions();
        if (obs.empty()) {
            return true;
        }
        if (budget == 0) {
            return false;
        }
        std::vector<VertexSet> frees;
        for (const VertexSet& o : obs) {
            VertexSet f;
            for (VertexId v : o) {
                if (!forbidden.contains(v)) {
                    f.push_back(v);
                }
            }
            if (f.empty()) {
                return false;
            }
            frees.push_back(std::move(f));
        }
        std::vector<std::size_t> order(frees.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            order[i] = i;
        }
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return frees[a].size() < frees[b].size(); });
        if (!hitting_set_within(index_family(frees), budget)) {
            return false;
        }
        const VertexSet options = frees[order.front()];
        std::size_t tried = 0;
        bool found = false;
        for (VertexId v : options) {
            Graph saved = g;
            g.remove_vertex(v);
            removed.push_back(v);
            if (search(budget - 1)) {
                found = true;
                break;
            }
            removed.pop_back();
            g = std::move(saved);
            forbidden.insert(v);
            ++tried;
        }
        for (std::size_t i = 0; i < tried; ++i) {
            forbidden.erase(options[i]);
        }
        return found;
    }
};

}  // namespace

std::optional<VertexSet> exact_min_vertex_deletion(const Graph& g, VertexDeletionTarget target, int kmax) {
    check_target(target);
    for (int budget = 0; budget <= kmax; ++budget) {
        VertexEngine engine{g, target, {}, {}};
        if (engine.search(budget)) {
            return normalized(std::move(engine.removed));
        }
    }
    return std::nullopt;
}

}  // namespace dfed
