#include <algorithm>
#include <numeric>
#include <queue>

#include "dfed/graph.hpp"

namespace dfed {

namespace {

constexpr int kNone = -1;

// Edmonds' blossom algorithm on a compact 0..n-1 adjacency list. One BFS per
// exposed root; blossoms are contracted implicitly through `base`.
class BlossomMatcher {
public:
    explicit BlossomMatcher(std::vector<std::vector<int>> adj)
        : adj_(std::move(adj)),
          n_(static_cast<int>(adj_.size())),
          match_(n_, kNone),
          parent_(n_),
          base_(n_),
          used_(n_),
          blossom_(n_) {}

    const std::vector<int>& run() {
        // Greedy warm start; augmenting paths fix any suboptimal choice.
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != kNone) {
                continue;
            }
            for (int u : adj_[v]) {
                if (match_[u] == kNone) {
                    match_[u] = v;
                    match_[v] = u;
                    break;
                }
            }
        }
        for (int root = 0; root < n_; ++root) {
            if (match_[root] != kNone) {
                continue;
            }
            int end = find_path(root);
            while (end != kNone) {
                int pv = parent_[end];
                int ppv = match_[pv];
                match_[end] = pv;
                match_[pv] = end;
                end = ppv;
            }
        }
        return match_;
    }

private:
    int lca(int a, int b) {
        std::vector<char> on_path(n_, 0);
        while (true) {
            a = base_[a];
            on_path[a] = 1;
            if (match_[a] == kNone) {
                break;
            }
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (on_path[b]) {
                return b;
            }
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = 1;
            blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), kNone);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) {
                    continue;
                }
                if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
                    int cur = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i) {
                        if (blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[to] == kNone) {
                    parent_[to] = v;
                    if (match_[to] == kNone) {
                        return to;
                    }
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return kNone;
    }

    std::vector<std::vector<int>> adj_;
    int n_;
    std::vector<int> match_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<char> used_;
    std::vector<char> blossom_;
};

}  // namespace

std::vector<EdgeKey> maximum_matching(const Graph& g) {
    const VertexSet ids = g.vertices();
    auto index_of = [&](VertexId v) {
        return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    };
    std::vector<std::vector<int>> adj(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (VertexId u : g.neighbors(ids[i])) {
            adj[i].push_back(index_of(u));
        }
    }
    BlossomMatcher matcher(std::move(adj));
    const std::vector<int>& match = matcher.run();
    std::vector<EdgeKey> out;
    for (std::size_t i = 0; i < match.size(); ++i) {
        if (match[i] != kNone && static_cast<std::size_t>(match[i]) > i) {
            out.emplace_back(ids[i], ids[match[i]]);
        }
    }
    return out;
}

}  // namespace dfed
