#include <algorithm>
#include <numeric>
#include <queue>

#include "pgg/graphs.hpp"

namespace pgg::graphs {

namespace {

// Augmenting-path search with blossom contraction (array-based, base[] keeps
// the contracted pseudo-node of each vertex). One findPath pass per exposed
// root; a root that fails to augment stays exposed in some maximum matching
// and is never retried.
class BlossomEngine {
public:
    explicit BlossomEngine(const SimpleGraph& g)
        : n_(static_cast<int>(g.vertex_count())), adj_(n_), match_(n_, -1), parent_(n_),
          base_(n_), used_(n_), in_blossom_(n_), lca_mark_(n_) {
        for (int v = 0; v < n_; ++v) {
            adj_[v].reserve(g.neighbors(v).size());
            for (std::int64_t w : g.neighbors(v)) adj_[v].push_back(static_cast<int>(w));
        }
    }

    // stop_at < 0 runs the full greedy pass
    void greedy_init(std::mt19937_64& rng, std::int64_t stop_at = -1) {
        std::vector<int> order(n_);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::int64_t size = 0;
        for (int v : order) {
            if (stop_at >= 0 && size >= stop_at) return;
            if (match_[v] != -1) continue;
            for (int w : adj_[v]) {
                if (match_[w] == -1) {
                    match_[v] = w;
                    match_[w] = v;
                    ++size;
                    break;
                }
            }
        }
    }

    // grow the matching to `target` edges if possible; returns final size
    std::int64_t solve(std::int64_t target) {
        std::int64_t size = current_size();
        for (int v = 0; v < n_ && size < target; ++v) {
            if (match_[v] == -1 && try_augment(v)) ++size;
        }
        return size;
    }

    bool exhausted(std::int64_t target) const { return current_size() < target; }

    std::int64_t current_size() const {
        std::int64_t c = 0;
        for (int v = 0; v < n_; ++v)
            if (match_[v] > v) ++c;
        return c;
    }

    Matching matching() const {
        Matching m;
        for (int v = 0; v < n_; ++v)
            if (match_[v] > v) m.edges.emplace_back(v, match_[v]);
        return m;
    }

private:
    int lca(int a, int b) {
        std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
        int x = a;
        for (;;) {
            x = base_[x];
            lca_mark_[x] = 1;
            if (match_[x] == -1) break;
            x = parent_[match_[x]];
        }
        int y = b;
        for (;;) {
            y = base_[y];
            if (lca_mark_[y]) return y;
            y = parent_[match_[y]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    bool try_augment(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    // odd cycle: contract the blossom at the lca of v and to
                    int cur_base = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i) {
                        if (in_blossom_[base_[i]]) {
                            base_[i] = cur_base;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) {
                        augment_along(to);
                        return true;
                    }
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return false;
    }

    void augment_along(int v) {
        while (v != -1) {
            int pv = parent_[v];
            int next = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = next;
        }
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, in_blossom_, lca_mark_;
};

} // namespace

Matching maximum_matching(const SimpleGraph& g, std::uint64_t seed) {
    BlossomEngine engine(g);
    std::mt19937_64 rng(seed);
    engine.greedy_init(rng);
    engine.solve(g.vertex_count()); // at most n/2 anyway
    return engine.matching();
}

MatchingSearch find_matching(const SimpleGraph& g, std::int64_t target, std::mt19937_64& rng) {
    BlossomEngine engine(g);
    engine.greedy_init(rng, target);
    std::int64_t size = engine.solve(target);
    MatchingSearch out;
    out.matching = engine.matching();
    out.maximum = size < target; // the search ran dry, so this is a maximum
    if (target <= 0) out.maximum = false;
    // trim to the requested size so callers get exactly `target` edges
    if (target >= 0 && out.matching.size() > target)
        out.matching.edges.resize(static_cast<std::size_t>(target));
    return out;
}

} // namespace pgg::graphs
