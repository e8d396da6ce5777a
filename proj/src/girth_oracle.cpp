#include "scldpc/girth_oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace scldpc {

TannerGraph TannerGraph::from_window(const WindowMatrix& w) {
    TannerGraph g;
    g.n_checks = w.n_rows();
    g.n_vars = w.n_cols();
    g.var_adj = w.cols;
    g.check_adj.assign(static_cast<std::size_t>(g.n_checks), {});
    for (int v = 0; v < g.n_vars; ++v)
        for (int x : g.var_adj[static_cast<std::size_t>(v)])
            g.check_adj[static_cast<std::size_t>(x)].push_back(v);
    return g;
}

long long TannerGraph::edge_count() const {
    long long n = 0;
    for (const auto& adj : var_adj) n += static_cast<long long>(adj.size());
    return n;
}

namespace {

void require_even_cap(int cap) {
    if (cap < 4 || cap % 2 != 0)
        throw invalid_params("girth cap must be even and >= 4, got " + std::to_string(cap));
}

// Variables come first, checks after, in one flat adjacency table.
struct FlatGraph {
    int n = 0;
    int n_vars = 0;
    std::vector<std::vector<int>> adj;
};

FlatGraph flatten(const TannerGraph& g) {
    FlatGraph f;
    f.n_vars = g.n_vars;
    f.n = g.n_vars + g.n_checks;
    f.adj.resize(static_cast<std::size_t>(f.n));
    for (int v = 0; v < g.n_vars; ++v) {
        f.adj[static_cast<std::size_t>(v)] = g.var_adj[static_cast<std::size_t>(v)];
        for (int& x : f.adj[static_cast<std::size_t>(v)]) x += g.n_vars;
    }
    for (int x = 0; x < g.n_checks; ++x)
        f.adj[static_cast<std::size_t>(g.n_vars + x)] = g.check_adj[static_cast<std::size_t>(x)];
    return f;
}

struct BfsScratch {
    std::vector<int> dist;
    std::vector<int> parent;
    std::vector<std::uint32_t> epoch;
    std::vector<int> queue;
    std::uint32_t cur = 0;

    explicit BfsScratch(std::size_t n) : dist(n), parent(n), epoch(n, 0) { queue.reserve(n); }
};

// Shortest closed walk through `root` discoverable within depth_cap levels;
// any value returned is the length of a real cycle candidate (a closed walk
// contains a cycle no longer than itself), and for a root lying on a
// shortest cycle the exact length is found. The minimum over all roots is
// therefore the girth.
int bfs_min_cycle(const FlatGraph& g, int root, int depth_cap, BfsScratch& s) {
    int best = std::numeric_limits<int>::max();
    ++s.cur;
    s.queue.clear();
    s.dist[static_cast<std::size_t>(root)] = 0;
    s.parent[static_cast<std::size_t>(root)] = -1;
    s.epoch[static_cast<std::size_t>(root)] = s.cur;
    s.queue.push_back(root);
    for (std::size_t head = 0; head < s.queue.size(); ++head) {
        const int u = s.queue[head];
        const int du = s.dist[static_cast<std::size_t>(u)];
        if (du >= depth_cap) break;  // queue is sorted by distance
        for (int w : g.adj[static_cast<std::size_t>(u)]) {
            if (w == s.parent[static_cast<std::size_t>(u)]) continue;
            if (s.epoch[static_cast<std::size_t>(w)] != s.cur) {
                s.epoch[static_cast<std::size_t>(w)] = s.cur;
                s.dist[static_cast<std::size_t>(w)] = du + 1;
                s.parent[static_cast<std::size_t>(w)] = u;
                s.queue.push_back(w);
            } else {
                const int cand = du + s.dist[static_cast<std::size_t>(w)] + 1;
                best = std::min(best, cand);
            }
        }
    }
    return best;
}

std::optional<int> girth_over_roots(const FlatGraph& g, int cap, const std::vector<int>& roots) {
    BfsScratch scratch(static_cast<std::size_t>(g.n));
    int best = std::numeric_limits<int>::max();
    for (int root : roots) {
        const int reach = std::min(cap, best - 2);
        const int found = bfs_min_cycle(g, root, reach / 2, scratch);
        best = std::min(best, found);
        if (best == 4) break;  // nothing shorter exists in a simple bipartite graph
    }
    if (best <= cap) return best;
    return std::nullopt;
}

int window_blocks(const SyndromeFormer& hs, int g_cap) { return (g_cap / 2) * hs.m_h() + 1; }

FlatGraph expanded_graph(const SyndromeFormer& hs, int W, long long node_budget) {
    const long long nodes = static_cast<long long>(hs.a() + hs.c()) * W;
    if (nodes > node_budget)
        throw resource_limit("window of " + std::to_string(W) + " blocks needs " +
                             std::to_string(nodes) + " nodes, budget is " +
                             std::to_string(node_budget));
    return flatten(TannerGraph::from_window(expand_window(hs, W)));
}

}  // namespace

std::optional<int> tanner_girth(const TannerGraph& g, int cap) {
    require_even_cap(cap);
    const FlatGraph f = flatten(g);
    std::vector<int> roots(static_cast<std::size_t>(f.n));
    std::iota(roots.begin(), roots.end(), 0);
    return girth_over_roots(f, cap, roots);
}

std::optional<int> conv_girth(const SyndromeFormer& hs, int g_cap, long long node_budget) {
    require_even_cap(g_cap);
    const FlatGraph f = expanded_graph(hs, window_blocks(hs, g_cap), node_budget);
    std::vector<int> roots(static_cast<std::size_t>(f.n));
    std::iota(roots.begin(), roots.end(), 0);
    return girth_over_roots(f, g_cap, roots);
}

std::optional<int> conv_girth_anchored(const SyndromeFormer& hs, int g_cap, long long node_budget) {
    require_even_cap(g_cap);
    const FlatGraph f = expanded_graph(hs, window_blocks(hs, g_cap), node_budget);
    // Every cycle of length <= g_cap has a translate through a block-0
    // variable, so these a roots see the exact minimum.
    std::vector<int> roots(static_cast<std::size_t>(hs.a()));
    std::iota(roots.begin(), roots.end(), 0);
    return girth_over_roots(f, g_cap, roots);
}

bool girth_at_least(const SyndromeFormer& hs, int g, long long node_budget) {
    if (g <= 4) return true;
    return !conv_girth_anchored(hs, g - 2, node_budget).has_value();
}

}  // namespace scldpc
