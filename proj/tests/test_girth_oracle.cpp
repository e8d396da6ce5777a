#include <doctest.h>

#include <algorithm>
#include <optional>
#include <queue>
#include <set>

#include "scldpc/bounds.hpp"
#include "scldpc/girth_oracle.hpp"
#include "scldpc/rng.hpp"

using namespace scldpc;

namespace {

// Independent reference girth: for every edge (u, v), remove it and measure
// the shortest remaining u-v path; the girth is 1 + the minimum over edges.
// Path-based, so it shares nothing with the cycle-BFS being tested.
std::optional<int> reference_girth(const TannerGraph& g, int cap) {
    const int n = g.n_vars + g.n_checks;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < g.n_vars; ++v)
        for (int x : g.var_adj[static_cast<std::size_t>(v)]) {
            adj[static_cast<std::size_t>(v)].push_back(g.n_vars + x);
            adj[static_cast<std::size_t>(g.n_vars + x)].push_back(v);
        }
    int best = cap + 1;
    for (int u = 0; u < n; ++u)
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (v < u) continue;
            std::vector<int> dist(static_cast<std::size_t>(n), -1);
            std::queue<int> q;
            dist[static_cast<std::size_t>(u)] = 0;
            q.push(u);
            while (!q.empty()) {
                const int x = q.front();
                q.pop();
                for (int y : adj[static_cast<std::size_t>(x)]) {
                    if (x == u && y == v) continue;  // the removed edge
                    if (x == v && y == u) continue;
                    if (dist[static_cast<std::size_t>(y)] < 0) {
                        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                        q.push(y);
                    }
                }
            }
            if (dist[static_cast<std::size_t>(v)] >= 0)
                best = std::min(best, dist[static_cast<std::size_t>(v)] + 1);
        }
    if (best <= cap) return best;
    return std::nullopt;
}

TannerGraph random_bipartite(Xoshiro256ss& rng, int max_checks, int max_vars) {
    TannerGraph g;
    g.n_checks = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_checks)));
    g.n_vars = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_vars)));
    g.check_adj.assign(static_cast<std::size_t>(g.n_checks), {});
    g.var_adj.assign(static_cast<std::size_t>(g.n_vars), {});
    std::set<std::pair<int, int>> edges;
    const int target = 1 + static_cast<int>(rng.below(
                               static_cast<std::uint64_t>(2 * g.n_checks * g.n_vars / 3 + 1)));
    for (int e = 0; e < target; ++e)
        edges.insert({static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n_checks))),
                      static_cast<int>(rng.below(static_cast<std::uint64_t>(g.n_vars)))});
    for (auto [x, v] : edges) {
        g.check_adj[static_cast<std::size_t>(x)].push_back(v);
        g.var_adj[static_cast<std::size_t>(v)].push_back(x);
    }
    return g;
}

SyndromeFormer random_hs(Xoshiro256ss& rng, int max_a = 6, int max_c = 4, int max_Lh = 20) {
    for (;;) {
        const int c = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_c)));
        const int a = c + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(
                                 std::max(1, max_a - c))));
        const int L_h = std::min(max_Lh, c + 1 + static_cast<int>(rng.below(
                                              static_cast<std::uint64_t>(max_Lh))));
        const int m_h = ceil_div(L_h, c) - 1;
        std::vector<std::vector<int>> rows;
        bool canonical = false;
        for (int i = 0; i < a; ++i) {
            const int w = 2 + static_cast<int>(rng.below(3));
            if (w > L_h) break;
            std::set<int> s;
            while (static_cast<int>(s.size()) < w)
                s.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(L_h))));
            std::vector<int> row(s.begin(), s.end());
            if (row.back() >= m_h * c) canonical = true;
            rows.push_back(std::move(row));
        }
        if (static_cast<int>(rows.size()) != a || !canonical) continue;
        return SyndromeFormer(a, c, L_h, std::move(rows));
    }
}

}  // namespace

TEST_SUITE_BEGIN("girth_oracle");

TEST_CASE("2x2 all-ones matrix has girth 4") {
    TannerGraph g;
    g.n_checks = 2;
    g.n_vars = 2;
    g.check_adj = {{0, 1}, {0, 1}};
    g.var_adj = {{0, 1}, {0, 1}};
    CHECK(tanner_girth(g, 12) == 4);
}

TEST_CASE("a forest has no girth at any cap") {
    TannerGraph g;
    g.n_checks = 3;
    g.n_vars = 3;
    g.check_adj = {{0}, {1}, {2}};
    g.var_adj = {{0}, {1}, {2}};
    CHECK(!tanner_girth(g, 12).has_value());
}

TEST_CASE("cap validation") {
    TannerGraph g;
    g.n_checks = 1;
    g.n_vars = 1;
    g.check_adj = {{0}};
    g.var_adj = {{0}};
    CHECK_THROWS_AS(tanner_girth(g, 5), invalid_params);
    CHECK_THROWS_AS(tanner_girth(g, 2), invalid_params);
}

TEST_CASE("tanner_girth agrees with the edge-removal reference") {
    Xoshiro256ss rng(0xBEEF);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = random_bipartite(rng, 6, 6);  // <= 60 nodes after expansion not needed here
        CHECK(tanner_girth(g, 12) == reference_girth(g, 12));
    }
}

TEST_CASE("window graphs agree with the reference too") {
    Xoshiro256ss rng(0xFACE);
    for (int trial = 0; trial < 60; ++trial) {
        auto hs = random_hs(rng, 5, 3, 9);
        const int W = 2 + static_cast<int>(rng.below(4));
        auto g = TannerGraph::from_window(expand_window(hs, W));
        REQUIRE(g.n_vars + g.n_checks <= 60);
        CHECK(tanner_girth(g, 12) == reference_girth(g, 12));
    }
}

TEST_CASE("window sufficiency: widening the window never changes the verdict") {
    Xoshiro256ss rng(0xAB);
    for (int trial = 0; trial < 40; ++trial) {
        auto hs = random_hs(rng, 5, 3, 12);
        const int cap = 8;
        const int W = (cap / 2) * hs.m_h() + 1;
        auto base = tanner_girth(TannerGraph::from_window(expand_window(hs, W)), cap);
        for (int k = 1; k <= 2; ++k) {
            auto wider = tanner_girth(TannerGraph::from_window(expand_window(hs, W + k)), cap);
            CHECK(base == wider);
        }
        CHECK(base == conv_girth(hs, cap));
    }
}

TEST_CASE("anchored roots give the same conv_girth") {
    Xoshiro256ss rng(0x7777);
    for (int trial = 0; trial < 150; ++trial) {
        auto hs = random_hs(rng);
        CHECK(conv_girth(hs, 12) == conv_girth_anchored(hs, 12));
    }
}

TEST_CASE("adding a one never increases conv_girth") {
    Xoshiro256ss rng(0x1234);
    for (int trial = 0; trial < 60; ++trial) {
        auto hs = random_hs(rng, 5, 3, 12);
        auto rows = hs.rows();
        // add a one somewhere free
        for (int attempt = 0; attempt < 64; ++attempt) {
            const int r = static_cast<int>(rng.below(static_cast<std::uint64_t>(hs.a())));
            const int pos = static_cast<int>(rng.below(static_cast<std::uint64_t>(hs.L_h())));
            auto& row = rows[static_cast<std::size_t>(r)];
            if (std::find(row.begin(), row.end(), pos) != row.end()) continue;
            row.insert(std::upper_bound(row.begin(), row.end(), pos), pos);
            break;
        }
        auto denser = SyndromeFormer::trusted(hs.a(), hs.c(), hs.L_h(), rows);
        auto g0 = conv_girth(hs, 12);
        auto g1 = conv_girth(denser, 12);
        const int v0 = g0 ? *g0 : 14;
        const int v1 = g1 ? *g1 : 14;
        CHECK(v1 <= v0);
    }
}

TEST_CASE("girth is always even") {
    Xoshiro256ss rng(0x99);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = conv_girth(random_hs(rng), 12);
        if (g) CHECK(*g % 2 == 0);
    }
}

TEST_CASE("prop2 deltas {3,4,5} reach girth 8") {
    auto hs = construct_prop2(3);
    CHECK(!conv_girth(hs, 6).has_value());
}

TEST_CASE("node budget is enforced") {
    auto hs = SyndromeFormer(2, 1, 3, {{0, 1}, {0, 2}});
    CHECK_THROWS_AS(conv_girth(hs, 12, 4), resource_limit);
}

TEST_SUITE_END();
