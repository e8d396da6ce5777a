#pragma once

#include <optional>
#include <vector>

#include "scldpc/code_model.hpp"

namespace scldpc {

/// Bipartite Tanner graph with explicit adjacency in both directions.
struct TannerGraph {
    int n_checks = 0;
    int n_vars = 0;
    std::vector<std::vector<int>> check_adj;  // check -> variables
    std::vector<std::vector<int>> var_adj;    // variable -> checks

    static TannerGraph from_window(const WindowMatrix& w);
    long long edge_count() const;
};

// Cycle lengths are searched up to this hard limit; callers asking for more
// get cap_exceeded.
inline constexpr int kGirthCapLimit = 16;
inline constexpr long long kDefaultNodeBudget = 50'000'000;

/// Exact girth if <= cap, nullopt otherwise. BFS from every node with
/// parent-edge exclusion, truncated at depth cap/2, early exit once the
/// running minimum reaches 4. cap must be even and >= 4.
std::optional<int> tanner_girth(const TannerGraph& g, int cap);

/// Girth of the semi-infinite code restricted to cycles of length <= g_cap:
/// expands W = (g_cap/2)*m_h + 1 block columns and runs tanner_girth. The
/// window is a submatrix of H, so every window cycle is real, and any
/// length-<=g_cap cycle has a translate whose leftmost variable block is
/// block 0 and whose span fits in W blocks. Boundary truncation can only
/// remove cycles, never create them. Throws resource_limit when the window
/// exceeds node_budget nodes.
std::optional<int> conv_girth(const SyndromeFormer& hs, int g_cap,
                              long long node_budget = kDefaultNodeBudget);

/// Same value as conv_girth, computed with BFS roots restricted to the a
/// variable nodes of block 0. Sound and exact by the same translate argument
/// that sizes the window; kept separate so the two routes can be checked
/// against each other. This is the search inner-loop fast path.
std::optional<int> conv_girth_anchored(const SyndromeFormer& hs, int g_cap,
                                       long long node_budget = kDefaultNodeBudget);

/// True iff the code has no local cycle shorter than g (i.e. girth >= g).
bool girth_at_least(const SyndromeFormer& hs, int g,
                    long long node_budget = kDefaultNodeBudget);

}  // namespace scldpc
