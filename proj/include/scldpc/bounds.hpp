#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scldpc/code_model.hpp"

namespace scldpc {

struct BoundResult {
    std::optional<long long> Lh_lower;  // engaged iff feasible
    bool feasible = true;
    std::string formula;                // citation tag of the formula used

    long long vs_lower(int a, int c) const {
        return Lh_lower ? static_cast<long long>(ceil_div(static_cast<int>(*Lh_lower), c)) * a : 0;
    }
};

/// Lower bound on L_h for girth >= 6:
///   max{ c+1, ceil((sum_i C(w_i,2) + C(c+1,2)) / c) }.
/// The regular and w=2 forms are specializations of this one.
BoundResult bound_g6(int a, int c, const std::vector<int>& row_weights);

/// Lower bound on L_h for girth >= 8.
///   c = 1, all w_i = 2 : L_h >= 2a (tight in both directions);
///   c = 1, any w_i >= 3: infeasible, every such row carries a 6-cycle;
///   c > 1             : max{ c+1, ceil(2 * sum_i C(w_i,2) / c) }.
/// L_h is an integer, so the c>1 form carries a ceiling; the formula tag
/// notes it.
BoundResult bound_g8(int a, int c, const std::vector<int>& row_weights);

/// Dispatch on g. nullopt for g outside {6, 8}: no closed-form bound exists,
/// use search.
std::optional<BoundResult> bound_for_girth(int a, int c, const std::vector<int>& row_weights, int g);

/// c=1, w=2, row i = {0, 2i+1}: all deltas distinct and odd, so no cycle of
/// length < 8 exists. L_h = 2a.
SyndromeFormer construct_prop1(int a);

/// c=1, w=2, row i = {0, a+i}: deltas {a,...,2a-1}; any two sum past 2a-1,
/// so no cycle of length < 8 exists. L_h = 2a.
SyndromeFormer construct_prop2(int a);

}  // namespace scldpc
