#include "scldpc/bounds.hpp"

#include <algorithm>
#include <string>

namespace scldpc {

namespace {

long long pairs2(long long n) { return n * (n - 1) / 2; }

void validate_bound_query(int a, int c, const std::vector<int>& row_weights) {
    if (a < 1 || c < 1 || a <= c)
        throw invalid_params("bound query: need a > c >= 1, got a=" + std::to_string(a) + " c=" +
                             std::to_string(c));
    if (static_cast<int>(row_weights.size()) != a)
        throw invalid_params("bound query: expected " + std::to_string(a) + " row weights");
    for (int w : row_weights)
        if (w < 2) throw invalid_params("bound query: row weights must be >= 2");
}

long long weight_pair_sum(const std::vector<int>& row_weights) {
    long long s = 0;
    for (int w : row_weights) s += pairs2(w);
    return s;
}

std::string shape_tag(const std::vector<int>& row_weights) {
    const bool uniform = std::all_of(row_weights.begin(), row_weights.end(),
                                     [&](int w) { return w == row_weights.front(); });
    if (!uniform) return "irregular";
    return row_weights.front() == 2 ? "w2" : "regular";
}

long long ceil_div_ll(long long x, long long y) { return (x + y - 1) / y; }

}  // namespace

BoundResult bound_g6(int a, int c, const std::vector<int>& row_weights) {
    validate_bound_query(a, c, row_weights);
    const long long sum = weight_pair_sum(row_weights);
    const long long bound = std::max<long long>(c + 1, ceil_div_ll(sum + pairs2(c + 1), c));
    return {bound, true, "g6-" + shape_tag(row_weights)};
}

BoundResult bound_g8(int a, int c, const std::vector<int>& row_weights) {
    validate_bound_query(a, c, row_weights);
    if (c == 1) {
        const bool all_w2 = std::all_of(row_weights.begin(), row_weights.end(),
                                        [](int w) { return w == 2; });
        if (!all_w2)
            return {std::nullopt, false, "g8-c1-infeasible"};  // any w_i >= 3 row carries a 6-cycle
        return {2LL * a, true, "g8-c1-w2-tight"};
    }
    const long long sum = weight_pair_sum(row_weights);
    const long long bound = std::max<long long>(c + 1, ceil_div_ll(2 * sum, c));
    return {bound, true, "g8-" + shape_tag(row_weights) + "-ceil"};
}

std::optional<BoundResult> bound_for_girth(int a, int c, const std::vector<int>& row_weights, int g) {
    if (g == 6) return bound_g6(a, c, row_weights);
    if (g == 8) return bound_g8(a, c, row_weights);
    return std::nullopt;
}

SyndromeFormer construct_prop1(int a) {
    if (a < 1) throw invalid_params("construct_prop1: a must be >= 1");
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(a));
    for (int i = 0; i < a; ++i) rows.push_back({0, 2 * i + 1});
    return SyndromeFormer(a, 1, 2 * a, std::move(rows));
}

SyndromeFormer construct_prop2(int a) {
    if (a < 1) throw invalid_params("construct_prop2: a must be >= 1");
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(a));
    for (int i = 0; i < a; ++i) rows.push_back({0, a + i});
    return SyndromeFormer(a, 1, 2 * a, std::move(rows));
}

}  // namespace scldpc
