#include <doctest.h>

#include <algorithm>
#include <set>

#include "scldpc/bounds.hpp"
#include "scldpc/differences.hpp"
#include "scldpc/girth_oracle.hpp"
#include "scldpc/rng.hpp"

using namespace scldpc;

namespace {

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

// Checks a witness against an explicitly expanded window: every edge exists,
// consecutive edges share the right node, the walk closes, and no edge
// repeats.
void check_materialized(const SyndromeFormer& hs, const CycleWitness& w, int g_max) {
    const int W = (g_max / 2) * std::max(hs.m_h(), 1) + 1;
    auto win = expand_window(hs, W);
    REQUIRE(static_cast<int>(w.edges.size()) == w.length());
    std::set<std::pair<int, int>> seen;
    for (const auto& [check, var] : w.edges) {
        REQUIRE(check >= 0);
        REQUIRE(var >= 0);
        REQUIRE(var < win.n_cols());
        REQUIRE(check < win.n_rows());
        const auto& col = win.cols[static_cast<std::size_t>(var)];
        REQUIRE(std::binary_search(col.begin(), col.end(), check));  // the one is really there
        CHECK(seen.insert({check, var}).second);                     // never the same edge twice
    }
    // walk structure: edges 2k and 2k+1 share the variable; edges 2k+1 and
    // 2k+2 share the check; the last edge closes back to the first check.
    const std::size_t n = w.edges.size();
    for (std::size_t k = 0; k + 1 < n; k += 2) CHECK(w.edges[k].second == w.edges[k + 1].second);
    for (std::size_t k = 1; k + 1 < n; k += 2) CHECK(w.edges[k].first == w.edges[k + 1].first);
    CHECK(w.edges[n - 1].first == w.edges[0].first);
}

}  // namespace

TEST_SUITE_BEGIN("differences");

TEST_CASE("build_differences on a single documented row") {
    // row {0,1,5} with c=2: (j=0,d=1,ls=0,le=1), (j=0,d=5,ls=0,le=1), (j=1,d=4,ls=1,le=1)
    auto hs = SyndromeFormer::trusted(1, 2, 6, {{0, 1, 5}});
    auto t = build_differences(hs);
    REQUIRE(t.records.size() == 3);
    CHECK(t.records[0] == Difference{0, 0, 1, 0, 1});
    CHECK(t.records[1] == Difference{0, 0, 5, 0, 1});
    CHECK(t.records[2] == Difference{0, 1, 4, 1, 1});
}

TEST_CASE("record counts follow the binomial") {
    // regular w=3, a=5 -> 5 * C(3,2) = 15 records
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < 5; ++i) rows.push_back({0, i + 1, 10 + i});
    auto hs = SyndromeFormer::trusted(5, 2, 15, std::move(rows));
    CHECK(build_differences(hs).records.size() == 15);

    // w=2 rows contribute one record each
    auto p1 = construct_prop1(4);
    CHECK(build_differences(p1).records.size() == 4);
}

TEST_CASE("find_4cycles on the documented toys") {
    // c=1, rows {0,2} and {1,3}: both deltas 2 at level 0 -> one 4-cycle
    auto hs = SyndromeFormer::trusted(2, 1, 4, {{0, 2}, {1, 3}});
    auto ws = find_4cycles(build_differences(hs));
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].length() == 4);
    check_materialized(hs, ws[0], 4);

    // c=2: same delta at different starting levels is no 4-cycle
    auto hs2 = SyndromeFormer::trusted(2, 2, 4, {{0, 2}, {1, 3}});
    CHECK(find_4cycles(build_differences(hs2)).empty());
    CHECK(!has_repeated_difference(build_differences(hs2)));

    // the Proposition 1 construction is 4-cycle-free
    CHECK(find_4cycles(build_differences(construct_prop1(4))).empty());
}

TEST_CASE("the worked 6-cycle relation materializes exactly once") {
    // Rows realize delta(2,3)=2 levels 0->2, delta(3,2)=2 levels 2->1 and
    // delta(1,0)=4 levels 0->1 with c=3, so 2 + 2 - 4 = 0 closes a 6-cycle.
    auto hs = SyndromeFormer(4, 3, 6, {{0, 1}, {0, 4}, {3, 5}, {2, 4}});
    auto ws = find_cycles(hs, 6);
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].length() == 6);
    check_materialized(hs, ws[0], 6);

    std::multiset<std::tuple<int, int, int>> records;
    long long signed_sum = 0;
    for (const auto& term : ws[0].terms) {
        records.insert({term.diff.row, term.diff.start_col, term.diff.delta});
        signed_sum += term.sign * term.diff.delta;
    }
    CHECK(signed_sum == 0);
    CHECK(records == std::multiset<std::tuple<int, int, int>>{{1, 0, 4}, {2, 3, 2}, {3, 2, 2}});

    CHECK(girth_via_differences(hs, 12) == 6);
    CHECK(conv_girth(hs, 12) == 6);
}

TEST_CASE("single row {0,1,2} with c=1 has a 4-cycle and a 6-cycle") {
    auto hs = SyndromeFormer::trusted(1, 1, 3, {{0, 1, 2}});
    auto ws = find_cycles(hs, 6);
    std::set<int> lengths;
    for (const auto& w : ws) lengths.insert(w.length());
    CHECK(lengths == std::set<int>{4, 6});
    for (const auto& w : ws) check_materialized(hs, w, 6);
}

TEST_CASE("single-row rule: c=1 and w >= 3 always yields a 6-cycle") {
    Xoshiro256ss rng(0xD1FF);
    for (int trial = 0; trial < 30; ++trial) {
        const int w = 3 + static_cast<int>(rng.below(2));
        const int L_h = w + 1 + static_cast<int>(rng.below(8));
        std::set<int> s{L_h - 1};
        while (static_cast<int>(s.size()) < w)
            s.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(L_h))));
        auto hs = SyndromeFormer::trusted(1, 1, L_h, {std::vector<int>(s.begin(), s.end())});
        CHECK(!find_cycles(hs, 6).empty());
    }

    // but three ones at three distinct levels (c=3) close nothing of length 6
    auto hs = SyndromeFormer::trusted(1, 3, 3, {{0, 1, 2}});
    CHECK(find_cycles(hs, 6).empty());
    CHECK(!girth_via_differences(hs, 6).has_value());
}

TEST_CASE("4-cycle witnesses and find_cycles(4) coincide") {
    Xoshiro256ss rng(0x4444);
    for (int trial = 0; trial < 60; ++trial) {
        auto hs = random_hs(rng, 5, 3, 14);
        auto t = build_differences(hs);
        auto direct = find_4cycles(t);
        auto chained = find_cycles(hs, 4);
        CHECK(direct.size() == chained.size());
        CHECK(has_repeated_difference(t) == !direct.empty());
        // completeness: empty iff girth >= 6
        CHECK(direct.empty() == girth_at_least(hs, 6));
    }
}

TEST_CASE("every emitted witness materializes in the window graph") {
    Xoshiro256ss rng(0x1CE);
    for (int trial = 0; trial < 40; ++trial) {
        auto hs = random_hs(rng, 5, 3, 12);
        auto ws = find_cycles(hs, 8, 200);
        for (const auto& w : ws) check_materialized(hs, w, 8);
    }
}

TEST_CASE("oracle equivalence on a randomized corpus") {
    Xoshiro256ss rng(0x07ac1e);
    for (int trial = 0; trial < 2000; ++trial) {
        auto hs = random_hs(rng);
        CHECK(girth_via_differences(hs, 12) == conv_girth(hs, 12));
    }
}

TEST_CASE("oracle equivalence holds at cap 10 on mid-size instances") {
    Xoshiro256ss rng(0xAA11);
    for (int trial = 0; trial < 10; ++trial) {
        auto hs = random_hs(rng, 6, 3, 30);
        CHECK(girth_via_differences(hs, 10) == conv_girth(hs, 10));
    }
}

TEST_CASE("translation invariance: shifting a row by c preserves girth") {
    Xoshiro256ss rng(0x5171);
    for (int trial = 0; trial < 40; ++trial) {
        auto hs = random_hs(rng, 5, 3, 12);
        // shift a row holding the maximum index, keeping the result canonical
        auto rows = hs.rows();
        int target = 0;
        for (int i = 0; i < hs.a(); ++i)
            if (rows[static_cast<std::size_t>(i)].back() >
                rows[static_cast<std::size_t>(target)].back())
                target = i;
        for (int& v : rows[static_cast<std::size_t>(target)]) v += hs.c();
        auto shifted = SyndromeFormer::trusted(hs.a(), hs.c(), hs.L_h() + hs.c(), rows);
        CHECK(girth_via_differences(hs, 10) == girth_via_differences(shifted, 10));
        CHECK(conv_girth(hs, 10) == conv_girth(shifted, 10));
    }
}

TEST_CASE("deterministic output and the cap guard") {
    auto hs = SyndromeFormer(2, 1, 3, {{0, 1}, {0, 2}});
    auto a = find_cycles(hs, 8);
    auto b = find_cycles(hs, 8);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].edges == b[i].edges);
        CHECK(a[i].report_line() == b[i].report_line());
    }
    CHECK_THROWS_AS(find_cycles(hs, 18), cap_exceeded);
    CHECK_THROWS_AS(girth_via_differences(hs, 18), cap_exceeded);
    CHECK_THROWS_AS(find_cycles(hs, 7), invalid_params);
}

TEST_CASE("witness report line shape") {
    auto hs = SyndromeFormer::trusted(2, 1, 4, {{0, 2}, {1, 3}});
    auto ws = find_4cycles(build_differences(hs));
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].report_line() == "4; (0,0,+2) (1,1,-2); anchor=1");
}

TEST_SUITE_END();
