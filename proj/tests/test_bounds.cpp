#include <doctest.h>

#include "scldpc/bounds.hpp"
#include "scldpc/differences.hpp"
#include "scldpc/girth_oracle.hpp"

using namespace scldpc;

namespace {
std::vector<int> uniform(int a, int w) { return std::vector<int>(static_cast<std::size_t>(a), w); }
}

TEST_SUITE_BEGIN("bounds");

TEST_CASE("g=6 bound on documented points") {
    auto r = bound_g6(4, 2, uniform(4, 2));
    CHECK(r.Lh_lower == 4);
    CHECK(r.feasible);

    r = bound_g6(3, 1, uniform(3, 3));
    CHECK(r.Lh_lower == 10);

    // mixed weights use the general form
    r = bound_g6(3, 2, {2, 3, 4});
    // sum C(w,2) = 1 + 3 + 6 = 10; ceil((10 + 3)/2) = 7
    CHECK(r.Lh_lower == 7);
    CHECK(r.formula == "g6-irregular");
}

TEST_CASE("g=8 bound on documented points") {
    auto r = bound_g8(3, 1, uniform(3, 2));
    CHECK(r.Lh_lower == 6);
    CHECK(r.formula == "g8-c1-w2-tight");

    r = bound_g8(6, 3, uniform(6, 2));
    CHECK(r.Lh_lower == 4);

    r = bound_g8(4, 1, uniform(4, 3));
    CHECK(!r.feasible);
    CHECK(!r.Lh_lower.has_value());
}

TEST_CASE("no closed form outside g in {6,8}") {
    CHECK(!bound_for_girth(6, 3, uniform(6, 3), 10).has_value());
    CHECK(bound_for_girth(6, 3, uniform(6, 3), 6).has_value());
}

TEST_CASE("query validation") {
    CHECK_THROWS_AS(bound_g6(2, 2, uniform(2, 2)), invalid_params);
    CHECK_THROWS_AS(bound_g6(3, 1, uniform(3, 1)), invalid_params);
    CHECK_THROWS_AS(bound_g6(3, 1, uniform(2, 2)), invalid_params);
}

TEST_CASE("the uniform w=2 specialization matches the general form") {
    for (int c = 1; c <= 10; ++c)
        for (int a = c + 1; a <= 100; ++a) {
            const auto general = bound_g6(a, c, uniform(a, 2));
            const long long direct =
                std::max<long long>(c + 1, (a + (c + 1LL) * c / 2 + c - 1) / c);
            CHECK(general.Lh_lower == direct);
        }
}

TEST_CASE("uniform w specialization agrees for w up to 5") {
    for (int w = 2; w <= 5; ++w)
        for (int c = 1; c <= 6; ++c)
            for (int a = c + 1; a <= 40; ++a) {
                const long long pairs = static_cast<long long>(w) * (w - 1) / 2;
                const long long num = a * pairs + (c + 1LL) * c / 2;
                const long long direct = std::max<long long>(c + 1, (num + c - 1) / c);
                CHECK(bound_g6(a, c, uniform(a, w)).Lh_lower == direct);
            }
}

TEST_CASE("bound is at least c+1 whenever finite") {
    for (int c = 1; c <= 6; ++c)
        for (int a = c + 1; a <= 20; ++a) {
            CHECK(*bound_g6(a, c, uniform(a, 2)).Lh_lower >= c + 1);
            const auto g8 = bound_g8(a, c, uniform(a, 2));
            if (g8.feasible) CHECK(*g8.Lh_lower >= c + 1);
        }
}

TEST_CASE("prop1 and prop2 structure") {
    auto p1 = construct_prop1(2);
    CHECK(p1.rows() == std::vector<std::vector<int>>{{0, 1}, {0, 3}});
    CHECK(p1.L_h() == 4);
    CHECK(girth_at_least(p1, 8));

    auto p2 = construct_prop2(3);
    CHECK(p2.rows() == std::vector<std::vector<int>>{{0, 3}, {0, 4}, {0, 5}});
    CHECK(girth_at_least(p2, 8));

    // a=1: the two constructions coincide and the graph is a forest
    auto p1a1 = construct_prop1(1);
    auto p2a1 = construct_prop2(1);
    CHECK(p1a1.rows() == p2a1.rows());
    CHECK(!conv_girth(p1a1, 12).has_value());
    CHECK(find_cycles(p1a1, 12).empty());
}

TEST_CASE("constructions verified by the oracle across sizes") {
    for (int a = 1; a <= 12; ++a) {
        auto p1 = construct_prop1(a);
        auto p2 = construct_prop2(a);
        CHECK(p1.L_h() == 2 * a);
        CHECK(p2.L_h() == 2 * a);
        CHECK(girth_at_least(p1, 8));
        CHECK(girth_at_least(p2, 8));
        CHECK(find_4cycles(build_differences(p1)).empty());
        CHECK(find_4cycles(build_differences(p2)).empty());
        CHECK(find_cycles(p1, 6).empty());
        CHECK(find_cycles(p2, 6).empty());
    }
}

TEST_SUITE_END();
