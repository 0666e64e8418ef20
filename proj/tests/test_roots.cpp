#include <doctest.h>

#include <set>

#include "grasscat/module.hpp"
#include "grasscat/roots.hpp"
#include "oracles.hpp"

using namespace grasscat;

TEST_CASE("quadratic form") {
    CHECK(q_form(RootVector{{1, 1, 1, 1, 1, 1}, 3}) == 2);
    CHECK(q_form(RootVector{{1, 1, 1, 0, 0, 0}, 3}) == 2);
    CHECK(q_form(RootVector{{1, 1, 1, 1, 1, 1, 1, 1}, 4}) == 0);
    CHECK(classify_root(RootVector{{1, 1, 1, 1, 1, 1}, 3}) == RootClass::Real);
    CHECK(classify_root(RootVector{{1, 1, 1, 1, 1, 1, 1, 1}, 4}) == RootClass::Imaginary);
    CHECK(classify_root(RootVector{{2, 1, 0, 0, 0, 0}, 3}) == RootClass::NotARoot);
}

TEST_CASE("root coordinates") {
    auto c = root_coordinates(RootVector{{1, 1, 1, 1, 1, 1}, 3});
    REQUIRE(c);
    CHECK(c->c == std::vector<int>{1, 2, 3, 2, 1});
    CHECK(c->d == 2);
    CHECK(from_coordinates(*c, 6, 3) == RootVector{{1, 1, 1, 1, 1, 1}, 3});
    CHECK_FALSE(root_coordinates(RootVector{{1, 1, 0, 0, 0, 0}, 3}));
}

TEST_CASE("degree-2 real roots match brute force") {
    for (auto [k, n, expected] : std::vector<std::tuple<int, int, int>>{{3, 6, 1}, {3, 7, 7}, {3, 8, 28}, {3, 9, 84}, {4, 8, 56}}) {
        auto roots = enumerate_degree2_real_roots(k, n);
        std::set<std::vector<int>> got;
        for (auto& r : roots) got.insert(r.a);
        auto want = oracle::vectors_with(n, 2 * k, 2 + 4 * (k - 2));
        CHECK(got == want);
        CHECK(static_cast<int>(roots.size()) == expected);
        CHECK(expected_rigid_rank2_count(k, n) == 2 * expected);
    }
    for (int n = 6; n <= 12; ++n) CHECK(enumerate_degree2_real_roots(3, n).size() == static_cast<std::size_t>(binomial(n, 6)));
}

TEST_CASE("real roots of other degrees") {
    for (auto [k, n, d] : std::vector<std::tuple<int, int, int>>{{3, 7, 1}, {3, 8, 3}, {4, 8, 1}, {4, 8, 3}}) {
        std::set<std::vector<int>> got;
        for (auto& r : enumerate_real_roots(k, n, d)) got.insert(r.a);
        CHECK(got == oracle::vectors_with(n, d * k, 2 + (k - 2) * d * d));
    }
}

TEST_CASE("entry bound") {
    CHECK(degree2_entry_bound(3) == 1);
    CHECK(degree2_entry_bound(4) == 2);
    CHECK(degree2_entry_bound(6) == 3);
    for (int k = 3; k <= 7; ++k) {
        int e = degree2_entry_bound(k);
        CHECK(e * e - e <= 2 * k - 6);
        CHECK((e + 1) * (e + 1) - (e + 1) > 2 * k - 6);
    }
}

TEST_CASE("roots of profiles") {
    CHECK(classify_module_root(parse_profile("246|135", 6)) == RootClass::Real);
    CHECK(classify_module_root(parse_profile("1357|2468", 8)) == RootClass::Imaginary);
    CHECK(classify_module_root(parse_profile("1246|3578", 8)) == RootClass::Imaginary);
    CHECK(classify_module_root(parse_profile("145", 8)) == RootClass::Real);
}
