#include <doctest.h>

#include <random>

#include "grasscat/diagram.hpp"
#include "grasscat/homological.hpp"

using namespace grasscat;

namespace {

Rim R(int n, std::vector<int> e) { return Rim(n, e); }

const int N = 16;

ValPoly tp(int e) { return ValPoly::t_power(e, N); }

}  // namespace

TEST_CASE("sigma powers") {
    auto s1 = sigma_power(2, 1, N);
    CHECK(s1(0, 1) == tp(0));
    CHECK(s1(1, 0) == tp(1));
    CHECK(s1(0, 0).is_zero());
    CHECK(sigma_power(2, 2, N) == DVRMatrix::scalar(2, tp(1)));
    auto s32 = sigma_power(3, 2, N);
    CHECK(s32(0, 2) == tp(0));
    CHECK(s32(1, 0) == tp(1));
    CHECK(s32(2, 1) == tp(1));
    for (int s = 1; s <= 6; ++s) {
        auto p = DVRMatrix::identity(s, N);
        for (int j = 0; j <= s; ++j) {
            CHECK(p == sigma_power(s, j, N));
            p = p * sigma_power(s, 1, N);
        }
    }
    CHECK_THROWS(sigma_power(2, 3, N));
}

TEST_CASE("rank one modules") {
    auto m = build_rank1(R(8, {1, 4, 5}), N);
    CHECK(m.x[1](0, 0) == tp(0));
    CHECK(m.x[2](0, 0) == tp(1));
    CHECK(m.y[1](0, 0) == tp(1));
    CHECK(m.y[2](0, 0) == tp(0));
    CHECK(rank(m) == 1);
    CHECK(validate_relations(m).empty());
    CHECK(top(build_rank1(R(8, {6, 7, 8}), N)) == std::vector<int>{5});
    for (int n = 4; n <= 12; ++n)
        for (int k = 2; 2 * k <= n; ++k)
            for (auto& r : all_rims(k, n)) {
                auto L = build_rank1(r, 2 * n);
                CHECK(validate_relations(L).empty());
                CHECK(identify_rank1(L) == r);
            }
}

TEST_CASE("relation failures are located") {
    auto m = build_rank1(R(8, {1, 4, 5}), N);
    m.x[2](0, 0) = tp(0);
    auto f = validate_relations(m);
    REQUIRE_FALSE(f.empty());
    CHECK(f[0].vertex == 2);
}

TEST_CASE("layered modules satisfy the relations") {
    CHECK(validate_relations(build_layered({R(9, {2, 5, 8, 9}), R(9, {1, 3, 7, 8})}, N)).empty());
    auto three = build_layered({R(8, {3, 6, 8}), R(8, {2, 5, 8}), R(8, {1, 4, 7})}, N);
    CHECK(rank(three) == 3);
    CHECK(validate_relations(three).empty());
    CHECK(isomorphic(build_layered({R(8, {1, 4, 5})}, N), build_rank1(R(8, {1, 4, 5}), N)));

    std::mt19937 g(2);
    for (auto [k, n] : std::vector<std::pair<int, int>>{{3, 8}, {4, 9}}) {
        auto rims = all_rims(k, n);
        std::uniform_int_distribution<std::size_t> pick(0, rims.size() - 1);
        for (int t = 0; t < 100; ++t) {
            auto I = rims[pick(g)], J = rims[pick(g)];
            auto m = build_layered({I, J}, 2 * n);
            CHECK(rank(m) == 2);
            CHECK(validate_relations(m).empty());
            auto e = build_extension(I, J, 2 * n);
            CHECK(validate_relations(e).empty());
            CHECK(module_a_vector(e) == a_vector(Profile{{I, J}}));
        }
    }
}

TEST_CASE("the sigma construction splits over the coordinate basis") {
    // with x_i = sigma^{s-r_i} the two layers are not glued
    auto m = build_layered({R(6, {1, 3, 5}), R(6, {2, 4, 6})}, 12);
    CHECK_FALSE(is_indecomposable(m));
    CHECK(is_indecomposable(build_extension(R(6, {1, 3, 5}), R(6, {2, 4, 6}), 12)));
}

TEST_CASE("a-vectors") {
    auto a = a_vector(Profile{{R(6, {1, 3, 5}), R(6, {2, 4, 6})}});
    CHECK(a.a == std::vector<int>{1, 1, 1, 1, 1, 1});
    auto b = a_vector(Profile{{R(8, {2, 5, 6, 8}), R(8, {1, 3, 4, 7})}});
    CHECK(b.a == std::vector<int>(8, 1));
    CHECK(a_vector(Profile{{R(6, {1, 2, 3})}}).a == std::vector<int>{1, 1, 1, 0, 0, 0});
    auto rims = all_rims(3, 7);
    for (auto& I : rims)
        for (auto& J : rims) CHECK(a_vector(Profile{{I, J}}) == a_vector(Profile{{J, I}}));
}

TEST_CASE("direct sums") {
    auto m = direct_sum(build_rank1(R(6, {1, 2, 3}), N), build_rank1(R(6, {1, 3, 5}), N));
    CHECK(rank(m) == 2);
    CHECK(validate_relations(m).empty());
}

TEST_CASE("embeddings of the bottom layer") {
    auto same = diagonal_embedding(R(8, {1, 4, 5}), R(8, {1, 4, 5}), N);
    CHECK(same.exact);
    CHECK(same.quotient_rim == R(8, {1, 4, 5}));
    auto e = diagonal_embedding(R(6, {1, 3, 5}), R(6, {2, 4, 6}), 12);
    CHECK(e.exact);
    CHECK(e.quotient_rim == R(6, {1, 3, 5}));
    auto f = diagonal_embedding(R(8, {2, 5, 7}), R(8, {1, 3, 6}), N);
    CHECK(f.exact);
    CHECK(f.quotient_rim == R(8, {2, 5, 7}));
}

TEST_CASE("rank one identification is basis independent") {
    auto m = build_rank1(R(8, {1, 4, 5}), N);
    // change of basis by the unit 3^i at vertex i (vertex 0 is vertex 8)
    auto c = [](int i) { return Fp(3).pow(static_cast<std::uint64_t>(i == 0 ? 8 : i)); };
    for (int i = 1; i <= 8; ++i) {
        m.x[i](0, 0) = m.x[i](0, 0) * ValPoly::constant(c(i) / c(i - 1), N);
        m.y[i](0, 0) = m.y[i](0, 0) * ValPoly::constant(c(i - 1) / c(i), N);
    }
    CHECK(validate_relations(m).empty());
    CHECK(identify_rank1(m) == R(8, {1, 4, 5}));
    CHECK_THROWS_AS(identify_rank1(build_layered({R(8, {1, 4, 5}), R(8, {1, 4, 5})}, N)), NotRankOne);
}

TEST_CASE("profiles") {
    auto p = parse_profile("246|135@(3,8)");
    CHECK(p.layers.size() == 2);
    CHECK(p.str() == "246|135");
    CHECK(shift(p, 1).str() == "357|246");
    CHECK_THROWS_AS(parse_profile("246|1356@(3,8)"), ParseError);
}

TEST_CASE("lattice diagrams") {
    auto d = lattice_diagram_data(Profile{{R(8, {1, 4, 5})}});
    CHECK(d.layers[0].heights == std::vector<int>{2, 1, 2, 3, 2, 1, 2, 3, 4});
    CHECK(d.column_labels.front() == "8");
    CHECK(d.column_labels.back() == "8");

    auto two = lattice_diagram_data(Profile{{R(9, {2, 5, 8, 9}), R(9, {1, 3, 7, 8})}});
    const auto &up = two.layers[0].heights, &lo = two.layers[1].heights;
    int touch = 0;
    for (int c = 0; c <= 9; ++c) {
        CHECK(lo[c] <= up[c]);
        touch += lo[c] == up[c];
    }
    CHECK(touch > 0);

    auto proj = lattice_diagram_data(Profile{{R(8, {6, 7, 8})}});
    int turns = 0;
    for (int c = 1; c < 8; ++c) {
        int a = proj.layers[0].heights[c] - proj.layers[0].heights[c - 1];
        int b = proj.layers[0].heights[c + 1] - proj.layers[0].heights[c];
        turns += a != b;
    }
    CHECK(turns == 1);
    CHECK(to_svg(d).find("<polyline") != std::string::npos);
    CHECK(to_tikz(d).find("\\begin{tikzpicture}") == 0);
}
