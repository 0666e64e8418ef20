#include <doctest.h>

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "grasscat/dvr.hpp"

using namespace grasscat;
using boost::multiprecision::cpp_rational;

namespace {

const int N = 8;

ValPoly tp(int e, std::int64_t c = 1) { return ValPoly::monomial(Fp(c), e, N); }

DVRMatrix mat(int r, int c, std::initializer_list<ValPoly> entries) {
    DVRMatrix m(r, c, N);
    int i = 0;
    for (auto& e : entries) m(i / c, i % c) = e, ++i;
    return m;
}

template <class F>
BasicDVRMatrix<F> random_monomial_matrix(std::mt19937& g, int r, int c) {
    BasicDVRMatrix<F> m(r, c, N);
    std::uniform_int_distribution<int> coef(-3, 3), deg(0, 3);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            int a = coef(g);
            if (a != 0) m(i, j) = BasicValPoly<F>::monomial(F(a), deg(g), N);
        }
    return m;
}

}  // namespace

TEST_CASE("smith form of small matrices") {
    auto a = smith_over_dvr(mat(2, 2, {tp(1), ValPoly(N), ValPoly(N), tp(0)}));
    CHECK(a.exponents == std::vector<int>{0, 1});
    CHECK(a.free_rank == 0);

    auto b = smith_over_dvr(mat(2, 2, {ValPoly(N), tp(0), tp(2), ValPoly(N)}));
    CHECK(b.exponents == std::vector<int>{0, 2});

    auto c = smith_over_dvr(mat(2, 2, {tp(1, -1), tp(1), tp(2), tp(2, -1)}));
    CHECK(c.exponents == std::vector<int>{1});
    CHECK(c.free_rank == 1);
}

TEST_CASE("kernel bases") {
    CHECK(kernel_basis(DVRMatrix::identity(3, N)).empty());
    CHECK(kernel_basis(DVRMatrix(2, 2, N)).size() == 2);

    auto m = mat(1, 2, {tp(1), tp(0, -1)});
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    const auto& v = ker[0];
    CHECK(v(0, 0).is_unit());
    CHECK((v(1, 0) - v(0, 0) * tp(1)).is_zero());
    CHECK((m * v).is_zero());
}

TEST_CASE("solving linear systems") {
    auto rhs = mat(2, 1, {tp(0, 5), tp(3, -2)});
    auto x = solve_linear(DVRMatrix::identity(2, N), rhs);
    REQUIRE(x);
    CHECK(*x == rhs);

    CHECK_FALSE(solve_linear(mat(1, 1, {tp(1)}), mat(1, 1, {tp(0)})));
    auto y = solve_linear(mat(1, 1, {tp(1)}), mat(1, 1, {tp(3)}));
    REQUIRE(y);
    CHECK((*y)(0, 0).with_trunc(N - 1) == tp(2).with_trunc(N - 1));
}

TEST_CASE("invariant factors ignore permutations and unit multiples") {
    std::mt19937 g(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto m = random_monomial_matrix<Fp>(g, 3, 4);
        auto base = smith_over_dvr(m);
        auto p = m;
        p.swap_rows(0, 2);
        p.swap_cols(1, 3);
        p.scale_row(1, ValPoly::constant(Fp(7), N) + tp(2, 3));
        p.add_col(0, 2, tp(1, -4));
        auto after = smith_over_dvr(p);
        CHECK(after.exponents == base.exponents);
        CHECK(after.free_rank == base.free_rank);
    }
}

TEST_CASE("prime field agrees with exact rationals") {
    std::mt19937 g1(5), g2(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto mp = random_monomial_matrix<Fp>(g1, 4, 4);
        auto mq = random_monomial_matrix<cpp_rational>(g2, 4, 4);
        auto a = smith_over_dvr(mp);
        auto b = smith_over_dvr(mq);
        CHECK(a.exponents == b.exponents);
        CHECK(a.free_rank == b.free_rank);
    }
}

TEST_CASE("raising the truncation keeps exponents") {
    std::mt19937 g(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto m = random_monomial_matrix<Fp>(g, 3, 3);
        auto a = smith_over_dvr(m);
        auto b = smith_over_dvr(m.with_trunc(N + 2));
        if (a.free_rank == 0) CHECK(a.exponents == b.exponents);
    }
}

TEST_CASE("valuations and unit inverses") {
    CHECK(ValPoly(N).val() == ValPoly::INF);
    auto u = ValPoly::constant(Fp(3), N) + tp(1) + tp(4, -2);
    CHECK((u * u.unit_inverse() - ValPoly::constant(Fp(1), N)).is_zero());
    CHECK(tp(3).shifted(-2) == tp(1));
}
