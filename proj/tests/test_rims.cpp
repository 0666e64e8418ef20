#include <doctest.h>

#include "grasscat/errors.hpp"
#include "grasscat/rim.hpp"
#include "oracles.hpp"

using namespace grasscat;

namespace {

Rim R(int n, std::vector<int> e) { return Rim(n, e); }

std::vector<int> lengths(const std::vector<Interval>& v) {
    std::vector<int> out;
    for (auto& iv : v) out.push_back(iv.length);
    return out;
}

}  // namespace

TEST_CASE("peaks") {
    CHECK(peaks(R(8, {1, 4, 5})) == std::vector<int>{3, 8});
    CHECK(peaks(R(8, {2, 3, 4})) == std::vector<int>{1});
    CHECK(peaks(R(9, {1, 4, 7})) == std::vector<int>{3, 6, 9});
}

TEST_CASE("slopes") {
    auto s = slopes(R(8, {1, 4, 5}));
    CHECK(lengths(s.down) == std::vector<int>{1, 2});
    CHECK(lengths(s.up) == std::vector<int>{2, 3});
    CHECK(s.min_slope == 1);
    auto p = slopes(R(6, {1, 2, 3}));
    CHECK(lengths(p.down) == std::vector<int>{3});
    CHECK(p.min_slope == 3);
    auto a = slopes(R(6, {1, 3, 5}));
    CHECK(lengths(a.down) == std::vector<int>{1, 1, 1});
    CHECK(lengths(a.up) == std::vector<int>{1, 1, 1});
    CHECK(a.min_slope == 1);
}

TEST_CASE("shift") {
    CHECK(shift(R(9, {1, 2, 6}), 3) == R(9, {4, 5, 9}));
    CHECK(shift(R(8, {1, 4, 5}), 0) == R(8, {1, 4, 5}));
    CHECK(shift(R(9, {3, 7, 8}), 3) == R(9, {1, 2, 6}));
}

TEST_CASE("projectives") {
    CHECK(is_projective(R(8, {6, 7, 8})) == 5);
    CHECK(is_projective(R(6, {1, 2, 3})) == 6);
    CHECK_FALSE(is_projective(R(6, {1, 3, 5})));
    CHECK(projective_rim(5, 3, 8) == R(8, {6, 7, 8}));
}

TEST_CASE("almost consecutive rims and their syzygy rims") {
    CHECK(is_almost_consecutive(R(8, {1, 4, 5})) == std::pair{1, 4});
    CHECK_FALSE(is_almost_consecutive(R(9, {1, 4, 7})));
    CHECK(is_almost_consecutive(R(8, {1, 3, 4})) == std::pair{1, 3});
    CHECK_FALSE(is_almost_consecutive(R(8, {1, 2, 3})));

    CHECK(syzygy_rim(R(9, {1, 4, 5})) == R(9, {2, 3, 6}));
    CHECK(syzygy_rim(R(9, {2, 3, 6})) == R(9, {4, 7, 8}));
    CHECK(syzygy_rim(R(9, {1, 2, 6})) == R(9, {3, 7, 8}));
    CHECK_THROWS_AS(syzygy_rim(R(9, {1, 4, 7})), NotAlmostConsecutive);
}

TEST_CASE("syzygy rim agrees with the closed formula and squares to the shift by k") {
    for (int n = 6; n <= 12; ++n)
        for (int k = 3; 2 * k <= n; ++k)
            for (auto& r : all_rims(k, n)) {
                oracle::Set J;
                bool ac = oracle::almost_consecutive_syzygy(r.elements(), n, J);
                CHECK(ac == static_cast<bool>(is_almost_consecutive(r)));
                if (!ac) continue;
                auto s = syzygy_rim(r);
                CHECK(s.elements() == J);
                CHECK(syzygy_rim(s) == shift(r, k));
            }
}

TEST_CASE("crossing and interlacing") {
    CHECK_FALSE(crossing(R(6, {1, 2, 3}), R(6, {4, 5, 6})));
    CHECK(crossing(R(6, {1, 3, 5}), R(6, {2, 4, 6})));
    CHECK_FALSE(crossing(R(6, {1, 3, 5}), R(6, {1, 3, 5})));
    CHECK(interlacing_degree(R(8, {2, 5, 7}), R(8, {1, 3, 6})) == 3);
    CHECK(interlacing_degree(R(8, {1, 3, 5, 7}), R(8, {2, 4, 6, 8})) == 4);
    CHECK(interlacing_degree(R(6, {1, 2, 3}), R(6, {4, 5, 6})) == 1);
    CHECK_THROWS_AS(crossing(R(6, {1, 2, 3}), R(7, {1, 2, 3})), MismatchedAmbient);
}

TEST_CASE("pair classification") {
    auto a = classify_pair(R(8, {1, 2, 4, 6}), R(8, {2, 3, 5, 7}));
    CHECK(a.interlacing_degree == 3);
    CHECK(a.intersection_size == 1);
    CHECK(a.tight);
    CHECK(a.poset == "(1^3,2)");
    auto b = classify_pair(R(8, {1, 2, 4, 6}), R(8, {3, 5, 7, 8}));
    CHECK(b.interlacing_degree == 3);
    CHECK(b.intersection_size == 0);
    CHECK_FALSE(b.tight);
    auto c = classify_pair(R(6, {1, 3, 5}), R(6, {1, 3, 5}));
    CHECK(c.interlacing_degree == 0);
    CHECK_FALSE(c.tight);
}

TEST_CASE("pair invariants against the definitions") {
    for (int n = 6; n <= 9; ++n)
        for (int k = 3; 2 * k <= n; ++k) {
            auto rims = all_rims(k, n);
            for (auto& I : rims)
                for (auto& J : rims) {
                    int r = interlacing_degree(I, J);
                    CHECK(r == oracle::interlacing(I.elements(), J.elements(), n));
                    CHECK(crossing(I, J) == oracle::crossing(I.elements(), J.elements(), n));
                    CHECK(crossing(I, J) == (r >= 2));
                    CHECK(crossing(I, J) == crossing(J, I));
                    auto p = classify_pair(I, J), q = classify_pair(J, I);
                    CHECK(p.interlacing_degree == q.interlacing_degree);
                    CHECK(p.tight == q.tight);
                    CHECK(p.intersection_size == q.intersection_size);
                    if (k == 3) {
                        CHECK(r <= 3);
                        if (r == 3) CHECK(p.tight);
                    }
                }
        }
}

TEST_CASE("rim invariants") {
    for (int n = 5; n <= 12; ++n)
        for (int k = 2; 2 * k <= n; ++k)
            for (auto& r : all_rims(k, n)) {
                auto s = slopes(r);
                int down = 0;
                for (auto& iv : s.down) down += iv.length;
                CHECK(down == k);
                CHECK(peaks(r).size() == s.down.size());
                CHECK(static_cast<int>(peaks(r).size()) == oracle::peak_count(r.elements(), n));
                CHECK(s.min_slope == oracle::min_slope(r.elements(), n));
                CHECK(shift(r, n) == r);
                CHECK(shift(shift(r, 5), -5) == r);
                std::vector<int> shifted_peaks;
                for (int p : peaks(r)) shifted_peaks.push_back(wrap(p + 3, n));
                std::sort(shifted_peaks.begin(), shifted_peaks.end());
                CHECK(peaks(shift(r, 3)) == shifted_peaks);
            }
}

TEST_CASE("AR middle terms at rim level") {
    auto a = ar_middle_profile(R(8, {1, 4, 5}));
    CHECK_FALSE(a.split);
    CHECK(a.X == R(8, {2, 4, 6}));
    CHECK(a.Y == R(8, {1, 3, 5}));
    auto b = ar_middle_profile(R(8, {1, 3, 4}));
    CHECK(b.split);
    CHECK(b.projective == 1);
    CHECK(b.U == R(8, {1, 3, 5}));
    auto c = ar_middle_profile(R(9, {1, 2, 6}));
    CHECK(c.X == R(9, {1, 3, 7}));
    CHECK(c.Y == R(9, {2, 6, 8}));
    CHECK_THROWS_AS(ar_middle_profile(R(9, {1, 4, 7})), NotAlmostConsecutive);
}

TEST_CASE("text forms") {
    CHECK(parse_rim("145@(3,8)") == R(8, {1, 4, 5}));
    CHECK(parse_rim("1,4,5@(3,10)") == R(10, {1, 4, 5}));
    CHECK(parse_rim("145", 8) == R(8, {1, 4, 5}));
    CHECK(R(10, {1, 4, 5}).str() == "1,4,5");
    CHECK_THROWS_AS(parse_rim("145"), ParseError);
    CHECK_THROWS_AS(parse_rim("145@(4,8)"), ParseError);
    CHECK_THROWS(Rim(8, {1, 1, 2}));
}
