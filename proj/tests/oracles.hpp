#pragma once

// Reference implementations written from the definitions, deliberately
// naive and independent of the library code they check.

#include <algorithm>
#include <set>
#include <vector>

namespace oracle {

using Set = std::vector<int>;  // sorted subset of 1..n

inline bool has(const Set& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); }

inline Set shift(const Set& s, int m, int n) {
    Set r;
    for (int x : s) r.push_back(((x - 1 + m) % n + n) % n + 1);
    std::sort(r.begin(), r.end());
    return r;
}

// a < b < c < d in 1..n (any rotation) with a, c in I\J and b, d in J\I
inline bool crossing(const Set& I, const Set& J, int n) {
    std::vector<int> only_i, only_j;
    for (int x = 1; x <= n; ++x) {
        if (has(I, x) && !has(J, x)) only_i.push_back(x);
        if (has(J, x) && !has(I, x)) only_j.push_back(x);
    }
    for (int a : only_i)
        for (int b : only_j)
            for (int c : only_i)
                for (int d : only_j)
                    if ((a < b && b < c && c < d) || (b < c && c < d && d < a) || (c < d && d < a && a < b) ||
                        (d < a && a < b && b < c))
                        return true;
    return false;
}

// Largest r with a cyclic alternation x1 < y1 < x2 < ... < yr, x in I\J, y in J\I.
inline int interlacing(const Set& I, const Set& J, int n) {
    std::vector<int> seq;  // 0 for I\J, 1 for J\I, in cyclic order
    for (int x = 1; x <= n; ++x) {
        if (has(I, x) && !has(J, x)) seq.push_back(0);
        if (has(J, x) && !has(I, x)) seq.push_back(1);
    }
    if (seq.empty()) return 0;
    int best = 0;
    for (std::size_t start = 0; start < seq.size(); ++start) {
        // greedy alternation from this starting point, cyclic
        int len = 0, want = seq[start];
        for (std::size_t t = 0; t < seq.size(); ++t) {
            int s = seq[(start + t) % seq.size()];
            if (s == want) ++len, want ^= 1;
        }
        best = std::max(best, len / 2);
    }
    return best;
}

inline int peak_count(const Set& I, int n) {
    int p = 0;
    for (int i = 1; i <= n; ++i)
        if (!has(I, i) && has(I, i % n + 1)) ++p;
    return p;
}

// Shortest maximal cyclic run of elements or of non-elements.
inline int min_slope(const Set& I, int n) {
    int best = n;
    for (int i = 1; i <= n; ++i) {
        int prev = (i + n - 2) % n + 1;
        if (has(I, i) == has(I, prev)) continue;  // not the start of a run
        int len = 0;
        for (int j = i; len < n && has(I, (j - 1) % n + 1) == has(I, i); ++j) ++len;
        best = std::min(best, len);
    }
    return best;
}

// For I = {i, j, ..., j+k-2} with singleton {i}: J = {i+1, ..., i+k-1, j+k-1}.
inline bool almost_consecutive_syzygy(const Set& I, int n, Set& J) {
    const int k = static_cast<int>(I.size());
    for (int i : I) {
        if (has(I, (i % n) + 1) || has(I, (i + n - 2) % n + 1)) continue;  // i must be isolated
        for (int j = 1; j <= n; ++j) {
            Set cand{i};
            for (int a = 0; a <= k - 2; ++a) cand.push_back((j - 1 + a) % n + 1);
            std::sort(cand.begin(), cand.end());
            if (std::adjacent_find(cand.begin(), cand.end()) != cand.end() || cand != I) continue;
            Set out;
            for (int a = 1; a <= k - 1; ++a) out.push_back((i - 1 + a) % n + 1);
            out.push_back((j + k - 2) % n + 1);
            std::sort(out.begin(), out.end());
            J = out;
            return true;
        }
    }
    return false;
}

// Exponents e_0..e_n of the generator of Hom(L_I, L_J): f_i = t^{e_i},
// compatibility with x_i forces e_i = e_{i-1} + [i not in J] - [i not in I];
// the generator is the lowest feasible placement.
inline std::vector<int> rank1_hom_exponents(const Set& I, const Set& J, int n) {
    for (int d = 0; d <= n; ++d) {
        std::vector<int> e(n + 1);
        e[0] = d;
        bool ok = true;
        for (int i = 1; i <= n; ++i) {
            e[i] = e[i - 1] + (!has(J, i)) - (!has(I, i));
            ok = ok && e[i] >= 0;
        }
        if (ok) return e;
    }
    return {};
}

// Observed rim of the syzygy of a two-peak rim: after each maximal run of
// elements ending at e comes a run e+1, ..., e+d', d' the other run's length.
inline Set two_peak_syzygy(const Set& I, int n) {
    std::vector<std::pair<int, int>> runs;  // (last element, length)
    for (int i = 1; i <= n; ++i) {
        if (!has(I, i) || has(I, i % n + 1)) continue;
        int len = 0;
        for (int j = i; has(I, (j - 1 + n) % n + 1) && len < n; --j) ++len;
        runs.push_back({i, len});
    }
    if (runs.size() != 2) return {};
    Set out;
    for (int t = 0; t < 2; ++t)
        for (int a = 1; a <= runs[1 - t].second; ++a) out.push_back((runs[t].first - 1 + a) % n + 1);
    std::sort(out.begin(), out.end());
    return out;
}

// All nonnegative integer vectors with the given sum and sum of squares.
inline std::set<std::vector<int>> vectors_with(int n, int sum, int squares) {
    std::set<std::vector<int>> out;
    std::vector<int> a(n, 0);
    auto rec = [&](auto&& self, int pos, int rest, int sq) -> void {
        if (pos == n - 1) {
            a[pos] = rest;
            if (sq + rest * rest == squares) out.insert(a);
            return;
        }
        for (int e = 0; e <= rest; ++e) {
            a[pos] = e;
            self(self, pos + 1, rest - e, sq + e * e);
        }
    };
    rec(rec, 0, sum, 0);
    return out;
}

}  // namespace oracle
