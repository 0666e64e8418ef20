#include "grasscat/roots.hpp"

#include <functional>

#include "grasscat/errors.hpp"

namespace grasscat {

int RootVector::sum() const {
    int s = 0;
    for (int v : a) s += v;
    return s;
}

std::string RootVector::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
}

const char* to_string(RootClass c) {
    switch (c) {
        case RootClass::Real: return "real";
        case RootClass::Imaginary: return "imaginary";
        default: return "not-a-root";
    }
}

long long q_form(const RootVector& v) {
    if (v.k <= 0) throw Error("q_form: k must be positive");
    const int s = v.sum();
    if (s % v.k != 0) throw Error("q_form: " + v.str() + " is not in the sublattice k | sum");
    long long sq = 0;
    for (int x : v.a) sq += static_cast<long long>(x) * x;
    const long long d = s / v.k;
    return sq + (2 - v.k) * d * d;
}

std::optional<RootCoords> root_coordinates(const RootVector& v) {
    const int n = static_cast<int>(v.a.size());
    if (v.k <= 0 || v.sum() % v.k != 0) return std::nullopt;
    RootCoords rc;
    rc.d = v.sum() / v.k;
    int c = 0;
    for (int j = 1; j <= n; ++j) {
        c = c + (j <= v.k ? rc.d : 0) - v.a[j - 1];
        if (j < n) rc.c.push_back(c);
    }
    if (c != 0) return std::nullopt;
    return rc;
}

RootVector from_coordinates(const RootCoords& rc, int n, int k) {
    RootVector v;
    v.k = k;
    v.a.assign(n, 0);
    for (int i = 1; i <= n - 1; ++i) {
        v.a[i - 1] -= rc.c[i - 1];
        v.a[i] += rc.c[i - 1];
    }
    for (int j = 0; j < k; ++j) v.a[j] += rc.d;
    return v;
}

RootClass classify_root(const RootVector& a) {
    if (a.k <= 0 || a.sum() % a.k != 0) return RootClass::NotARoot;
    const long long q = q_form(a);
    if (q == 2) return RootClass::Real;
    if (q <= 0 && root_coordinates(a)) return RootClass::Imaginary;
    return RootClass::NotARoot;
}

int degree2_entry_bound(int k) {
    int e = 0;
    while ((e + 1) * e <= 2 * k - 6) ++e;
    return e;
}

std::vector<RootVector> enumerate_real_roots(int k, int n, int degree) {
    // q(a) = sum a_i^2 - (k - 2) d^2 when sum a_i = d k
    const int total = degree * k, target = 2 + (k - 2) * degree * degree;
    int emax = 0;
    while ((emax + 1) * (emax + 1) <= target) ++emax;
    std::vector<RootVector> out;
    std::vector<int> a(n, 0);
    std::function<void(int, int, int)> rec = [&](int pos, int rest, int sq) {
        if (sq > target) return;
        if (pos == n) {
            if (rest == 0 && sq == target) out.push_back(RootVector{a, k});
            return;
        }
        for (int e = 0; e <= std::min(emax, rest); ++e) {
            a[pos] = e;
            rec(pos + 1, rest - e, sq + e * e);
        }
        a[pos] = 0;
    };
    rec(0, total, 0);
    return out;
}

std::vector<RootVector> enumerate_degree2_real_roots(int k, int n) { return enumerate_real_roots(k, n, 2); }

long long binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    long long b = 1;
    for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
    return b;
}

long long expected_rigid_rank2_count(int k, int n) { return 2 * binomial(n, 6) * binomial(n - 6, k - 3); }

}  // namespace grasscat
