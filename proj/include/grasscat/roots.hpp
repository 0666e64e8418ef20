#pragma once

#include <optional>
#include <string>
#include <vector>

namespace grasscat {

struct RootVector {
    std::vector<int> a;
    int k = 0;

    int sum() const;
    int degree() const { return sum() / k; }
    friend bool operator==(const RootVector& x, const RootVector& y) { return x.k == y.k && x.a == y.a; }
    friend bool operator<(const RootVector& x, const RootVector& y) { return x.a < y.a; }
    std::string str() const;
};

struct RootCoords {
    std::vector<int> c;  // coefficients of alpha_1 .. alpha_{n-1}
    int d = 0;           // coefficient of beta
};

enum class RootClass { Real, Imaginary, NotARoot };
const char* to_string(RootClass c);

// q(a) = sum a_i^2 + (2-k)/k^2 (sum a_i)^2; integral on the sublattice where k | sum a_i.
long long q_form(const RootVector& a);
// Real: q = 2. Imaginary: q <= 0 with integral coordinates. Anything else,
// including q = 1 which the even form never takes on roots, is not a root.
RootClass classify_root(const RootVector& a);
std::optional<RootCoords> root_coordinates(const RootVector& a);
RootVector from_coordinates(const RootCoords& c, int n, int k);

// Largest entry e allowed in a nonnegative degree-2 real root: e^2 - e <= 2k - 6.
int degree2_entry_bound(int k);
std::vector<RootVector> enumerate_real_roots(int k, int n, int degree);
std::vector<RootVector> enumerate_degree2_real_roots(int k, int n);
long long expected_rigid_rank2_count(int k, int n);
long long binomial(int n, int r);

}  // namespace grasscat
