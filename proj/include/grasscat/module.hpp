#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grasscat/dvr.hpp"
#include "grasscat/rim.hpp"
#include "grasscat/roots.hpp"

namespace grasscat {

// Quiver representation of a CM module: free Z-module of rank s at every
// vertex, x_i : V_{i-1} -> V_i and y_i : V_i -> V_{i-1}, i = 1..n, with
// vertex 0 identified with vertex n.
struct CMModuleRep {
    int n = 0, k = 0, s = 0, N = 0;
    std::vector<DVRMatrix> x, y;  // index 1..n; slot 0 unused
    // Entries are polynomials of degree < N, so padding to a larger N is exact.
    bool exact = true;

    const DVRMatrix& xm(int i) const { return x[wrap(i, n)]; }
    const DVRMatrix& ym(int i) const { return y[wrap(i, n)]; }
    CMModuleRep with_trunc(int N2) const;
};

// Filtration data, quotient layer first: I|J has sub L_J and quotient L_I.
struct Profile {
    std::vector<Rim> layers;
    int n() const { return layers.empty() ? 0 : layers[0].n(); }
    int k() const { return layers.empty() ? 0 : layers[0].k(); }
    std::string str() const;
    friend bool operator==(const Profile& a, const Profile& b) { return a.layers == b.layers; }
    friend bool operator<(const Profile& a, const Profile& b) { return a.layers < b.layers; }
};

Profile parse_profile(const std::string& text, int n_hint = 0);
Profile shift(const Profile& p, int m);

struct RelationFailure {
    int vertex;
    std::string relation;
};

DVRMatrix sigma_power(int s, int j, int N);
CMModuleRep build_rank1(const Rim& rim, int N);
CMModuleRep build_layered(const std::vector<Rim>& rims, int N);
std::vector<RelationFailure> validate_relations(const CMModuleRep& m);
int rank(const CMModuleRep& m);
RootVector a_vector(const Profile& p);
RootVector module_a_vector(const CMModuleRep& m);
CMModuleRep direct_sum(const CMModuleRep& a, const CMModuleRep& b);

// The generic extension 0 -> L_bottom -> E -> L_top -> 0: a seeded random
// point of the space of gluing data, which realises the largest orbit.
CMModuleRep build_extension(const Rim& top, const Rim& bottom, int N, std::uint64_t seed = 1);
// Profile-driven module: rank 1 for one layer, the generic extension for two.
CMModuleRep build_profile(const Profile& p, int N);

Rim identify_rank1(const CMModuleRep& m);

RootClass classify_module_root(const Profile& p);

}  // namespace grasscat
