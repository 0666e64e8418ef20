#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "grasscat/module.hpp"

namespace grasscat {

// Truncation policy. Zero fields mean the defaults 2n and 8n.
struct Precision {
    int start = 0;
    int cap = 0;
    bool check_stability = false;  // recompute at N + 2 and compare

    int start_for(int n) const { return start ? start : 2 * n; }
    int cap_for(int n) const { return cap ? cap : 8 * n; }
};

// Produces a module at a requested truncation level.
using ModuleSource = std::function<CMModuleRep(int N)>;
ModuleSource source_of(const CMModuleRep& m);

// Hom(M, N) as a lattice of maps f_0 at vertex n (= 0), vec(f_0) column-major.
DVRMatrix hom_lattice(const CMModuleRep& m, const CMModuleRep& n);

struct HomBasis {
    std::vector<std::vector<DVRMatrix>> generators;  // [g][i], i = 1..n
    int z_rank = 0;
};
HomBasis hom_space(const CMModuleRep& m, const CMModuleRep& n);
// Components f_1..f_n of the map determined by f_0.
std::vector<DVRMatrix> extend_map(const CMModuleRep& m, const CMModuleRep& n, const DVRMatrix& f0);
bool is_module_map(const CMModuleRep& m, const CMModuleRep& n, const std::vector<DVRMatrix>& f, int precision);

struct TopElement {
    int vertex;
    int index;  // standard basis vector of M_vertex representing it
};
std::vector<TopElement> top_elements(const CMModuleRep& m);
std::vector<int> top(const CMModuleRep& m);

struct ProjectiveCover {
    std::vector<TopElement> summands;  // P = (+) P_v over summands
    CMModuleRep P;
    std::vector<DVRMatrix> pi;  // index 1..n, (s x p)
};
ProjectiveCover projective_cover(const CMModuleRep& m);

struct SyzygyData {
    ProjectiveCover cover;
    CMModuleRep omega;
    std::vector<DVRMatrix> K;  // inclusion Omega_i -> P_i, index 1..n
};
SyzygyData syzygy_data(const CMModuleRep& m);
CMModuleRep syzygy(const CMModuleRep& m);
ModuleSource syzygy_source(ModuleSource m);

struct ExtDecomp {
    std::vector<int> exponents;  // ascending, all positive
    int total_dim = 0;
    int truncation = 0;          // level at which the answer was accepted
    friend bool operator==(const ExtDecomp& a, const ExtDecomp& b) { return a.exponents == b.exponents; }
};
// Single attempt at the modules' own truncation level.
ExtDecomp ext1_at(const CMModuleRep& m, const CMModuleRep& n);
ExtDecomp ext1(const ModuleSource& m, const ModuleSource& n, int ambient_n, const Precision& prec = {});
ExtDecomp ext1(const CMModuleRep& m, const CMModuleRep& n, const Precision& prec = {});
bool is_rigid(const CMModuleRep& m, const Precision& prec = {});

bool isomorphic(const CMModuleRep& a, const CMModuleRep& b);
// Endomorphism ring local, via the rank of the trace form of End/t End.
bool is_indecomposable(const CMModuleRep& m);
// Poset criterion on the layers of a two-layer profile.
bool is_indecomposable_rank2(const Rim& top, const Rim& bottom);

// All profiles of rank <= 2 whose module is isomorphic to m.
std::vector<Profile> identify_profile(const CMModuleRep& m);

struct Embedding {
    std::vector<DVRMatrix> maps;  // index 1..n, (s x 1)
    CMModuleRep quotient;
    Rim quotient_rim;
    bool exact = false;
};
Embedding embed_rank1(const Rim& sub, const CMModuleRep& m, std::uint64_t seed = 7);
Embedding diagonal_embedding(const Rim& top, const Rim& bottom, int N);

}  // namespace grasscat
