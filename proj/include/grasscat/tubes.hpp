#pragma once

#include <string>
#include <vector>

#include "grasscat/homological.hpp"

namespace grasscat {

struct OrbitMember {
    int rank = 0;
    std::vector<Profile> profiles;  // every rank <= 2 profile realising it
    CMModuleRep module;
    std::string label() const;      // first profile, or "rk<s>"
};

struct TauOrbit {
    Profile representative;
    std::vector<OrbitMember> members;  // successive syzygies, starting at the representative
    int period = 0;
};

// v = lcm(n, k) / k
int orbit_v(int k, int n);

TauOrbit tau_orbit(const Profile& start, int N = 0);

struct ARSequence {
    Rim left;                 // I
    Rim right;                // J, the syzygy of I
    bool split = false;       // middle decomposes as P_i (+) L_U
    Profile middle;           // X|Y when not split
    int projective = 0;
    Rim U;
    bool exact = false;                  // a-vectors add up and L_I embeds with cokernel L_J
    bool middle_matches_formula = false; // computed middle isomorphic to the predicted one
    bool middle_rigid = false;
    bool middle_indecomposable = false;
    bool swap_rigid = false;             // Y|X rigid indecomposable when not split
};
ARSequence ar_sequence(const Rim& rim, int N = 0);

// One row of a figure: consecutive members of a tau-orbit. Entries are rims,
// profiles "X|Y", or "rk<s>" for a module known only by rank.
struct TubeRow {
    std::vector<std::string> entries;
};
struct TubeFixture {
    std::string figure;
    int period = 0;
    bool membership_only = false;
    std::vector<TubeRow> rows;
};
struct TubeFixtureSet {
    int k = 0, n = 0;
    std::vector<TubeFixture> tubes;
};
std::vector<TubeFixtureSet> load_tube_fixtures();

struct RowCheck {
    std::string figure;
    std::string row;
    bool ok = false;
    std::string detail;
};

struct TubeCensus {
    int k = 0, n = 0;
    bool tame = false;
    int v = 0;
    std::vector<TauOrbit> orbits;        // rank-1 seeds then rank-2 seeds, lexicographic by representative
    std::vector<int> period_histogram;   // index = period
    bool periods_divide_2v = true;
    bool attains_2v = false;
    std::vector<RowCheck> fixture_checks;
    std::vector<std::string> notes;
};

TubeCensus tube_census(int k, int n, const std::vector<Profile>& rank2_seeds = {}, int N = 0);
// Compares one fixture row with computed syzygy orbits.
RowCheck check_row(const TubeFixture& tube, const TubeRow& row, int k, int n, int N);

}  // namespace grasscat
