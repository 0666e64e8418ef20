#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "grasscat/homological.hpp"

namespace grasscat {

inline constexpr int kCensusVersion = 1;

struct CensusOptions {
    int truncation = 0;   // 0: 2n
    int cap = 0;          // 0: 8n
    bool check_stability = false;
    double sample = 1.0;  // keep each candidate with this probability
    std::uint64_t seed = 1;
    int jobs = 1;
    int max_n = 9;
};

struct Candidate {
    Profile profile;
    int interlacing = 0;
    bool tight = false;
    bool rigid = false;
    int truncation = 0;   // level at which rigidity was decided
};

// One isomorphism class of rigid indecomposable rank-2 modules.
struct CensusEntry {
    Profile profile;                 // representative
    std::vector<Profile> profiles;   // all candidate profiles realising the class
    RootVector a;
    RootClass cls = RootClass::NotARoot;
    std::string orbit_id;            // least profile over the shift orbit of the representative
    int intersection = 0;            // |I cap J| of the representative
};

struct CensusReport {
    int k = 0, n = 0;
    int truncation = 0;
    double sample = 1.0;
    long long rank1_count = 0;
    int candidate_count = 0;
    int rigid_profile_count = 0;
    std::vector<CensusEntry> rank2_rigid;
    std::vector<Candidate> non_rigid;
    int real_count = 0, imaginary_count = 0;
    bool shift_closed = false;
    bool swap_closed_real = false;       // every real class has a rigid swapped profile
    bool swap_closed_all = false;
    std::vector<std::string> swap_failures;
    bool fibers_ok = false;              // each degree-2 real root carries exactly two classes
    std::vector<std::string> fiber_failures;
    std::vector<std::string> fixture_diffs;
};

CensusReport run_census(int k, int n, const CensusOptions& opt = {});

struct ConjectureVerdict {
    std::string name;
    bool holds = false;
    int instances = 0;
    std::string detail;
};
std::vector<ConjectureVerdict> verify_conjectures(const CensusReport& report);
std::vector<ConjectureVerdict> verify_conjectures(int k, int n, const CensusOptions& opt = {});

// Comparison with the embedded reference counts; empty when everything matches
// or when no fixture exists for (k, n).
std::vector<std::string> census_fixture_diffs(const CensusReport& r);

nlohmann::json to_json(const CensusReport& r);
CensusReport census_from_json(const nlohmann::json& j);

// Cache at <dir>/census-<k>-<n>.json keyed by (k, n, truncation, version).
std::string census_cache_path(const std::string& dir, int k, int n);
std::optional<CensusReport> load_census_cache(const std::string& dir, int k, int n, int truncation);
void save_census_cache(const std::string& dir, const CensusReport& r);
std::vector<std::string> diff_reports(const CensusReport& cached, const CensusReport& fresh);

}  // namespace grasscat
