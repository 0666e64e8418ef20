#include "grasscat/tubes.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <json.hpp>

#include "grasscat/fixtures.hpp"

namespace grasscat {

std::string OrbitMember::label() const {
    if (!profiles.empty()) return profiles.front().str();
    return "rk" + std::to_string(rank);
}

int orbit_v(int k, int n) { return std::lcm(n, k) / k; }

namespace {

OrbitMember make_member(const CMModuleRep& m) {
    OrbitMember om;
    om.rank = m.s;
    om.module = m;
    if (m.s <= 2) om.profiles = identify_profile(m);
    return om;
}

}  // namespace

TauOrbit tau_orbit(const Profile& start, int N) {
    const int n = start.n();
    if (N == 0) N = 2 * n;
    if (start.layers.size() == 1 && is_projective(start.layers[0]))
        throw ProjectiveInput("tau_orbit: " + start.str() + " is projective");
    TauOrbit orb;
    orb.representative = start;
    auto first = build_profile(start, N);
    orb.members.push_back(make_member(first));
    auto cur = first;
    const int limit = 4 * n;
    for (int step = 1; step <= limit; ++step) {
        cur = syzygy(cur);
        if (isomorphic(cur, first)) {
            orb.period = step;
            return orb;
        }
        orb.members.push_back(make_member(cur));
    }
    throw Error("tau_orbit: no return to " + start.str() + " within " + std::to_string(limit) + " steps");
}

ARSequence ar_sequence(const Rim& rim, int N) {
    const int n = rim.n();
    if (N == 0) N = 2 * n;
    if (is_projective(rim)) throw ProjectiveInput("ar_sequence: " + rim.str() + " is projective");
    if (!is_almost_consecutive(rim)) throw NotAlmostConsecutive("ar_sequence: " + rim.str() + " is not almost consecutive");

    ARSequence ar;
    ar.left = rim;
    auto LI = build_rank1(rim, N);
    ar.right = identify_rank1(syzygy(LI));
    auto f = ar_middle_profile(rim);
    ar.split = f.split;
    ar.projective = f.projective;
    ar.U = f.U;
    if (!f.split) ar.middle = Profile{{f.X, f.Y}};

    // the nonsplit extension of L_J by L_I; Ext^1(L_J, L_I) is one-dimensional
    auto E = build_extension(ar.right, rim, N);
    auto ext = ext1(build_rank1(ar.right, N), LI);
    auto emb = embed_rank1(rim, E);
    RootVector sum = a_vector(Profile{{rim}});
    auto aj = a_vector(Profile{{ar.right}});
    for (int i = 0; i < n; ++i) sum.a[i] += aj.a[i];
    RootVector predicted;
    if (f.split) {
        predicted = a_vector(Profile{{projective_rim(f.projective, rim.k(), n)}});
        auto au = a_vector(Profile{{f.U}});
        for (int i = 0; i < n; ++i) predicted.a[i] += au.a[i];
    } else {
        predicted = a_vector(ar.middle);
    }
    ar.exact = ext.total_dim == 1 && emb.exact && emb.quotient_rim == ar.right && module_a_vector(E) == sum &&
               predicted == sum;

    CMModuleRep expected = f.split ? direct_sum(build_rank1(projective_rim(f.projective, rim.k(), n), N), build_rank1(f.U, N))
                                   : build_extension(f.X, f.Y, N);
    ar.middle_matches_formula = isomorphic(E, expected);
    ar.middle_rigid = is_rigid(E);
    ar.middle_indecomposable = is_indecomposable(E);
    if (!f.split) {
        auto swapped = build_extension(f.Y, f.X, N);
        ar.swap_rigid = is_rigid(swapped) && is_indecomposable(swapped);
    }
    return ar;
}

std::vector<TubeFixtureSet> load_tube_fixtures() {
    auto j = nlohmann::json::parse(tube_fixture_json());
    std::vector<TubeFixtureSet> out;
    for (auto& a : j.at("ambients")) {
        TubeFixtureSet set;
        set.k = a.at("k");
        set.n = a.at("n");
        for (auto& t : a.at("tubes")) {
            TubeFixture f;
            f.figure = t.at("figure");
            f.period = t.at("period");
            f.membership_only = t.value("membership_only", false);
            for (auto& r : t.at("rows")) f.rows.push_back(TubeRow{r.get<std::vector<std::string>>()});
            set.tubes.push_back(std::move(f));
        }
        out.push_back(std::move(set));
    }
    return out;
}

namespace {

bool is_rank_token(const std::string& e) { return e.rfind("rk", 0) == 0; }

std::string join_row(const TubeRow& row) {
    std::string s;
    for (std::size_t i = 0; i < row.entries.size(); ++i) s += (i ? " -> " : "") + row.entries[i];
    return s;
}

}  // namespace

RowCheck check_row(const TubeFixture& tube, const TubeRow& row, int k, int n, int N) {
    (void)k;
    RowCheck rc;
    rc.figure = tube.figure;
    rc.row = join_row(row);
    int s0 = -1;
    for (std::size_t i = 0; i < row.entries.size(); ++i)
        if (!is_rank_token(row.entries[i])) {
            s0 = static_cast<int>(i);
            break;
        }
    if (s0 < 0) {
        rc.ok = true;
        rc.detail = "rank-only row, nothing to compare";
        return rc;
    }
    auto orb = tau_orbit(parse_profile(row.entries[s0], n), N);
    if (orb.period != tube.period) {
        rc.detail = "period " + std::to_string(orb.period) + ", expected " + std::to_string(tube.period);
        return rc;
    }
    const int p = orb.period;
    std::string placement;
    for (int i = 0; i < static_cast<int>(row.entries.size()); ++i) {
        const auto& e = row.entries[i];
        const auto& m = orb.members[((i - s0) % p + p) % p];
        bool ok;
        if (is_rank_token(e)) {
            ok = m.rank == std::stoi(e.substr(2));
        } else {
            auto prof = parse_profile(e, n);
            ok = static_cast<int>(prof.layers.size()) == m.rank && isomorphic(m.module, build_profile(prof, m.module.N));
        }
        if (!ok && placement.empty()) placement = "position " + std::to_string(i) + ": expected " + e + ", computed " + m.label();
    }
    if (placement.empty()) {
        rc.ok = true;
        rc.detail = "matches, period " + std::to_string(p);
        return rc;
    }
    if (!tube.membership_only) {
        rc.detail = placement;
        return rc;
    }
    // membership only: every listed profile lies in an orbit of the tube's period
    for (auto& e : row.entries) {
        if (is_rank_token(e)) continue;
        auto prof = parse_profile(e, n);
        if (prof.layers.size() == 1 && is_projective(prof.layers[0])) continue;
        if (tau_orbit(prof, N).period != tube.period) {
            rc.detail = e + " is not in a period-" + std::to_string(tube.period) + " orbit";
            return rc;
        }
    }
    rc.ok = true;
    rc.detail = "membership only (" + placement + ")";
    return rc;
}

TubeCensus tube_census(int k, int n, const std::vector<Profile>& rank2_seeds, int N) {
    if (N == 0) N = 2 * n;
    TubeCensus tc;
    tc.k = k;
    tc.n = n;
    tc.tame = (k == 3 && n == 9) || (k == 4 && n == 8);
    tc.v = orbit_v(k, n);
    if (!tc.tame) tc.notes.push_back("non-tame: orbits only");

    std::set<Profile> covered;
    auto run = [&](const Profile& seed) {
        if (covered.count(seed)) return;
        auto orb = tau_orbit(seed, N);
        for (auto& m : orb.members)
            for (auto& p : m.profiles) covered.insert(p);
        tc.orbits.push_back(std::move(orb));
    };
    for (auto& r : all_rims(k, n))
        if (!is_projective(r)) run(Profile{{r}});
    std::vector<Profile> seeds = rank2_seeds;
    std::sort(seeds.begin(), seeds.end());
    for (auto& p : seeds) run(p);

    tc.period_histogram.assign(2 * tc.v + 1, 0);
    for (auto& o : tc.orbits) {
        if ((2 * tc.v) % o.period != 0) tc.periods_divide_2v = false;
        if (o.period == 2 * tc.v) tc.attains_2v = true;
        if (o.period < static_cast<int>(tc.period_histogram.size())) ++tc.period_histogram[o.period];
    }

    int rank1_period3 = 0;
    for (auto& o : tc.orbits)
        if (o.representative.layers.size() == 1 && o.period == 3) ++rank1_period3;
    if (k == 3 && n == 9)
        tc.notes.push_back("period-3 orbits through rank-1 modules: " + std::to_string(rank1_period3));

    for (auto& set : load_tube_fixtures()) {
        if (set.k != k || set.n != n) continue;
        for (auto& tube : set.tubes)
            for (auto& row : tube.rows) tc.fixture_checks.push_back(check_row(tube, row, k, n, N));
    }
    return tc;
}

}  // namespace grasscat
