#include "grasscat/census.hpp"

#include <algorithm>
#include <bit>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>

#include "grasscat/fixtures.hpp"
#include "grasscat/parallel.hpp"

namespace grasscat {

namespace {

Profile swap_layers(const Profile& p) { return Profile{{p.layers[1], p.layers[0]}}; }

int intersection_size(const Profile& p) { return std::popcount(p.layers[0].mask() & p.layers[1].mask()); }

Profile least_shift(const Profile& p) {
    Profile best = p;
    for (int m = 1; m < p.n(); ++m) best = std::min(best, shift(p, m));
    return best;
}

}  // namespace

CensusReport run_census(int k, int n, const CensusOptions& opt) {
    if (k < 3 || 2 * k > n) throw Error("run_census: need 3 <= k <= n/2");
    if (n > opt.max_n) throw Error("run_census: n exceeds the configured cap " + std::to_string(opt.max_n));
    CensusReport rep;
    rep.k = k;
    rep.n = n;
    rep.sample = opt.sample;
    Precision prec{opt.truncation, opt.cap, opt.check_stability};
    rep.truncation = prec.start_for(n);
    rep.rank1_count = binomial(n, k);

    auto rims = all_rims(k, n);
    std::mt19937_64 gen(opt.seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Candidate> cands;
    for (auto& I : rims)
        for (auto& J : rims) {
            if (I == J) continue;
            auto pc = classify_pair(I, J);
            if (pc.interlacing_degree < 3) continue;
            if (opt.sample < 1.0 && coin(gen) >= opt.sample) continue;
            Candidate c;
            c.profile = Profile{{I, J}};
            c.interlacing = pc.interlacing_degree;
            c.tight = pc.tight;
            cands.push_back(c);
        }
    rep.candidate_count = static_cast<int>(cands.size());

    parallel_for(rep.candidate_count, opt.jobs, [&](int i) {
        auto& c = cands[i];
        const Rim I = c.profile.layers[0], J = c.profile.layers[1];
        ModuleSource src = [I, J](int N) { return build_extension(I, J, N); };
        auto e = ext1(src, src, n, prec);
        c.rigid = e.exponents.empty();
        c.truncation = e.truncation;
    });

    std::map<Profile, bool> status;
    for (auto& c : cands) status[c.profile] = c.rigid;

    // isomorphism classes among the rigid profiles, bucketed by a-vector
    std::map<RootVector, std::vector<std::pair<CMModuleRep, std::vector<Profile>>>> buckets;
    const int N = rep.truncation;
    for (auto& c : cands) {
        if (!c.rigid) {
            rep.non_rigid.push_back(c);
            continue;
        }
        ++rep.rigid_profile_count;
        auto m = build_profile(c.profile, N);
        auto& b = buckets[a_vector(c.profile)];
        bool placed = false;
        for (auto& [rep_m, profs] : b)
            if (isomorphic(rep_m, m)) {
                profs.push_back(c.profile);
                placed = true;
                break;
            }
        if (!placed) b.push_back({m, {c.profile}});
    }

    for (auto& [a, classes] : buckets)
        for (auto& [m, profs] : classes) {
            CensusEntry e;
            std::sort(profs.begin(), profs.end());
            e.profiles = profs;
            e.profile = *std::min_element(profs.begin(), profs.end(), [](const Profile& x, const Profile& y) {
                auto kx = least_shift(x), ky = least_shift(y);
                return kx != ky ? kx < ky : x < y;
            });
            e.a = a;
            e.cls = classify_root(a);
            e.orbit_id = least_shift(e.profile).str();
            e.intersection = intersection_size(e.profile);
            if (!is_indecomposable(m)) rep.fixture_diffs.push_back("class of " + e.profile.str() + " is decomposable");
            rep.rank2_rigid.push_back(std::move(e));
        }
    std::sort(rep.rank2_rigid.begin(), rep.rank2_rigid.end(),
              [](const CensusEntry& x, const CensusEntry& y) { return x.profile < y.profile; });
    for (auto& e : rep.rank2_rigid) {
        if (e.cls == RootClass::Real) ++rep.real_count;
        if (e.cls == RootClass::Imaginary) ++rep.imaginary_count;
    }

    // closure properties, restricted to profiles present in the (possibly sampled) candidate list
    rep.shift_closed = true;
    for (auto& [p, rigid] : status) {
        if (!rigid) continue;
        auto it = status.find(shift(p, k));
        if (it != status.end() && !it->second) rep.shift_closed = false;
    }
    rep.swap_closed_real = rep.swap_closed_all = true;
    for (auto& e : rep.rank2_rigid) {
        bool known = false, ok = false;
        for (auto& p : e.profiles) {
            auto it = status.find(swap_layers(p));
            if (it == status.end()) continue;
            known = true;
            ok = ok || it->second;
        }
        if (!known || ok) continue;
        rep.swap_failures.push_back(e.profile.str());
        rep.swap_closed_all = false;
        if (e.cls == RootClass::Real) rep.swap_closed_real = false;
    }

    if (opt.sample >= 1.0) {
        std::map<RootVector, int> fiber;
        for (auto& e : rep.rank2_rigid)
            if (e.cls == RootClass::Real) ++fiber[e.a];
        rep.fibers_ok = true;
        for (auto& r : enumerate_degree2_real_roots(k, n)) {
            int c = fiber.count(r) ? fiber[r] : 0;
            if (c != 2) {
                rep.fibers_ok = false;
                rep.fiber_failures.push_back(r.str() + ": " + std::to_string(c));
            }
            fiber.erase(r);
        }
        for (auto& [r, c] : fiber) {
            rep.fibers_ok = false;
            rep.fiber_failures.push_back(r.str() + ": " + std::to_string(c) + " (not a degree-2 real root)");
        }
        for (auto& d : census_fixture_diffs(rep)) rep.fixture_diffs.push_back(d);
    }
    return rep;
}

std::vector<std::string> census_fixture_diffs(const CensusReport& r) {
    std::vector<std::string> out;
    auto j = nlohmann::json::parse(census_fixture_json());
    for (auto& a : j.at("ambients")) {
        if (a.at("k") != r.k || a.at("n") != r.n) continue;
        auto cmp = [&](const char* key, long long got) {
            if (!a.contains(key)) return;
            long long want = a.at(key);
            if (want != got)
                out.push_back(std::string(key) + ": expected " + std::to_string(want) + ", computed " + std::to_string(got));
        };
        cmp("rank1", r.rank1_count);
        cmp("rank2_rigid", static_cast<long long>(r.rank2_rigid.size()));
        cmp("real", r.real_count);
        cmp("imaginary", r.imaginary_count);
        if (a.contains("imaginary_shift_orbit")) {
            auto id = least_shift(parse_profile(a.at("imaginary_shift_orbit").get<std::string>(), r.n)).str();
            for (auto& e : r.rank2_rigid)
                if (e.cls == RootClass::Imaginary && e.orbit_id != id)
                    out.push_back("imaginary class " + e.profile.str() + " outside the shift orbit of " + id);
        }
    }
    return out;
}

std::vector<ConjectureVerdict> verify_conjectures(const CensusReport& r) {
    std::vector<ConjectureVerdict> out;
    ConjectureVerdict tight{"interlacing-ok", true, 0, ""};
    ConjectureVerdict four{"exclude-4", true, 0, ""};
    for (auto& c : r.non_rigid) {
        if (c.tight) {
            ++tight.instances;
            tight.holds = false;
            tight.detail += (tight.detail.empty() ? "" : " ") + c.profile.str();
        }
        if (c.interlacing >= 4) ++four.instances;
    }
    for (auto& e : r.rank2_rigid)
        for (auto& p : e.profiles) {
            auto pc = classify_pair(p.layers[0], p.layers[1]);
            if (pc.tight) ++tight.instances;
            if (pc.interlacing_degree >= 4) {
                ++four.instances;
                four.holds = false;
                four.detail += (four.detail.empty() ? "" : " ") + p.str();
            }
        }
    if (tight.detail.empty()) tight.detail = "all tight pairs rigid";
    if (four.detail.empty()) four.detail = "no candidate with r >= 4 is rigid";
    out.push_back(tight);
    out.push_back(four);

    ConjectureVerdict count{"counting", false, r.real_count, ""};
    long long want = expected_rigid_rank2_count(r.k, r.n);
    count.holds = r.real_count == want;
    count.detail = "real classes " + std::to_string(r.real_count) + ", 2*C(n,6)*C(n-6,k-3) = " + std::to_string(want);
    if (r.sample < 1.0) count.detail += " (sampled run)";
    out.push_back(count);
    return out;
}

std::vector<ConjectureVerdict> verify_conjectures(int k, int n, const CensusOptions& opt) {
    return verify_conjectures(run_census(k, n, opt));
}

nlohmann::json to_json(const CensusReport& r) {
    using nlohmann::json;
    json entries = json::array();
    for (auto& e : r.rank2_rigid) {
        json profs = json::array();
        for (auto& p : e.profiles) profs.push_back(p.str());
        entries.push_back({{"profile", e.profile.str()},
                           {"profiles", profs},
                           {"a", e.a.a},
                           {"class", to_string(e.cls)},
                           {"orbit", e.orbit_id},
                           {"intersection", e.intersection}});
    }
    json nonrigid = json::array();
    for (auto& c : r.non_rigid)
        nonrigid.push_back({{"profile", c.profile.str()}, {"interlacing", c.interlacing}, {"tight", c.tight},
                            {"truncation", c.truncation}});
    return {{"version", kCensusVersion},
            {"k", r.k},
            {"n", r.n},
            {"truncation", r.truncation},
            {"sample", r.sample},
            {"rank1", r.rank1_count},
            {"candidates", r.candidate_count},
            {"rigid_profiles", r.rigid_profile_count},
            {"rank2_rigid", entries},
            {"non_rigid", nonrigid},
            {"counts", {{"rank2_rigid", r.rank2_rigid.size()}, {"real", r.real_count}, {"imaginary", r.imaginary_count}}},
            {"shift_closed", r.shift_closed},
            {"swap_closed_real", r.swap_closed_real},
            {"swap_closed_all", r.swap_closed_all},
            {"swap_failures", r.swap_failures},
            {"fibers_ok", r.fibers_ok},
            {"fiber_failures", r.fiber_failures},
            {"fixture_diffs", r.fixture_diffs}};
}

CensusReport census_from_json(const nlohmann::json& j) {
    CensusReport r;
    r.k = j.at("k");
    r.n = j.at("n");
    r.truncation = j.at("truncation");
    r.sample = j.at("sample");
    r.rank1_count = j.at("rank1");
    r.candidate_count = j.at("candidates");
    r.rigid_profile_count = j.at("rigid_profiles");
    for (auto& e : j.at("rank2_rigid")) {
        CensusEntry c;
        c.profile = parse_profile(e.at("profile").get<std::string>(), r.n);
        for (auto& p : e.at("profiles")) c.profiles.push_back(parse_profile(p.get<std::string>(), r.n));
        c.a.a = e.at("a").get<std::vector<int>>();
        c.a.k = r.k;
        c.cls = classify_root(c.a);
        c.orbit_id = e.at("orbit");
        c.intersection = e.at("intersection");
        r.rank2_rigid.push_back(std::move(c));
    }
    for (auto& e : j.at("non_rigid")) {
        Candidate c;
        c.profile = parse_profile(e.at("profile").get<std::string>(), r.n);
        c.interlacing = e.at("interlacing");
        c.tight = e.at("tight");
        c.truncation = e.at("truncation");
        r.non_rigid.push_back(std::move(c));
    }
    r.real_count = j.at("counts").at("real");
    r.imaginary_count = j.at("counts").at("imaginary");
    r.shift_closed = j.at("shift_closed");
    r.swap_closed_real = j.at("swap_closed_real");
    r.swap_closed_all = j.at("swap_closed_all");
    r.swap_failures = j.at("swap_failures").get<std::vector<std::string>>();
    r.fibers_ok = j.at("fibers_ok");
    r.fiber_failures = j.at("fiber_failures").get<std::vector<std::string>>();
    r.fixture_diffs = j.at("fixture_diffs").get<std::vector<std::string>>();
    return r;
}

std::string census_cache_path(const std::string& dir, int k, int n) {
    return (std::filesystem::path(dir) / ("census-" + std::to_string(k) + "-" + std::to_string(n) + ".json")).string();
}

std::optional<CensusReport> load_census_cache(const std::string& dir, int k, int n, int truncation) {
    std::ifstream in(census_cache_path(dir, k, n));
    if (!in) return std::nullopt;
    auto j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    if (j.value("version", -1) != kCensusVersion || j.value("k", -1) != k || j.value("n", -1) != n ||
        j.value("truncation", -1) != truncation)
        return std::nullopt;
    return census_from_json(j);
}

void save_census_cache(const std::string& dir, const CensusReport& r) {
    std::filesystem::create_directories(dir);
    std::ofstream out(census_cache_path(dir, r.k, r.n));
    out << to_json(r).dump(2) << "\n";
}

std::vector<std::string> diff_reports(const CensusReport& cached, const CensusReport& fresh) {
    std::vector<std::string> out;
    if (cached.sample != fresh.sample) out.push_back("sample fraction differs; comparison skipped");
    if (!out.empty()) return out;
    std::set<std::string> a, b;
    for (auto& e : cached.rank2_rigid) a.insert(e.profile.str());
    for (auto& e : fresh.rank2_rigid) b.insert(e.profile.str());
    for (auto& p : a)
        if (!b.count(p)) out.push_back("no longer rigid: " + p);
    for (auto& p : b)
        if (!a.count(p)) out.push_back("newly rigid: " + p);
    if (cached.real_count != fresh.real_count || cached.imaginary_count != fresh.imaginary_count)
        out.push_back("real/imaginary split changed");
    return out;
}

}  // namespace grasscat
