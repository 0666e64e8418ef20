#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "grasscat/census.hpp"
#include "grasscat/diagram.hpp"
#include "grasscat/serialize.hpp"

using namespace grasscat;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitFixture = 3;
constexpr int kExitTruncation = 4;

struct UsageError : Error {
    using Error::Error;
};

struct Config {
    int truncation = 0;
    int cap = 0;
    std::string out_dir = "out";
    std::string format = "table";
    bool stability = false;

    Precision precision() const { return {truncation, cap, stability}; }
    int trunc_for(int n) const { return truncation ? truncation : 2 * n; }
    void check(int n) const {
        if (truncation && truncation < n) throw UsageError("--trunc must be at least n = " + std::to_string(n));
        if (cap && cap < trunc_for(n)) throw UsageError("escalation cap below the truncation level");
    }
    bool json() const { return format == "json"; }
};

Profile read_profile(const std::string& text) {
    try {
        auto p = parse_profile(text);
        if (p.n() == 0) throw ParseError("missing ambient");
        return p;
    } catch (const Error& e) {
        throw UsageError(std::string("cannot parse '") + text + "': " + e.what());
    }
}

Rim read_rim(const std::string& text) {
    auto p = read_profile(text);
    if (p.layers.size() != 1) throw UsageError("'" + text + "' is not a single rim");
    return p.layers[0];
}

CMModuleRep build_any(const Profile& p, int N) {
    if (p.layers.size() <= 2) return build_profile(p, N);
    return build_layered(p.layers, N);
}

std::string ext_text(const ExtDecomp& e) {
    if (e.exponents.empty()) return "Ext^1 = 0";
    std::string s = "Ext^1 ≅ ";
    for (std::size_t i = 0; i < e.exponents.size(); ++i) {
        if (i) s += " ⊕ ";
        s += e.exponents[i] == 1 ? "C" : "C[t]/t^" + std::to_string(e.exponents[i]);
    }
    return s;
}

std::string list_text(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

std::string identified(const CMModuleRep& m) {
    auto ps = identify_profile(m);
    if (ps.empty()) return "rank " + std::to_string(m.s);
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? " ≅ " : "") + ps[i].str();
    return s;
}

void write_file(const std::string& path, const std::string& body) {
    if (auto dir = std::filesystem::path(path).parent_path(); !dir.empty()) std::filesystem::create_directories(dir);
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << body;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Computations with Cohen-Macaulay modules over B_{k,n}"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    if (const char* env = std::getenv("GRASSCAT_TRUNCATION")) cfg.truncation = std::atoi(env);
    if (const char* env = std::getenv("GRASSCAT_OUT")) cfg.out_dir = env;
    bool json_flag = false;
    app.add_option("--trunc", cfg.truncation, "truncation level N for C[[t]] (default 2n)");
    app.add_option("--cap", cfg.cap, "escalation cap (default 8n)");
    app.add_option("--out", cfg.out_dir, "output directory");
    app.add_option("--format", cfg.format, "json, table, svg, tikz or dot")
        ->check(CLI::IsMember({"json", "table", "svg", "tikz", "dot"}));
    app.add_flag("--json", json_flag, "same as --format json");
    app.add_flag("--stable", cfg.stability, "confirm every Ext answer at N + 2");

    std::string a1, a2;
    int k = 0, n = 0;

    auto* rim_cmd = app.add_subcommand("rim", "combinatorics of a k-subset");
    rim_cmd->add_option("rim", a1, "e.g. 145@(3,8)")->required();

    auto* module_cmd = app.add_subcommand("module", "build a module and validate its relations");
    module_cmd->add_option("profile", a1, "e.g. 246|135@(3,8)")->required();

    auto* hom_cmd = app.add_subcommand("hom", "Hom(M, N) as a lattice");
    hom_cmd->add_option("M", a1)->required();
    hom_cmd->add_option("N", a2)->required();

    auto* ext_cmd = app.add_subcommand("ext", "Ext^1(M, N) as a C[t]-module");
    ext_cmd->add_option("M", a1)->required();
    ext_cmd->add_option("N", a2)->required();

    auto* syz_cmd = app.add_subcommand("syzygy", "syzygy of a module");
    syz_cmd->add_option("profile", a1)->required();

    auto* rigid_cmd = app.add_subcommand("rigid", "test Ext^1(M, M) = 0");
    rigid_cmd->add_option("profile", a1)->required();

    auto* ar_cmd = app.add_subcommand("ar-seq", "AR sequence ending at an almost consecutive rim's syzygy");
    ar_cmd->add_option("rim", a1)->required();

    auto* orbit_cmd = app.add_subcommand("orbit", "syzygy orbit of a rim or rank-2 profile");
    orbit_cmd->add_option("profile", a1)->required();

    auto* tubes_cmd = app.add_subcommand("tubes", "orbit census and figure fixtures");
    tubes_cmd->add_option("k", k)->required();
    tubes_cmd->add_option("n", n)->required();
    bool tubes_rank2 = false;
    tubes_cmd->add_flag("--rank2", tubes_rank2, "also seed orbits with the rigid rank-2 census");

    auto* roots_cmd = app.add_subcommand("roots", "degree-2 real roots, or classify one vector");
    roots_cmd->add_option("k", k)->required();
    roots_cmd->add_option("n", n)->required();
    std::vector<int> vec;
    roots_cmd->add_option("--vector", vec, "classify this vector")->delimiter(',');
    int degree = 2;
    roots_cmd->add_option("--degree", degree, "degree of the enumerated real roots")->check(CLI::PositiveNumber);

    auto* census_cmd = app.add_subcommand("census", "rigid indecomposable rank-2 census");
    census_cmd->add_option("k", k)->required();
    census_cmd->add_option("n", n)->required();
    bool full = false;
    double sample = 1.0;
    int jobs = 1;
    census_cmd->add_flag("--full", full, "full run: class list, conjectures, exit 3 on fixture mismatch");
    census_cmd->add_option("--sample", sample, "keep each candidate with probability p")->check(CLI::Range(0.0, 1.0));
    census_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    std::uint64_t seed = 1;
    census_cmd->add_option("--seed", seed, "sampling seed");

    auto* diagram_cmd = app.add_subcommand("diagram", "lattice diagram of a profile");
    diagram_cmd->add_option("profile", a1)->required();
    std::string diagram_file;
    diagram_cmd->add_option("--file", diagram_file, "write to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    if (json_flag) cfg.format = "json";

    try {
        if (*rim_cmd) {
            auto r = read_rim(a1);
            auto sl = slopes(r);
            auto proj = is_projective(r);
            auto ac = is_almost_consecutive(r);
            json j = {{"rim", r.str()}, {"k", r.k()}, {"n", r.n()}, {"peaks", peaks(r)}, {"min_slope", sl.min_slope}};
            json down = json::array(), up = json::array();
            for (auto& iv : sl.down) down.push_back({iv.start, iv.length});
            for (auto& iv : sl.up) up.push_back({iv.start, iv.length});
            j["down"] = down;
            j["up"] = up;
            j["projective"] = proj ? json(*proj) : json(nullptr);
            j["almost_consecutive"] = ac ? json({ac->first, ac->second}) : json(nullptr);
            if (ac && !proj) j["syzygy"] = syzygy_rim(r).str();
            if (cfg.json()) {
                emit(j);
            } else {
                std::cout << "rim " << r.str() << " @(" << r.k() << "," << r.n() << ")\n";
                std::cout << "peaks: " << list_text(peaks(r)) << ", min slope " << sl.min_slope << "\n";
                if (proj) std::cout << "projective P_" << *proj << "\n";
                if (ac) std::cout << "almost consecutive (i, j) = (" << ac->first << ", " << ac->second << ")\n";
                if (j.contains("syzygy")) std::cout << "syzygy " << j["syzygy"].get<std::string>() << "\n";
            }
        } else if (*module_cmd) {
            auto p = read_profile(a1);
            cfg.check(p.n());
            auto m = build_any(p, cfg.trunc_for(p.n()));
            auto fails = validate_relations(m);
            auto a = module_a_vector(m);
            if (cfg.json()) {
                json f = json::array();
                for (auto& x : fails) f.push_back({{"vertex", x.vertex}, {"relation", x.relation}});
                emit({{"profile", p.str()}, {"module", to_json(m)}, {"relation_failures", f}, {"a", a.a},
                      {"root", to_string(classify_root(a))}});
            } else {
                std::cout << "profile " << p.str() << ", rank " << m.s << "\n";
                std::cout << "a = [" << a.str() << "], " << to_string(classify_root(a)) << "\n";
                if (fails.empty()) std::cout << "relations: ok\n";
                for (auto& x : fails) std::cout << "relation fails at vertex " << x.vertex << ": " << x.relation << "\n";
            }
            return fails.empty() ? 0 : 1;
        } else if (*hom_cmd) {
            auto p = read_profile(a1), q = read_profile(a2);
            if (p.n() != q.n() || p.k() != q.k()) throw MismatchedAmbient("hom: different (k,n)");
            cfg.check(p.n());
            const int N = cfg.trunc_for(p.n());
            auto F = hom_lattice(build_any(p, N), build_any(q, N));
            auto h = hom_space(build_any(p, N), build_any(q, N));
            if (cfg.json()) emit({{"generators", F.cols()}, {"z_rank", h.z_rank}, {"truncation", N}});
            else std::cout << "Hom is free of rank " << h.z_rank << " over C[[t]]\n";
        } else if (*ext_cmd) {
            auto p = read_profile(a1), q = read_profile(a2);
            if (p.n() != q.n() || p.k() != q.k()) throw MismatchedAmbient("ext: different (k,n)");
            cfg.check(p.n());
            ModuleSource sm = [p](int N) { return build_any(p, N); }, sn = [q](int N) { return build_any(q, N); };
            auto e = ext1(sm, sn, p.n(), cfg.precision());
            if (cfg.json()) emit(to_json(e));
            else std::cout << ext_text(e) << "\nexponents " << list_text(e.exponents) << "\n";
        } else if (*syz_cmd) {
            auto p = read_profile(a1);
            cfg.check(p.n());
            auto om = syzygy(build_any(p, cfg.trunc_for(p.n())));
            auto ids = identify_profile(om);
            if (cfg.json()) {
                json ps = json::array();
                for (auto& x : ids) ps.push_back(x.str());
                emit({{"rank", om.s}, {"profiles", ps}, {"a", module_a_vector(om).a}});
            } else {
                std::cout << "syzygy of " << p.str() << ": " << identified(om) << "\n";
            }
        } else if (*rigid_cmd) {
            auto p = read_profile(a1);
            cfg.check(p.n());
            ModuleSource sm = [p](int N) { return build_any(p, N); };
            auto e = ext1(sm, sm, p.n(), cfg.precision());
            if (cfg.json()) emit({{"profile", p.str()}, {"rigid", e.exponents.empty()}, {"ext", to_json(e)}});
            else std::cout << p.str() << (e.exponents.empty() ? " is rigid\n" : " is not rigid: " + ext_text(e) + "\n");
        } else if (*ar_cmd) {
            auto r = read_rim(a1);
            cfg.check(r.n());
            auto s = ar_sequence(r, cfg.trunc_for(r.n()));
            if (cfg.json()) {
                emit(to_json(s));
            } else {
                std::cout << "0 -> L_" << s.left.str() << " -> ";
                if (s.split) std::cout << "P_" << s.projective << " ⊕ L_" << s.U.str();
                else std::cout << s.middle.str();
                std::cout << " -> L_" << s.right.str() << " -> 0\n";
                std::cout << "exact " << s.exact << ", matches formula " << s.middle_matches_formula << ", rigid "
                          << s.middle_rigid << ", indecomposable " << s.middle_indecomposable << "\n";
            }
        } else if (*orbit_cmd) {
            auto p = read_profile(a1);
            cfg.check(p.n());
            auto o = tau_orbit(p, cfg.trunc_for(p.n()));
            if (cfg.format == "dot") std::cout << orbit_dot(o);
            else if (cfg.format == "tikz") std::cout << orbit_tikz(o);
            else if (cfg.json()) emit(to_json(o));
            else {
                std::cout << "period " << o.period << ":";
                for (auto& m : o.members) std::cout << " " << m.label();
                std::cout << "\n";
            }
        } else if (*tubes_cmd) {
            cfg.check(n);
            std::vector<Profile> seeds;
            if (tubes_rank2) {
                CensusOptions opt;
                opt.truncation = cfg.truncation;
                for (auto& e : run_census(k, n, opt).rank2_rigid) seeds.push_back(e.profile);
            }
            auto t = tube_census(k, n, seeds, cfg.trunc_for(n));
            auto j = to_json(t);
            write_file((std::filesystem::path(cfg.out_dir) / ("tubes-" + std::to_string(k) + "-" + std::to_string(n) + ".json")).string(),
                       j.dump(2) + "\n");
            bool ok = true;
            for (auto& c : t.fixture_checks) ok = ok && c.ok;
            if (cfg.json()) {
                emit(j);
            } else {
                if (!t.tame) std::cout << "non-tame: orbits only\n";
                std::cout << "orbits: " << t.orbits.size() << ", v = " << t.v << "\n";
                for (int p = 1; p < static_cast<int>(t.period_histogram.size()); ++p)
                    if (t.period_histogram[p]) std::cout << "  period " << p << ": " << t.period_histogram[p] << "\n";
                std::cout << "periods divide 2v: " << (t.periods_divide_2v ? "yes" : "no") << "\n";
                for (auto& c : t.fixture_checks)
                    std::cout << (c.ok ? "  ok   " : "  FAIL ") << c.figure << ": " << c.row << " (" << c.detail << ")\n";
                for (auto& s : t.notes) std::cout << s << "\n";
            }
            if (!ok || !t.periods_divide_2v) return kExitFixture;
        } else if (*roots_cmd) {
            if (!vec.empty()) {
                RootVector a{vec, k};
                if (static_cast<int>(vec.size()) != n) throw UsageError("--vector needs n entries");
                auto cls = classify_root(a);
                auto c = root_coordinates(a);
                if (cfg.json()) {
                    json j = {{"a", a.a}, {"q", q_form(a)}, {"class", to_string(cls)}};
                    if (c) j["coordinates"] = {{"alpha", c->c}, {"beta", c->d}};
                    emit(j);
                } else {
                    std::cout << "q = " << q_form(a) << ", " << to_string(cls) << "\n";
                }
            } else {
                auto rs = enumerate_real_roots(k, n, degree);
                if (cfg.json()) {
                    json l = json::array();
                    for (auto& r : rs) l.push_back(r.a);
                    emit({{"k", k}, {"n", n}, {"degree", degree}, {"count", rs.size()}, {"roots", l}});
                } else {
                    std::cout << "degree-" << degree << " real roots: " << rs.size() << "\n";
                    for (auto& r : rs) std::cout << "  [" << r.str() << "]\n";
                }
            }
        } else if (*census_cmd) {
            cfg.check(n);
            CensusOptions opt;
            opt.truncation = cfg.truncation;
            opt.cap = cfg.cap;
            opt.check_stability = cfg.stability;
            opt.sample = sample;
            opt.seed = seed;
            opt.jobs = jobs;
            auto cached = sample >= 1.0 ? load_census_cache(cfg.out_dir, k, n, cfg.trunc_for(n)) : std::nullopt;
            auto r = run_census(k, n, opt);
            std::vector<std::string> cache_diffs;
            if (cached) cache_diffs = diff_reports(*cached, r);
            if (sample >= 1.0) save_census_cache(cfg.out_dir, r);
            if (cfg.json()) {
                auto j = to_json(r);
                if (full) {
                    json v = json::array();
                    for (auto& c : verify_conjectures(r))
                        v.push_back({{"name", c.name}, {"holds", c.holds}, {"instances", c.instances}, {"detail", c.detail}});
                    j["conjectures"] = v;
                }
                j["cache_diffs"] = cache_diffs;
                emit(j);
            } else {
                std::cout << "rank1: " << r.rank1_count << ", rank2 rigid: " << r.rank2_rigid.size() << "\n";
                std::cout << "real: " << r.real_count << ", imaginary: " << r.imaginary_count << "\n";
                std::cout << "candidates: " << r.candidate_count << ", rigid profiles: " << r.rigid_profile_count << "\n";
                if (sample < 1.0) std::cout << "sampled run, p = " << sample << "\n";
                if (full) {
                    for (auto& e : r.rank2_rigid) {
                        std::cout << "  " << e.profile.str() << "  a=[" << e.a.str() << "]  " << to_string(e.cls) << "  orbit "
                                  << e.orbit_id;
                        if (e.profiles.size() > 1) {
                            std::cout << "  also";
                            for (auto& p : e.profiles)
                                if (!(p == e.profile)) std::cout << " " << p.str();
                        }
                        std::cout << "\n";
                    }
                    std::cout << "shift closed: " << r.shift_closed << ", swap closed (real): " << r.swap_closed_real
                              << ", swap closed (all): " << r.swap_closed_all << ", fibers: " << r.fibers_ok << "\n";
                    for (auto& c : verify_conjectures(r))
                        std::cout << "conjecture " << c.name << ": " << (c.holds ? "holds" : "fails") << " on "
                                  << c.instances << " instances (" << c.detail << ")\n";
                }
                for (auto& d : r.fixture_diffs) std::cout << "fixture: " << d << "\n";
                for (auto& d : cache_diffs) std::cout << "cache: " << d << "\n";
            }
            if (full && !r.fixture_diffs.empty()) return kExitFixture;
        } else if (*diagram_cmd) {
            auto p = read_profile(a1);
            auto d = lattice_diagram_data(p);
            std::string body;
            if (cfg.format == "svg") body = to_svg(d);
            else if (cfg.format == "tikz") body = to_tikz(d);
            else {
                json layers = json::array();
                for (auto& L : d.layers) {
                    json pts = json::array();
                    for (auto [c, y] : L.points) pts.push_back({c, y});
                    layers.push_back({{"rim", L.rim.str()}, {"heights", L.heights}, {"points", pts}});
                }
                body = json({{"n", d.n}, {"k", d.k}, {"columns", d.column_labels}, {"layers", layers}}).dump(2) + "\n";
            }
            if (diagram_file.empty()) std::cout << body;
            else write_file(diagram_file, body);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const TruncationUnstable& e) {
        std::cerr << "truncation instability at N = " << e.level << ": " << e.what() << "\n";
        return kExitTruncation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
