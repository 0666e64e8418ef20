#include "grasscat/serialize.hpp"

namespace grasscat {

json to_json(const Rim& r) { return r.elements(); }

Rim rim_from_json(const json& j, int n) { return Rim(n, j.get<std::vector<int>>()); }

json to_json(const RootVector& a) { return a.a; }

RootVector root_from_json(const json& j, int k) {
    RootVector a;
    a.a = j.get<std::vector<int>>();
    a.k = k;
    return a;
}

json to_json(const ExtDecomp& e) {
    return {{"exponents", e.exponents}, {"dimension", e.total_dim}, {"truncation", e.truncation}};
}

ExtDecomp ext_from_json(const json& j) {
    ExtDecomp e;
    e.exponents = j.at("exponents").get<std::vector<int>>();
    e.total_dim = j.at("dimension");
    e.truncation = j.at("truncation");
    return e;
}

json to_json(const TauOrbit& o) {
    json members = json::array();
    for (auto& m : o.members) {
        json p = json::array();
        for (auto& q : m.profiles) p.push_back(q.str());
        members.push_back({{"rank", m.rank}, {"profiles", p}});
    }
    return {{"representative", o.representative.str()}, {"period", o.period}, {"members", members}};
}

json to_json(const ARSequence& s) {
    json j = {{"left", s.left.str()}, {"right", s.right.str()}, {"split", s.split}};
    if (s.split) j["middle"] = {{"projective", s.projective}, {"U", s.U.str()}};
    else j["middle"] = s.middle.str();
    j["checks"] = {{"exact", s.exact},
                   {"matches_formula", s.middle_matches_formula},
                   {"rigid", s.middle_rigid},
                   {"indecomposable", s.middle_indecomposable}};
    if (!s.split) j["checks"]["swap_rigid"] = s.swap_rigid;
    return j;
}

json to_json(const TubeCensus& t) {
    json orbits = json::array();
    for (auto& o : t.orbits) orbits.push_back(to_json(o));
    json checks = json::array();
    for (auto& c : t.fixture_checks)
        checks.push_back({{"figure", c.figure}, {"row", c.row}, {"ok", c.ok}, {"detail", c.detail}});
    return {{"version", 1},
            {"k", t.k},
            {"n", t.n},
            {"tame", t.tame},
            {"v", t.v},
            {"period_histogram", t.period_histogram},
            {"periods_divide_2v", t.periods_divide_2v},
            {"attains_2v", t.attains_2v},
            {"orbits", orbits},
            {"fixture_checks", checks},
            {"notes", t.notes}};
}

json to_json(const DVRMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) {
            json c = json::array();
            const auto& p = m(i, j);
            int last = -1;
            for (int d = 0; d < p.trunc(); ++d)
                if (!p[d].is_zero()) last = d;
            for (int d = 0; d <= last; ++d) c.push_back(p[d].lift());
            row.push_back(c);
        }
        rows.push_back(row);
    }
    return rows;
}

namespace {

DVRMatrix matrix_from_json(const json& j, int s, int N) {
    DVRMatrix m(s, s, N);
    for (int i = 0; i < s; ++i)
        for (int c = 0; c < s; ++c) {
            const auto& coeffs = j.at(i).at(c);
            for (int d = 0; d < static_cast<int>(coeffs.size()) && d < N; ++d) m(i, c)[d] = Fp(coeffs[d].get<std::int64_t>());
        }
    return m;
}

}  // namespace

json to_json(const CMModuleRep& m) {
    json x = json::array(), y = json::array();
    for (int i = 1; i <= m.n; ++i) {
        x.push_back(to_json(m.x[i]));
        y.push_back(to_json(m.y[i]));
    }
    return {{"k", m.k}, {"n", m.n}, {"rank", m.s}, {"truncation", m.N}, {"exact", m.exact}, {"x", x}, {"y", y}};
}

CMModuleRep module_from_json(const json& j) {
    CMModuleRep m;
    m.k = j.at("k");
    m.n = j.at("n");
    m.s = j.at("rank");
    m.N = j.at("truncation");
    m.exact = j.value("exact", true);
    m.x.assign(m.n + 1, DVRMatrix());
    m.y.assign(m.n + 1, DVRMatrix());
    for (int i = 1; i <= m.n; ++i) {
        m.x[i] = matrix_from_json(j.at("x").at(i - 1), m.s, m.N);
        m.y[i] = matrix_from_json(j.at("y").at(i - 1), m.s, m.N);
    }
    return m;
}

}  // namespace grasscat
