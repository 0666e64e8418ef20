#include "grasscat/module.hpp"

#include <map>
#include <sstream>

#include "grasscat/fp_linalg.hpp"

namespace grasscat {

CMModuleRep CMModuleRep::with_trunc(int N2) const {
    if (N2 > N && !exact) throw TruncationUnstable("module only known modulo t^" + std::to_string(N), N);
    CMModuleRep r = *this;
    r.N = N2;
    for (int i = 1; i <= n; ++i) {
        r.x[i] = x[i].with_trunc(N2);
        r.y[i] = y[i].with_trunc(N2);
    }
    return r;
}

std::string Profile::str() const {
    std::string s;
    for (std::size_t i = 0; i < layers.size(); ++i) s += (i ? "|" : "") + layers[i].str();
    return s;
}

Profile parse_profile(const std::string& text, int n_hint) {
    auto [k, n] = parse_ambient(text);
    if (n == 0) n = n_hint;
    std::string body = text.substr(0, text.find('@'));
    Profile p;
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, '|')) p.layers.push_back(parse_rim(tok, n));
    if (p.layers.empty()) throw ParseError("empty profile '" + text + "'");
    for (auto& r : p.layers) {
        if (k && r.k() != k) throw ParseError("profile '" + text + "': layer " + r.str() + " has the wrong size");
        if (r.k() != p.layers[0].k()) throw ParseError("profile '" + text + "': layers of different sizes");
    }
    return p;
}

Profile shift(const Profile& p, int m) {
    Profile q;
    for (auto& r : p.layers) q.layers.push_back(shift(r, m));
    return q;
}

DVRMatrix sigma_power(int s, int j, int N) {
    if (s < 1 || j < 0 || j > s) throw Error("sigma_power: exponent out of range");
    DVRMatrix m(s, s, N);
    for (int i = 1; i <= s - j; ++i) m(i - 1, i + j - 1) = ValPoly::constant(1, N);
    for (int i = 1; i <= j; ++i) m(s + i - j - 1, i - 1) = ValPoly::t_power(1, N);
    return m;
}

namespace {

CMModuleRep empty_module(int n, int k, int s, int N) {
    CMModuleRep m;
    m.n = n;
    m.k = k;
    m.s = s;
    m.N = N;
    m.x.assign(n + 1, DVRMatrix(s, s, N));
    m.y.assign(n + 1, DVRMatrix(s, s, N));
    return m;
}

}  // namespace

CMModuleRep build_rank1(const Rim& rim, int N) {
    auto m = empty_module(rim.n(), rim.k(), 1, N);
    for (int i = 1; i <= rim.n(); ++i) {
        bool in = rim.contains(i);
        m.x[i](0, 0) = ValPoly::t_power(in ? 0 : 1, N);
        m.y[i](0, 0) = ValPoly::t_power(in ? 1 : 0, N);
    }
    return m;
}

CMModuleRep build_layered(const std::vector<Rim>& rims, int N) {
    if (rims.empty()) throw Error("build_layered: no layers");
    const int n = rims[0].n(), k = rims[0].k(), s = static_cast<int>(rims.size());
    for (auto& r : rims)
        if (r.n() != n || r.k() != k) throw MismatchedAmbient("build_layered: layers in different (k,n)");
    auto m = empty_module(n, k, s, N);
    for (int i = 1; i <= n; ++i) {
        int r = 0;
        for (auto& I : rims) r += I.contains(i);
        m.x[i] = sigma_power(s, s - r, N);
        m.y[i] = sigma_power(s, r, N);
    }
    return m;
}

std::vector<RelationFailure> validate_relations(const CMModuleRep& m) {
    std::vector<RelationFailure> out;
    const auto tI = DVRMatrix::scalar(m.s, ValPoly::t_power(1, m.N));
    for (int i = 1; i <= m.n; ++i) {
        if (m.xm(i) * m.ym(i) != tI) out.push_back({i, "x_" + std::to_string(i) + " y_" + std::to_string(i) + " = t"});
        if (m.ym(i) * m.xm(i) != tI) out.push_back({wrap(i - 1, m.n), "y_" + std::to_string(i) + " x_" + std::to_string(i) + " = t"});
    }
    for (int v = 1; v <= m.n; ++v) {
        auto X = DVRMatrix::identity(m.s, m.N);
        for (int a = 1; a <= m.k; ++a) X = m.xm(v + a) * X;
        auto Y = DVRMatrix::identity(m.s, m.N);
        for (int a = 0; a < m.n - m.k; ++a) Y = m.ym(v - a) * Y;
        if (X != Y) out.push_back({v, "x^k = y^(n-k) from vertex " + std::to_string(v)});
    }
    return out;
}

int rank(const CMModuleRep& m) { return m.s; }

RootVector a_vector(const Profile& p) {
    RootVector a;
    a.k = p.k();
    a.a.assign(p.n(), 0);
    for (auto& r : p.layers)
        for (int e : r.elements()) ++a.a[e - 1];
    return a;
}

RootVector module_a_vector(const CMModuleRep& m) {
    RootVector a;
    a.k = m.k;
    a.a.resize(m.n);
    for (int i = 1; i <= m.n; ++i) {
        auto f = smith_over_dvr(m.x[i]);
        if (f.free_rank != 0) throw TruncationUnstable("a-vector: x_" + std::to_string(i) + " looks singular", m.N);
        int v = 0;
        for (int e : f.exponents) v += e;
        a.a[i - 1] = m.s - v;
    }
    return a;
}

CMModuleRep direct_sum(const CMModuleRep& a, const CMModuleRep& b) {
    if (a.n != b.n || a.k != b.k) throw MismatchedAmbient("direct_sum: different (k,n)");
    const int N = std::min(a.N, b.N);
    auto m = empty_module(a.n, a.k, a.s + b.s, N);
    m.exact = a.exact && b.exact;
    for (int i = 1; i <= a.n; ++i) {
        m.x[i].set_block(0, 0, a.x[i].with_trunc(N));
        m.x[i].set_block(a.s, a.s, b.x[i].with_trunc(N));
        m.y[i].set_block(0, 0, a.y[i].with_trunc(N));
        m.y[i].set_block(a.s, a.s, b.y[i].with_trunc(N));
    }
    return m;
}

namespace {

// Laurent polynomial whose coefficients are linear forms in the unknowns.
using LinForm = std::map<int, Fp>;
using LaurentForm = std::map<int, LinForm>;

void add_term(LaurentForm& f, int exponent, int var, Fp c) {
    auto& lf = f[exponent];
    lf[var] += c;
}

ValPoly realise(const LaurentForm& f, const FpVec& values, int offset, int N) {
    ValPoly p(N);
    for (auto& [e, lf] : f) {
        Fp c = 0;
        for (auto& [var, coef] : lf) c += coef * values[var];
        if (c.is_zero()) continue;
        int d = e + offset;
        if (d < 0) throw Error("build_extension: gluing datum has a pole");
        if (d < N) p[d] = c;
    }
    return p;
}

}  // namespace

CMModuleRep build_extension(const Rim& top, const Rim& bottom, int N, std::uint64_t seed) {
    if (top.n() != bottom.n() || top.k() != bottom.k()) throw MismatchedAmbient("build_extension: different (k,n)");
    const int n = top.n(), k = top.k();
    const int W = n + 1;
    std::vector<int> p(n + 1, 0), q(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
        p[v] = p[v - 1] + !bottom.contains(v);
        q[v] = q[v - 1] + !top.contains(v);
    }
    // unknown c_{v,e}, v = 1..n-1, e in [-p_v - W, -p_v - 1]
    auto var = [&](int v, int e) { return (v - 1) * W + (e + p[v] + W); };
    const int nvars = (n - 1) * W;
    auto f_terms = [&](int v, int shift, Fp c, LaurentForm& out) {
        if (v <= 0 || v >= n) return;
        for (int e = -p[v] - W; e <= -p[v] - 1; ++e) add_term(out, e + shift, var(v, e), c);
    };

    std::vector<LaurentForm> xoff(n + 1), yoff(n + 1);
    FpMat eqs;
    auto impose = [&](const LaurentForm& f, int bound) {
        for (auto& [e, lf] : f) {
            if (e >= bound) continue;
            FpVec row(nvars, Fp(0));
            bool any = false;
            for (auto& [v, c] : lf)
                if (!c.is_zero()) row[v] += c, any = true;
            if (any) eqs.push_back(std::move(row));
        }
    };
    for (int i = 1; i <= n; ++i) {
        const int delta = !top.contains(i);
        // x_i off-diagonal: t^{p_i} (f_{i-1} - t^delta f_i)
        f_terms(i - 1, 0, 1, xoff[i]);
        f_terms(i, delta, -1, xoff[i]);
        impose(xoff[i], -p[i]);
        // y_i off-diagonal: t^{p_{i-1}} (t f_i - t^{1-delta} f_{i-1})
        f_terms(i, 1, 1, yoff[i]);
        f_terms(i - 1, 1 - delta, -1, yoff[i]);
        impose(yoff[i], -p[i - 1]);
    }

    FpVec values(nvars, Fp(0));
    if (nvars > 0) {
        auto basis = nullspace(eqs, nvars);
        FieldRng rng(seed * 0x9E3779B97F4A7C15ULL + top.mask() * 131 + bottom.mask());
        for (auto& b : basis) {
            Fp c = rng.next();
            for (int j = 0; j < nvars; ++j) values[j] += c * b[j];
        }
    }

    auto m = empty_module(n, k, 2, N);
    for (int i = 1; i <= n; ++i) {
        const int delta = !top.contains(i), eps = !bottom.contains(i);
        m.x[i](0, 0) = ValPoly::t_power(eps, N);
        m.x[i](1, 1) = ValPoly::t_power(delta, N);
        m.x[i](0, 1) = realise(xoff[i], values, p[i], N);
        m.y[i](0, 0) = ValPoly::t_power(1 - eps, N);
        m.y[i](1, 1) = ValPoly::t_power(1 - delta, N);
        m.y[i](0, 1) = realise(yoff[i], values, p[i - 1], N);
    }
    return m;
}

CMModuleRep build_profile(const Profile& p, int N) {
    if (p.layers.size() == 1) return build_rank1(p.layers[0], N);
    if (p.layers.size() == 2) return build_extension(p.layers[0], p.layers[1], N);
    throw Error("build_profile: only one or two layers are supported, use build_layered");
}

Rim identify_rank1(const CMModuleRep& m) {
    if (m.s != 1) throw NotRankOne("identify_rank1: module has rank " + std::to_string(m.s));
    std::vector<int> e;
    for (int i = 1; i <= m.n; ++i) {
        int v = m.x[i](0, 0).val(), w = m.y[i](0, 0).val();
        if (v + w != 1) throw NotRankOne("identify_rank1: x_i y_i is not t at vertex " + std::to_string(i));
        if (v == 0) e.push_back(i);
    }
    Rim r(m.n, e);
    if (r.k() != m.k) throw NotRankOne("identify_rank1: found " + std::to_string(r.k()) + " unit arrows, expected k");
    return r;
}

RootClass classify_module_root(const Profile& p) { return classify_root(a_vector(p)); }

}  // namespace grasscat
