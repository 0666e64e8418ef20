#include "grasscat/homological.hpp"

#include <algorithm>

#include "grasscat/fp_linalg.hpp"

namespace grasscat {

ModuleSource source_of(const CMModuleRep& m) {
    return [m](int N) { return N == m.N ? m : m.with_trunc(N); };
}

namespace {

DVRMatrix unvec(const DVRMatrix& F, int col, int rows, int cols) {
    DVRMatrix f(rows, cols, F.trunc());
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) f(i, j) = F(j * rows + i, col);
    return f;
}

void put_vec(DVRMatrix& F, int col, const DVRMatrix& f) {
    for (int j = 0; j < f.cols(); ++j)
        for (int i = 0; i < f.rows(); ++i) F(j * f.rows() + i, col) = f(i, j);
}

int common_trunc(const CMModuleRep& a, const CMModuleRep& b) {
    if (a.n != b.n || a.k != b.k) throw MismatchedAmbient("modules live in different (k,n)");
    return std::min(a.N, b.N);
}

// Composite of arrows taking a vector at vertex `from` to vertex `to`:
// forward along x when at most k steps, otherwise backward along y.
DVRMatrix path_matrix(const CMModuleRep& m, int from, int to) {
    const int j = wrap(to - from, m.n) % m.n;
    auto P = DVRMatrix::identity(m.s, m.N);
    if (j <= m.k) {
        for (int a = 1; a <= j; ++a) P = m.xm(from + a) * P;
    } else {
        for (int a = 0; a < m.n - j; ++a) P = m.ym(from - a) * P;
    }
    return P;
}

std::vector<std::vector<Fp>> constant_terms(const DVRMatrix& m) { return m.at_zero(); }

}  // namespace

DVRMatrix hom_lattice(const CMModuleRep& M, const CMModuleRep& Nm) {
    const int T = common_trunc(M, Nm);
    if (T < M.n) throw TruncationUnstable("hom: truncation below n", T);
    const int s = M.s, s2 = Nm.s, dim = s * s2;
    auto F = DVRMatrix::identity(dim, T);
    auto X = DVRMatrix::identity(s2, T);
    auto Y = DVRMatrix::identity(s, T);
    for (int i = 1; i <= M.n - 1; ++i) {
        X = Nm.xm(i).with_trunc(T) * X;
        Y = Y * M.ym(i).with_trunc(T);
        DVRMatrix G(dim, dim, i);
        for (int c = 0; c < dim; ++c) put_vec(G, c, (X * unvec(F, c, s2, s) * Y).with_trunc(i));
        SmithTrack<Fp> tr;
        tr.right = &F;
        auto diag = smith_reduce(G, tr);
        for (std::size_t j = 0; j < diag.size(); ++j)
            if (diag[j] < i) F.scale_col(static_cast<int>(j), ValPoly::t_power(i - diag[j], T));
    }
    return F;
}

std::vector<DVRMatrix> extend_map(const CMModuleRep& M, const CMModuleRep& Nm, const DVRMatrix& f0) {
    const int T = common_trunc(M, Nm);
    std::vector<DVRMatrix> f(M.n + 1);
    auto X = DVRMatrix::identity(Nm.s, T);
    auto Y = DVRMatrix::identity(M.s, T);
    for (int i = 1; i <= M.n - 1; ++i) {
        X = Nm.xm(i).with_trunc(T) * X;
        Y = Y * M.ym(i).with_trunc(T);
        f[i] = (X * f0 * Y).shifted(-i);
    }
    f[M.n] = f0;
    return f;
}

bool is_module_map(const CMModuleRep& M, const CMModuleRep& Nm, const std::vector<DVRMatrix>& f, int precision) {
    for (int i = 1; i <= M.n; ++i) {
        const auto& fi = f[i];
        const auto& fp = f[wrap(i - 1, M.n)];
        auto a = (fi * M.xm(i).with_trunc(fi.trunc()) - Nm.xm(i).with_trunc(fi.trunc()) * fp).with_trunc(precision);
        auto b = (fp * M.ym(i).with_trunc(fi.trunc()) - Nm.ym(i).with_trunc(fi.trunc()) * fi).with_trunc(precision);
        if (!a.is_zero() || !b.is_zero()) return false;
    }
    return true;
}

HomBasis hom_space(const CMModuleRep& M, const CMModuleRep& Nm) {
    auto F = hom_lattice(M, Nm);
    HomBasis h;
    h.z_rank = F.cols();
    for (int c = 0; c < F.cols(); ++c) h.generators.push_back(extend_map(M, Nm, unvec(F, c, Nm.s, M.s)));
    return h;
}

std::vector<TopElement> top_elements(const CMModuleRep& m) {
    std::vector<TopElement> out;
    for (int i = 1; i <= m.n; ++i) {
        auto xi = constant_terms(m.xm(i));
        auto yi = constant_terms(m.ym(i + 1));
        // columns spanning the radical at vertex i, stored as rows
        FpMat span;
        for (int c = 0; c < m.s; ++c) {
            FpVec a(m.s), b(m.s);
            for (int r = 0; r < m.s; ++r) a[r] = xi[r][c], b[r] = yi[r][c];
            span.push_back(a);
            span.push_back(b);
        }
        int r0 = fp_rank(span, m.s);
        for (int j = 0; j < m.s && r0 < m.s; ++j) {
            FpVec e(m.s, Fp(0));
            e[j] = 1;
            span.push_back(e);
            int r1 = fp_rank(span, m.s);
            if (r1 > r0) {
                out.push_back({i, j});
                r0 = r1;
            } else {
                span.pop_back();
            }
        }
    }
    return out;
}

std::vector<int> top(const CMModuleRep& m) {
    std::vector<int> v;
    for (auto& t : top_elements(m)) v.push_back(t.vertex);
    return v;
}

ProjectiveCover projective_cover(const CMModuleRep& m) {
    ProjectiveCover pc;
    pc.summands = top_elements(m);
    const int p = static_cast<int>(pc.summands.size());
    pc.P.n = m.n;
    pc.P.k = m.k;
    pc.P.s = p;
    pc.P.N = m.N;
    pc.P.x.assign(m.n + 1, DVRMatrix(p, p, m.N));
    pc.P.y.assign(m.n + 1, DVRMatrix(p, p, m.N));
    for (int i = 1; i <= m.n; ++i)
        for (int a = 0; a < p; ++a) {
            const int v = pc.summands[a].vertex;
            const bool in = wrap(i - v, m.n) <= m.k;  // i in {v+1, ..., v+k}
            pc.P.x[i](a, a) = ValPoly::t_power(in ? 0 : 1, m.N);
            pc.P.y[i](a, a) = ValPoly::t_power(in ? 1 : 0, m.N);
        }
    pc.pi.assign(m.n + 1, DVRMatrix());
    for (int i = 1; i <= m.n; ++i) {
        DVRMatrix pi(m.s, p, m.N);
        for (int a = 0; a < p; ++a) {
            auto P = path_matrix(m, pc.summands[a].vertex, i);
            for (int r = 0; r < m.s; ++r) pi(r, a) = P(r, pc.summands[a].index);
        }
        pc.pi[i] = pi;
    }
    return pc;
}

SyzygyData syzygy_data(const CMModuleRep& m) {
    SyzygyData sd;
    sd.cover = projective_cover(m);
    const int p = sd.cover.P.s, r = p - m.s;
    if (r == 0) throw ProjectiveInput("syzygy of a projective module");
    std::vector<DVRMatrix> L(m.n + 1);
    sd.K.assign(m.n + 1, DVRMatrix());
    for (int i = 1; i <= m.n; ++i) {
        auto a = sd.cover.pi[i];
        auto Q = DVRMatrix::identity(p, m.N);
        auto Qi = DVRMatrix::identity(p, m.N);
        SmithTrack<Fp> tr;
        tr.right = &Q;
        tr.right_inv = &Qi;
        auto diag = smith_reduce(a, tr);
        if (static_cast<int>(diag.size()) != m.s || std::any_of(diag.begin(), diag.end(), [](int d) { return d != 0; }))
            throw TruncationUnstable("projective cover is not surjective at vertex " + std::to_string(i), m.N);
        sd.K[i] = Q.block(0, m.s, p, r);
        L[i] = Qi.block(m.s, 0, r, p);
    }
    auto& om = sd.omega;
    om.n = m.n;
    om.k = m.k;
    om.s = r;
    om.N = m.N;
    om.exact = false;
    om.x.assign(m.n + 1, DVRMatrix());
    om.y.assign(m.n + 1, DVRMatrix());
    for (int i = 1; i <= m.n; ++i) {
        const int im = wrap(i - 1, m.n);
        om.x[i] = L[i] * sd.cover.P.x[i] * sd.K[im];
        om.y[i] = L[im] * sd.cover.P.y[i] * sd.K[i];
    }
    return sd;
}

CMModuleRep syzygy(const CMModuleRep& m) { return syzygy_data(m).omega; }

ModuleSource syzygy_source(ModuleSource m) {
    return [m](int N) { return syzygy(m(N)); };
}

ExtDecomp ext1_at(const CMModuleRep& M, const CMModuleRep& Nm) {
    const int T = common_trunc(M, Nm);
    ExtDecomp e;
    e.truncation = T;
    if (static_cast<int>(top_elements(M).size()) == M.s) return e;  // projective
    auto sd = syzygy_data(M.with_trunc(T));
    const auto& om = sd.omega;
    auto H = hom_lattice(om, Nm.with_trunc(T));
    const int p = sd.cover.P.s, s2 = Nm.s, r = om.s;

    // images of the generators of Hom(P, N) restricted to Omega, at vertex n
    DVRMatrix W(r * s2, p * s2, T);
    int col = 0;
    for (int a = 0; a < p; ++a) {
        auto path = path_matrix(Nm.with_trunc(T), sd.cover.summands[a].vertex, M.n);
        for (int w = 0; w < s2; ++w, ++col) {
            DVRMatrix g(s2, p, T);
            for (int row = 0; row < s2; ++row) g(row, a) = path(row, w);
            put_vec(W, col, g * sd.K[M.n]);
        }
    }
    auto sol = solve_linear_system(H, W);
    if (!sol) throw Error("ext1: restricted maps do not lie in Hom(Omega M, N)");
    const int prec = T - sol->precision_loss;
    if (prec <= 0) throw TruncationUnstable("ext1: coordinates lost all precision", T);
    auto inv = smith_over_dvr(sol->x.with_trunc(prec));
    if (inv.free_rank != 0) throw TruncationUnstable("ext1: cokernel not torsion modulo t^" + std::to_string(prec), T);
    for (int x : inv.exponents)
        if (x > 0) e.exponents.push_back(x), e.total_dim += x;
    return e;
}

ExtDecomp ext1(const ModuleSource& m, const ModuleSource& n, int ambient_n, const Precision& prec) {
    const int cap = prec.cap_for(ambient_n);
    for (int N = prec.start_for(ambient_n); N <= cap; N += ambient_n) {
        try {
            auto e = ext1_at(m(N), n(N));
            if (!prec.check_stability) return e;
            auto e2 = ext1_at(m(N + 2), n(N + 2));
            if (e == e2) return e;
        } catch (const TruncationUnstable&) {
        }
    }
    throw TruncationUnstable("ext1: no stable answer up to truncation " + std::to_string(cap), cap);
}

ExtDecomp ext1(const CMModuleRep& m, const CMModuleRep& n, const Precision& prec) {
    return ext1(source_of(m), source_of(n), m.n, prec);
}

bool is_rigid(const CMModuleRep& m, const Precision& prec) { return ext1(m, m, prec).exponents.empty(); }

namespace {

FpVec random_combination_at_zero(const DVRMatrix& F, int col_rows, FieldRng& rng) {
    FpVec v(F.rows(), Fp(0));
    for (int c = 0; c < F.cols(); ++c) {
        Fp a = rng.next();
        for (int r = 0; r < col_rows; ++r) v[r] += a * F(r, c)[0];
    }
    return v;
}

}  // namespace

bool isomorphic(const CMModuleRep& a, const CMModuleRep& b) {
    if (a.n != b.n || a.k != b.k || a.s != b.s) return false;
    if (module_a_vector(a) != module_a_vector(b)) return false;
    auto F = hom_lattice(a, b);
    FieldRng rng(0xC0FFEE ^ static_cast<std::uint64_t>(a.s));
    auto v = random_combination_at_zero(F, F.rows(), rng);
    FpMat f(a.s, FpVec(a.s));
    for (int j = 0; j < a.s; ++j)
        for (int i = 0; i < a.s; ++i) f[i][j] = v[j * a.s + i];
    return fp_rank(f, a.s) == a.s;
}

bool is_indecomposable(const CMModuleRep& m) {
    auto F = hom_lattice(m, m);
    const int s = m.s, d = s * s, T = F.trunc();
    DVRMatrix W(d, d * d, T);
    std::vector<DVRMatrix> E;
    for (int a = 0; a < d; ++a) E.push_back(unvec(F, a, s, s));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) put_vec(W, a * d + b, E[a] * E[b]);
    auto sol = solve_linear_system(F, W);
    if (!sol || sol->precision_loss >= T) throw TruncationUnstable("endomorphism structure constants", T);
    // c[a][b][e]: E_a E_b = sum_e c E_e modulo t
    auto c = [&](int a, int b, int e) { return sol->x(e, a * d + b)[0]; };
    FpVec tr(d, Fp(0));
    for (int x = 0; x < d; ++x)
        for (int b = 0; b < d; ++b) tr[x] += c(x, b, b);
    FpMat form(d, FpVec(d, Fp(0)));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int e = 0; e < d; ++e) form[a][b] += c(a, b, e) * tr[e];
    return fp_rank(form, d) == 1;
}

bool is_indecomposable_rank2(const Rim& top, const Rim& bottom) { return interlacing_degree(top, bottom) >= 3; }

std::vector<Profile> identify_profile(const CMModuleRep& m) {
    std::vector<Profile> out;
    if (m.s == 1) {
        out.push_back(Profile{{identify_rank1(m)}});
        return out;
    }
    if (m.s != 2) return out;
    auto a = module_a_vector(m);
    std::vector<int> ones;
    std::uint64_t twos = 0;
    for (int i = 0; i < m.n; ++i) {
        if (a.a[i] == 2) twos |= std::uint64_t{1} << i;
        else if (a.a[i] == 1) ones.push_back(i);
        else if (a.a[i] != 0) return out;
    }
    const int need = m.k - std::popcount(twos);
    if (need < 0 || need > static_cast<int>(ones.size())) return out;
    for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << ones.size()); ++sel) {
        if (std::popcount(sel) != need) continue;
        std::uint64_t X = twos, Y = twos;
        for (std::size_t b = 0; b < ones.size(); ++b) ((sel >> b) & 1 ? X : Y) |= std::uint64_t{1} << ones[b];
        Rim rx = Rim::from_mask(m.n, X), ry = Rim::from_mask(m.n, Y);
        if (isomorphic(m, build_extension(rx, ry, m.N))) out.push_back(Profile{{rx, ry}});
    }
    std::sort(out.begin(), out.end());
    return out;
}

Embedding embed_rank1(const Rim& sub, const CMModuleRep& m, std::uint64_t seed) {
    auto L = build_rank1(sub, m.N);
    auto F = hom_lattice(L, m);
    const int s = m.s, T = m.N;
    FieldRng rng(seed);
    for (int attempt = 0; attempt < 16; ++attempt) {
        DVRMatrix f0(s, 1, T);
        for (int c = 0; c < F.cols(); ++c) {
            auto a = ValPoly::constant(rng.next(), T);
            for (int r = 0; r < s; ++r) f0(r, 0) += F(r, c) * a;
        }
        auto f = extend_map(L, m, f0);
        bool saturated = true;
        for (int i = 1; i <= m.n && saturated; ++i) {
            bool nz = false;
            for (int r = 0; r < s; ++r) nz = nz || !f[i](r, 0)[0].is_zero();
            saturated = nz;
        }
        if (!saturated) continue;

        Embedding e;
        e.maps = f;
        // basis change T_i = [f_i | complement], quotient = lower-right block
        std::vector<DVRMatrix> Tm(m.n + 1), Ti(m.n + 1);
        for (int i = 1; i <= m.n; ++i) {
            DVRMatrix B(s, s, T);
            for (int r = 0; r < s; ++r) B(r, 0) = f[i](r, 0);
            FpMat span{FpVec(s)};
            for (int r = 0; r < s; ++r) span[0][r] = f[i](r, 0)[0];
            int col = 1;
            for (int j = 0; j < s && col < s; ++j) {
                FpVec ej(s, Fp(0));
                ej[j] = 1;
                span.push_back(ej);
                if (fp_rank(span, s) == col + 1) B(j, col++) = ValPoly::constant(1, T);
                else span.pop_back();
            }
            auto inv = solve_linear(B, DVRMatrix::identity(s, T));
            if (!inv) throw EmbeddingFailure("embed_rank1: basis change not invertible");
            Tm[i] = B;
            Ti[i] = *inv;
        }
        CMModuleRep q;
        q.n = m.n;
        q.k = m.k;
        q.s = s - 1;
        q.N = T;
        q.exact = false;
        q.x.assign(m.n + 1, DVRMatrix());
        q.y.assign(m.n + 1, DVRMatrix());
        // f_i is only known modulo t^(T - i)
        auto low = [&](const ValPoly& p) { return p.with_trunc(T - m.n); };
        bool ok = true;
        for (int i = 1; i <= m.n; ++i) {
            const int im = wrap(i - 1, m.n);
            auto xi = Ti[i] * m.xm(i) * Tm[im];
            auto yi = Ti[im] * m.ym(i) * Tm[i];
            for (int r = 1; r < s; ++r) ok = ok && low(xi(r, 0)).is_zero() && low(yi(r, 0)).is_zero();
            ok = ok && low(xi(0, 0)) == low(L.x[i](0, 0)) && low(yi(0, 0)) == low(L.y[i](0, 0));
            q.x[i] = xi.block(1, 1, s - 1, s - 1);
            q.y[i] = yi.block(1, 1, s - 1, s - 1);
        }
        e.quotient = q;
        e.exact = ok && validate_relations(q.with_trunc(T - m.n)).empty();
        if (q.s == 1) e.quotient_rim = identify_rank1(q);
        return e;
    }
    throw EmbeddingFailure("embed_rank1: no saturated map from L_" + sub.str());
}

Embedding diagonal_embedding(const Rim& top, const Rim& bottom, int N) {
    return embed_rank1(bottom, build_extension(top, bottom, N));
}

}  // namespace grasscat
