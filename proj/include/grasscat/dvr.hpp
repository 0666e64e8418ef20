#pragma once

// Linear algebra over Z/t^N, the truncation of the power series ring in t.
// Everything here is a template over the coefficient field so that the
// GF(p) engine can be cross-checked against exact rationals.

#include <algorithm>
#include <cassert>
#include <limits>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "grasscat/errors.hpp"
#include "grasscat/field.hpp"

namespace grasscat {

template <class F>
class BasicValPoly {
public:
    static constexpr int INF = std::numeric_limits<int>::max();

    BasicValPoly() = default;
    explicit BasicValPoly(int N) : c_(static_cast<std::size_t>(N), F(0)) {}

    static BasicValPoly monomial(F a, int e, int N) {
        BasicValPoly p(N);
        if (e >= 0 && e < N) p.c_[e] = a;
        return p;
    }
    static BasicValPoly constant(F a, int N) { return monomial(a, 0, N); }
    static BasicValPoly t_power(int e, int N) { return monomial(F(1), e, N); }

    int trunc() const { return static_cast<int>(c_.size()); }
    const F& operator[](int d) const { return c_[d]; }
    F& operator[](int d) { return c_[d]; }
    const std::vector<F>& coeffs() const { return c_; }

    int val() const {
        for (int d = 0; d < trunc(); ++d)
            if (!(c_[d] == F(0))) return d;
        return INF;
    }
    bool is_zero() const { return val() == INF; }
    bool is_unit() const { return trunc() > 0 && !(c_[0] == F(0)); }

    BasicValPoly& operator+=(const BasicValPoly& o) {
        assert(o.trunc() == trunc());
        for (int d = 0; d < trunc(); ++d) c_[d] += o.c_[d];
        return *this;
    }
    BasicValPoly& operator-=(const BasicValPoly& o) {
        assert(o.trunc() == trunc());
        for (int d = 0; d < trunc(); ++d) c_[d] -= o.c_[d];
        return *this;
    }
    friend BasicValPoly operator+(BasicValPoly a, const BasicValPoly& b) { return a += b; }
    friend BasicValPoly operator-(BasicValPoly a, const BasicValPoly& b) { return a -= b; }
    BasicValPoly operator-() const {
        BasicValPoly r(trunc());
        for (int d = 0; d < trunc(); ++d) r.c_[d] = -c_[d];
        return r;
    }
    friend BasicValPoly operator*(const BasicValPoly& a, const BasicValPoly& b) {
        assert(a.trunc() == b.trunc());
        const int N = a.trunc();
        BasicValPoly r(N);
        const int va = a.val(), vb = b.val();
        if (va == INF || vb == INF) return r;
        for (int i = va; i < N; ++i) {
            if (a.c_[i] == F(0)) continue;
            for (int j = vb; i + j < N; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    BasicValPoly& operator*=(const BasicValPoly& o) { return *this = *this * o; }
    BasicValPoly scaled(const F& a) const {
        BasicValPoly r(*this);
        for (auto& x : r.c_) x = x * a;
        return r;
    }

    // Multiply by t^e. Negative e divides; coefficients pushed below degree 0
    // are dropped and the top |e| coefficients become unknown (zero-filled).
    BasicValPoly shifted(int e) const {
        const int N = trunc();
        BasicValPoly r(N);
        for (int d = 0; d < N; ++d) {
            int nd = d + e;
            if (nd >= 0 && nd < N) r.c_[nd] = c_[d];
        }
        return r;
    }

    BasicValPoly unit_inverse() const {
        assert(is_unit());
        const int N = trunc();
        BasicValPoly r(N);
        const F inv0 = F(1) / c_[0];
        r.c_[0] = inv0;
        for (int d = 1; d < N; ++d) {
            F s(0);
            for (int j = 1; j <= d; ++j) s += c_[j] * r.c_[d - j];
            r.c_[d] = -(s * inv0);
        }
        return r;
    }

    // q with q * b == *this, given val(*this) >= val(b); b nonzero.
    BasicValPoly divided_by(const BasicValPoly& b) const {
        const int vb = b.val();
        assert(vb != INF && val() >= vb);
        return shifted(-vb) * b.shifted(-vb).unit_inverse();
    }

    BasicValPoly with_trunc(int N) const {
        BasicValPoly r(N);
        for (int d = 0; d < std::min(N, trunc()); ++d) r.c_[d] = c_[d];
        return r;
    }

    friend bool operator==(const BasicValPoly& a, const BasicValPoly& b) {
        const int N = std::max(a.trunc(), b.trunc());
        for (int d = 0; d < N; ++d) {
            F x = d < a.trunc() ? a.c_[d] : F(0);
            F y = d < b.trunc() ? b.c_[d] : F(0);
            if (!(x == y)) return false;
        }
        return true;
    }
    friend bool operator!=(const BasicValPoly& a, const BasicValPoly& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const BasicValPoly& p) {
        bool any = false;
        for (int d = 0; d < p.trunc(); ++d) {
            if (p.c_[d] == F(0)) continue;
            if (any) os << " + ";
            any = true;
            if (d == 0) os << p.c_[d];
            else {
                if (!(p.c_[d] == F(1))) os << p.c_[d] << '*';
                os << 't';
                if (d > 1) os << '^' << d;
            }
        }
        if (!any) os << '0';
        return os;
    }

private:
    std::vector<F> c_;
};

template <class F>
class BasicDVRMatrix {
public:
    using Poly = BasicValPoly<F>;

    BasicDVRMatrix() = default;
    BasicDVRMatrix(int rows, int cols, int N)
        : r_(rows), c_(cols), N_(N), a_(static_cast<std::size_t>(rows) * cols, Poly(N)) {}

    static BasicDVRMatrix identity(int n, int N) {
        BasicDVRMatrix m(n, n, N);
        for (int i = 0; i < n; ++i) m(i, i) = Poly::constant(F(1), N);
        return m;
    }
    static BasicDVRMatrix scalar(int n, const Poly& p) {
        BasicDVRMatrix m(n, n, p.trunc());
        for (int i = 0; i < n; ++i) m(i, i) = p;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    int trunc() const { return N_; }

    Poly& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const Poly& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    friend BasicDVRMatrix operator*(const BasicDVRMatrix& a, const BasicDVRMatrix& b) {
        assert(a.c_ == b.r_ && a.N_ == b.N_);
        BasicDVRMatrix r(a.r_, b.c_, a.N_);
        for (int i = 0; i < a.r_; ++i)
            for (int l = 0; l < a.c_; ++l) {
                const Poly& x = a(i, l);
                if (x.is_zero()) continue;
                for (int j = 0; j < b.c_; ++j) {
                    const Poly& y = b(l, j);
                    if (!y.is_zero()) r(i, j) += x * y;
                }
            }
        return r;
    }
    friend BasicDVRMatrix operator+(BasicDVRMatrix a, const BasicDVRMatrix& b) {
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
        return a;
    }
    friend BasicDVRMatrix operator-(BasicDVRMatrix a, const BasicDVRMatrix& b) {
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
        return a;
    }
    BasicDVRMatrix times(const Poly& p) const {
        BasicDVRMatrix r(*this);
        for (auto& x : r.a_) x = x * p;
        return r;
    }
    BasicDVRMatrix shifted(int e) const {
        BasicDVRMatrix r(*this);
        for (auto& x : r.a_) x = x.shifted(e);
        return r;
    }
    BasicDVRMatrix transpose() const {
        BasicDVRMatrix r(c_, r_, N_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    BasicDVRMatrix with_trunc(int N) const {
        BasicDVRMatrix r(r_, c_, N);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].with_trunc(N);
        return r;
    }
    BasicDVRMatrix block(int r0, int c0, int nr, int nc) const {
        BasicDVRMatrix r(nr, nc, N_);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
        return r;
    }
    BasicDVRMatrix column(int j) const { return block(0, j, r_, 1); }
    void set_block(int r0, int c0, const BasicDVRMatrix& b) {
        for (int i = 0; i < b.r_; ++i)
            for (int j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    // Constant terms, the reduction modulo t.
    std::vector<std::vector<F>> at_zero() const {
        std::vector<std::vector<F>> m(r_, std::vector<F>(c_, F(0)));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m[i][j] = N_ > 0 ? (*this)(i, j)[0] : F(0);
        return m;
    }

    int min_val() const {
        int v = Poly::INF;
        for (const auto& x : a_) v = std::min(v, x.val());
        return v;
    }
    bool is_zero() const { return min_val() == Poly::INF; }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < c_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < r_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }
    // row_i += q * row_j
    void add_row(int i, int j, const Poly& q) {
        Poly qq = q.with_trunc(N_);
        for (int c = 0; c < c_; ++c)
            if (!(*this)(j, c).is_zero()) (*this)(i, c) += qq * (*this)(j, c);
    }
    // col_i += q * col_j
    void add_col(int i, int j, const Poly& q) {
        Poly qq = q.with_trunc(N_);
        for (int r = 0; r < r_; ++r)
            if (!(*this)(r, j).is_zero()) (*this)(r, i) += (*this)(r, j) * qq;
    }
    void scale_row(int i, const Poly& u) {
        Poly uu = u.with_trunc(N_);
        for (int c = 0; c < c_; ++c) (*this)(i, c) = (*this)(i, c) * uu;
    }
    void scale_col(int j, const Poly& u) {
        Poly uu = u.with_trunc(N_);
        for (int r = 0; r < r_; ++r) (*this)(r, j) = (*this)(r, j) * uu;
    }

    friend bool operator==(const BasicDVRMatrix& a, const BasicDVRMatrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) return false;
        for (std::size_t i = 0; i < a.a_.size(); ++i)
            if (a.a_[i] != b.a_[i]) return false;
        return true;
    }

    friend std::ostream& operator<<(std::ostream& os, const BasicDVRMatrix& m) {
        os << '[';
        for (int i = 0; i < m.r_; ++i) {
            os << (i ? ", [" : "[");
            for (int j = 0; j < m.c_; ++j) os << (j ? ", " : "") << m(i, j);
            os << ']';
        }
        return os << ']';
    }

private:
    int r_ = 0, c_ = 0, N_ = 0;
    std::vector<Poly> a_;
};

using ValPoly = BasicValPoly<Fp>;
using DVRMatrix = BasicDVRMatrix<Fp>;

struct InvariantFactors {
    std::vector<int> exponents;  // ascending
    int free_rank = 0;           // free rank of the cokernel
};

// Optional companions that receive the elementary operations of a Smith
// reduction: `left` gets every row operation (left <- R left), `right` every
// column operation (right <- right Q), `right_inv` the inverse column
// operations (right_inv <- Q^-1 right_inv).
template <class F>
struct SmithTrack {
    BasicDVRMatrix<F>* left = nullptr;
    BasicDVRMatrix<F>* right = nullptr;
    BasicDVRMatrix<F>* right_inv = nullptr;
};

// Reduces `a` in place to diag(t^d_0, ..., t^d_{r-1}, 0, ...) and returns the
// pivot valuations in pivot order. Pivot choice: minimal valuation, ties to
// the lexicographically smallest (row, col).
template <class F>
std::vector<int> smith_reduce(BasicDVRMatrix<F>& a, SmithTrack<F> tr = {}) {
    using Poly = BasicValPoly<F>;
    std::vector<int> diag;
    const int R = a.rows(), C = a.cols();
    for (int p = 0; p < std::min(R, C); ++p) {
        int best = Poly::INF, bi = -1, bj = -1;
        for (int i = p; i < R; ++i)
            for (int j = p; j < C; ++j) {
                int v = a(i, j).val();
                if (v < best) best = v, bi = i, bj = j;
            }
        if (bi < 0) break;
        a.swap_rows(p, bi);
        if (tr.left) tr.left->swap_rows(p, bi);
        a.swap_cols(p, bj);
        if (tr.right) tr.right->swap_cols(p, bj);
        if (tr.right_inv) tr.right_inv->swap_rows(p, bj);

        // normalise the pivot to t^best with a row scaling
        Poly u = a(p, p).shifted(-best).unit_inverse();
        a.scale_row(p, u);
        if (tr.left) tr.left->scale_row(p, u);

        const Poly piv = a(p, p);
        for (int i = p + 1; i < R; ++i) {
            if (a(i, p).is_zero()) continue;
            Poly q = -a(i, p).divided_by(piv);
            a.add_row(i, p, q);
            if (tr.left) tr.left->add_row(i, p, q);
        }
        for (int j = p + 1; j < C; ++j) {
            if (a(p, j).is_zero()) continue;
            Poly q = -a(p, j).divided_by(piv);
            a.add_col(j, p, q);
            if (tr.right) tr.right->add_col(j, p, q);
            if (tr.right_inv) tr.right_inv->add_row(p, j, -q);
        }
        diag.push_back(best);
    }
    return diag;
}

template <class F>
InvariantFactors smith_over_dvr(BasicDVRMatrix<F> m) {
    InvariantFactors res;
    res.exponents = smith_reduce(m);
    std::sort(res.exponents.begin(), res.exponents.end());
    res.free_rank = m.rows() - static_cast<int>(res.exponents.size());
    return res;
}

template <class F>
std::vector<BasicDVRMatrix<F>> kernel_basis(BasicDVRMatrix<F> m) {
    auto Q = BasicDVRMatrix<F>::identity(m.cols(), m.trunc());
    SmithTrack<F> tr;
    tr.right = &Q;
    const int r = static_cast<int>(smith_reduce(m, tr).size());
    std::vector<BasicDVRMatrix<F>> out;
    for (int j = r; j < m.cols(); ++j) out.push_back(Q.column(j));
    return out;
}

// Solves m X = rhs column by column. Returns the solution together with the
// number of trailing coefficients that are no longer determined (the largest
// pivot valuation used), or nothing if some column has no solution.
template <class F>
struct LinearSolution {
    BasicDVRMatrix<F> x;
    int precision_loss = 0;
};

template <class F>
std::optional<LinearSolution<F>> solve_linear_system(BasicDVRMatrix<F> m, BasicDVRMatrix<F> rhs) {
    auto Q = BasicDVRMatrix<F>::identity(m.cols(), m.trunc());
    SmithTrack<F> tr;
    tr.left = &rhs;
    tr.right = &Q;
    const auto diag = smith_reduce(m, tr);
    const int r = static_cast<int>(diag.size());
    for (int i = r; i < rhs.rows(); ++i)
        for (int j = 0; j < rhs.cols(); ++j)
            if (!rhs(i, j).is_zero()) return std::nullopt;
    BasicDVRMatrix<F> z(m.cols(), rhs.cols(), m.trunc());
    int loss = 0;
    for (int i = 0; i < r; ++i) {
        loss = std::max(loss, diag[i]);
        for (int j = 0; j < rhs.cols(); ++j) {
            if (rhs(i, j).val() < diag[i]) return std::nullopt;
            z(i, j) = rhs(i, j).shifted(-diag[i]);
        }
    }
    LinearSolution<F> out{Q * z, loss};
    if (loss > 0) out.x = out.x.with_trunc(m.trunc() - loss).with_trunc(m.trunc());
    return out;
}

template <class F>
std::optional<BasicDVRMatrix<F>> solve_linear(const BasicDVRMatrix<F>& m, const BasicDVRMatrix<F>& rhs) {
    auto s = solve_linear_system(m, rhs);
    if (!s) return std::nullopt;
    return s->x;
}

}  // namespace grasscat
