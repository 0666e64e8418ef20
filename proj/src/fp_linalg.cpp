#include "grasscat/fp_linalg.hpp"

#include <utility>

namespace grasscat {

std::vector<int> row_reduce(FpMat& m, int cols) {
    std::vector<int> piv;
    int r = 0;
    const int R = static_cast<int>(m.size());
    for (int c = 0; c < cols && r < R; ++c) {
        int p = -1;
        for (int i = r; i < R; ++i)
            if (!m[i][c].is_zero()) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        Fp inv = m[r][c].inv();
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < R; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Fp f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

int fp_rank(FpMat m, int cols) { return static_cast<int>(row_reduce(m, cols).size()); }

std::vector<FpVec> nullspace(FpMat m, int cols) {
    auto piv = row_reduce(m, cols);
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<FpVec> out;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        FpVec v(cols, Fp(0));
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace grasscat
