#include "posetcode/linalg.hpp"

#include "posetcode/error.hpp"

namespace posetcode::linalg {

Echelon rref(const gf::Field& F, Matrix m, std::size_t cols) {
    for (const auto& row : m)
        if (row.size() != cols) throw Error(ErrorKind::LengthMismatch, "ragged matrix");
    Echelon out;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < m.size(); ++c) {
        std::size_t piv = lead;
        while (piv < m.size() && m[piv][c].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[lead]);
        const Elem inv = F.inv(m[lead][c]);
        for (auto& x : m[lead]) x = F.mul(x, inv);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == lead || m[i][c].is_zero()) continue;
            const Elem factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = F.sub(m[i][j], F.mul(factor, m[lead][j]));
        }
        out.pivots.push_back(c);
        ++lead;
    }
    m.resize(lead);
    out.rows = std::move(m);
    return out;
}

std::size_t rank(const gf::Field& F, const Matrix& m, std::size_t cols) { return rref(F, m, cols).pivots.size(); }

Matrix nullspace(const gf::Field& F, const Matrix& m, std::size_t cols) {
    const Echelon e = rref(F, m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    Matrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elem> v(cols);
        v[free] = F.one();
        for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = F.neg(e.rows[i][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace posetcode::linalg
