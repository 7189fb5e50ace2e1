#pragma once

#include <cstddef>
#include <vector>

#include "posetcode/gf.hpp"

namespace posetcode::linalg {

using gf::Elem;
using Matrix = std::vector<std::vector<Elem>>;

struct Echelon {
    Matrix rows;                      // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Gauss-Jordan elimination over GF(q). Every row must have `cols` entries.
Echelon rref(const gf::Field& F, Matrix m, std::size_t cols);
std::size_t rank(const gf::Field& F, const Matrix& m, std::size_t cols);

/// Nullspace basis: one vector per free column, in increasing column order,
/// with that free variable set to 1 and the other free variables 0.
Matrix nullspace(const gf::Field& F, const Matrix& m, std::size_t cols);

}  // namespace posetcode::linalg
