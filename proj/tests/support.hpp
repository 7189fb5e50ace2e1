#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "posetcode/gf.hpp"
#include "posetcode/poly.hpp"
#include "posetcode/poset.hpp"

namespace posetcode::test {

// Fixed seeds keep every property run reproducible.
inline std::mt19937_64& rng() {
    static std::mt19937_64 g(0x5eed'c0de'2024ULL);
    return g;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

inline gf::Elem random_elem(const gf::Field& F) { return gf::Elem{static_cast<std::uint32_t>(uniform(0, F.q() - 1))}; }

inline gf::Elem random_nonzero(const gf::Field& F) {
    return gf::Elem{static_cast<std::uint32_t>(uniform(1, F.q() - 1))};
}

inline poly::Polynomial random_poly(const gf::FieldPtr& F, int max_degree) {
    std::vector<gf::Elem> c(static_cast<std::size_t>(max_degree + 1));
    for (auto& x : c) x = random_elem(*F);
    return poly::Polynomial(F, std::move(c));
}

inline poset::MatrixWord random_matrix(const gf::Field& F, unsigned s, unsigned r) {
    poset::MatrixWord A(s, r);
    for (auto& e : A.entries) e = random_elem(F);
    return A;
}

// Forces row b_row (1-based) constant.
inline void make_row_constant(const gf::Field& F, poset::MatrixWord& A, unsigned b_row) {
    const auto c = random_elem(F);
    for (unsigned j = 0; j < A.r; ++j) A.at(b_row - 1, j) = c;
}

// Exact integer binomial, valid for n <= 60.
inline std::uint64_t exact_binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline std::vector<gf::FieldPtr> small_fields() {
    return {gf::Field::make(2, 1), gf::Field::make(3, 1), gf::Field::make(2, 2), gf::Field::make(5, 1),
            gf::Field::make(7, 1), gf::Field::make(2, 3), gf::Field::make(3, 2), gf::Field::make(2, 4)};
}

}  // namespace posetcode::test
