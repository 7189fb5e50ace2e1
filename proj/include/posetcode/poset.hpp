#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "posetcode/gf.hpp"

namespace posetcode::poset {

using gf::Elem;

/// Finite ranked poset. Vertices are 0..n-1 in increasing label order; the
/// relation is stored as a dense boolean matrix.
class Poset {
public:
    /// `covers` holds (lower, upper) vertex pairs. Labels default to 1..n.
    /// Throws InvalidPoset on cycles or when no rank function exists.
    static Poset from_covers(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> covers,
                             std::vector<int> labels = {});

    std::size_t size() const noexcept { return n_; }
    bool leq(std::size_t a, std::size_t b) const noexcept { return leq_[a * n_ + b]; }
    int rank(std::size_t v) const noexcept { return rank_[v]; }
    int label(std::size_t v) const noexcept { return labels_[v]; }
    const std::vector<int>& labels() const noexcept { return labels_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& covers() const noexcept { return covers_; }
    std::vector<std::size_t> maximal() const;

    /// Hasse diagram in Graphviz DOT, vertices named by label.
    std::string to_dot(const std::string& name) const;
    /// {"labels": [...], "ranks": [...], "edges": [[lower, upper], ...]} by label.
    std::string to_json() const;

private:
    std::size_t n_ = 0;
    std::vector<bool> leq_;
    std::vector<int> rank_;
    std::vector<int> labels_;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

/// r disjoint chains of length s. Level L (1 = bottom), column j (1-based)
/// carries label (L-1)r + j.
Poset chain_union(unsigned s, unsigned r);

/// U(s, r, b_row). Matrix row i (1 = the d^0 row) lives on level s-i+1, so the
/// constant row b_row collapses level s-b_row+1 to the single vertex with
/// label (s-b_row)r + 1. Derivative order is b_row - 1.
struct BottleneckShape {
    unsigned s = 1;
    unsigned r = 2;
    unsigned b_row = 1;

    /// Throws ParameterOutOfRange unless s >= 1, r >= 2, 1 <= b_row <= s.
    void validate() const;
    unsigned beta() const noexcept { return b_row - 1; }
    unsigned collapsed_level() const noexcept { return s - b_row + 1; }
    std::size_t size() const noexcept { return std::size_t(s) * r - r + 1; }
};

Poset bottleneck(const BottleneckShape& shape);

/// s x r matrix, row-major. Row 0 holds d^0 values (top rank).
struct MatrixWord {
    unsigned s = 0;
    unsigned r = 0;
    std::vector<Elem> entries;

    MatrixWord() = default;
    MatrixWord(unsigned s_, unsigned r_) : s(s_), r(r_), entries(std::size_t(s_) * r_) {}

    Elem& at(unsigned i, unsigned j) { return entries[std::size_t(i) * r + j]; }
    Elem at(unsigned i, unsigned j) const { return entries[std::size_t(i) * r + j]; }
    bool is_zero() const noexcept;
    bool row_constant(unsigned i) const noexcept;
    friend bool operator==(const MatrixWord&, const MatrixWord&) = default;
};

/// Size of the lower ideal generated by supp(v).
std::size_t p_weight(const Poset& P, std::span<const Elem> v);

std::size_t nrt_weight(const MatrixWord& A);
/// Three-case formula; throws NotConstantRow if row b_row is not constant.
std::size_t bottleneck_weight(const MatrixWord& A, const BottleneckShape& shape);

/// Vertex-indexed vector of A under the labels of chain_union(s, r).
std::vector<Elem> flatten_nrt(const MatrixWord& A);
/// Vertex-indexed vector of A under the labels of bottleneck(shape).
std::vector<Elem> flatten(const MatrixWord& A, const BottleneckShape& shape);
/// Inverse of flatten.
MatrixWord unflatten(std::span<const Elem> v, const BottleneckShape& shape);

/// Vertex index of matrix cell (row i, column j), 0-based, in the two posets.
std::size_t nrt_vertex(unsigned s, unsigned r, unsigned i, unsigned j) noexcept;
std::size_t bottleneck_vertex(const BottleneckShape& shape, unsigned i, unsigned j) noexcept;

// Unchecked kernels on a row-major s*r block, used by enumeration.
std::size_t nrt_weight_raw(const Elem* a, unsigned s, unsigned r) noexcept;
std::size_t bottleneck_weight_raw(const Elem* a, unsigned s, unsigned r, unsigned b_row) noexcept;

}  // namespace posetcode::poset
