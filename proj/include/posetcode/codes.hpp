#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "posetcode/gf.hpp"
#include "posetcode/poly.hpp"
#include "posetcode/poset.hpp"

namespace posetcode::codes {

using gf::Elem;
using gf::FieldPtr;
using poly::Polynomial;
using poset::MatrixWord;

/// Metric on s x r matrices: NRT over C(s, r), or the bottleneck U(s, r, b_row).
struct Metric {
    unsigned s = 1;
    unsigned r = 1;
    std::optional<unsigned> b_row;

    std::size_t length() const noexcept { return b_row ? std::size_t(s) * r - r + 1 : std::size_t(s) * r; }
    poset::Poset poset() const;
    poset::BottleneckShape shape() const { return {s, r, b_row.value_or(1)}; }
    /// "C(2,3)" or "U(2,3,1)"
    std::string describe() const;
    /// Checked weight (NotConstantRow for bottleneck words outside Mat^(b)).
    std::size_t weight(const MatrixWord& A) const;
    std::size_t weight_raw(const Elem* a) const noexcept {
        return b_row ? poset::bottleneck_weight_raw(a, s, r, *b_row) : poset::nrt_weight_raw(a, s, r);
    }
    /// Generic oracle: lower-ideal size of the flattened word in poset().
    std::size_t weight_oracle(const poset::Poset& P, const MatrixWord& A) const;
};

/// Linear code given by generator matrices (one s x r word per basis vector).
struct Code {
    FieldPtr field;
    Metric metric;
    std::vector<MatrixWord> generator;

    std::size_t dim() const noexcept { return generator.size(); }
    std::size_t length() const noexcept { return metric.length(); }
};

struct RSCodeSpec {
    FieldPtr field;
    std::vector<Elem> points;
    unsigned s = 1;
    unsigned t = 1;
    std::optional<unsigned> b_row;

    unsigned r() const noexcept { return static_cast<unsigned>(points.size()); }
    /// DuplicatePoints, or ParameterOutOfRange outside r(b_row-1)+1 <= t <= rs.
    void validate() const;
};

struct RSCode {
    RSCodeSpec spec;
    std::vector<Polynomial> basis;
    Code code;
};

/// Basis of { f : deg f <= t-1, d^order f(a_1) = ... = d^order f(a_r) } from the
/// nullspace of the system in (f_0, ..., f_{t-1}, c), returned in reduced row
/// echelon form over the coefficient vectors (columns in ascending degree).
std::vector<Polynomial> constrained_basis(const FieldPtr& field, const std::vector<Elem>& points, unsigned t,
                                          unsigned order);

/// H(f; a_1..a_r): entry (i, j) = d^i f(a_j), i < s.
MatrixWord evaluation_matrix(const Polynomial& f, const std::vector<Elem>& points, unsigned s);

RSCode build_code(const RSCodeSpec& spec);

/// Codeword sum_i message_i * generator_i. LengthMismatch on bad length.
MatrixWord encode(const Code& code, std::span<const Elem> message);
Polynomial message_polynomial(const RSCode& code, std::span<const Elem> message);
/// H(message_polynomial) computed directly from the polynomial.
MatrixWord encode_poly(const RSCode& code, std::span<const Elem> message);

/// Message with base-q digits of `index`, most significant first, so that
/// consecutive indices step the last message symbol.
std::vector<Elem> message_from_index(std::uint64_t index, std::uint32_t q, std::size_t dim);

struct WeightEnumerator {
    std::vector<std::uint64_t> counts;  // counts[w] for w in 0..length

    std::uint64_t total() const noexcept;
    /// Smallest nonzero weight present; 0 if only the zero word exists.
    std::size_t min_nonzero() const noexcept;
    /// "1 + 4x^3 + 20x^4"
    std::string polynomial() const;
    friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

/// Enumeration cap: POSETCODE_BUDGET if set to a positive integer, else 500000.
std::uint64_t default_budget();
/// q^dim, or BudgetExceeded if it passes `budget`.
std::uint64_t checked_size(std::uint32_t q, std::size_t dim, std::uint64_t budget);

/// Exhaustive tally, parallel kernel. workers <= 0 means the OpenMP default.
WeightEnumerator weight_enumerator(const Code& code, std::uint64_t budget, int workers = 0);
/// ParameterOutOfRange for dim 0.
std::size_t min_distance(const Code& code, std::uint64_t budget, int workers = 0);

struct SingletonReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    long long slack = 0;  // n - k + 1 - d
    bool mds = false;
};

SingletonReport singleton_report(const Code& code, std::size_t d);
SingletonReport singleton_report(std::size_t n, std::size_t k, std::size_t d);

using Rational = boost::rational<long long>;

struct CodeParams {
    std::size_t length = 0;
    std::size_t dim = 0;
    std::size_t distance = 0;
    Rational rate;
    Rational relative_distance;
    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

CodeParams make_params(std::size_t length, std::size_t dim, std::size_t distance);

struct Comparison {
    CodeParams nrt;                 // computed, C(s, r)
    CodeParams bottleneck;          // computed, U(s, r, 1)
    CodeParams nrt_closed;          // [rs, t, rs-t+1]
    CodeParams bottleneck_closed;   // [r(s-1)+1, t-r+1, rs-t+1]
    bool matches_closed_form = false;
    bool bottleneck_better = false;  // strictly larger relative distance
};

/// Builds both codes and measures them exhaustively. Requires r <= t <= rs.
Comparison compare_metrics(const FieldPtr& field, const std::vector<Elem>& points, unsigned s, unsigned t,
                           std::uint64_t budget, int workers = 0);

}  // namespace posetcode::codes
