#include "posetcode/codes.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "posetcode/error.hpp"
#include "posetcode/kernels.hpp"
#include "posetcode/linalg.hpp"

namespace posetcode::codes {

poset::Poset Metric::poset() const {
    return b_row ? poset::bottleneck(shape()) : poset::chain_union(s, r);
}

std::string Metric::describe() const {
    std::ostringstream os;
    if (b_row)
        os << "U(" << s << "," << r << "," << *b_row << ")";
    else
        os << "C(" << s << "," << r << ")";
    return os.str();
}

std::size_t Metric::weight(const MatrixWord& A) const {
    if (A.s != s || A.r != r) throw Error(ErrorKind::LengthMismatch, "matrix shape does not match metric");
    return b_row ? poset::bottleneck_weight(A, shape()) : poset::nrt_weight(A);
}

std::size_t Metric::weight_oracle(const poset::Poset& P, const MatrixWord& A) const {
    const auto v = b_row ? poset::flatten(A, shape()) : poset::flatten_nrt(A);
    return poset::p_weight(P, v);
}

void RSCodeSpec::validate() const {
    if (!field) throw Error(ErrorKind::ParameterOutOfRange, "missing field");
    const unsigned rr = r();
    if (rr < 1) throw Error(ErrorKind::ParameterOutOfRange, "need at least one evaluation point");
    for (auto a : points)
        if (a.v >= field->q()) throw Error(ErrorKind::ParameterOutOfRange, "evaluation point outside field");
    if (std::set<Elem>(points.begin(), points.end()).size() != points.size())
        throw Error(ErrorKind::DuplicatePoints, "evaluation points must be distinct");
    if (s < 1) throw Error(ErrorKind::ParameterOutOfRange, "s must be >= 1");
    const std::string where = " (r=" + std::to_string(rr) + ", s=" + std::to_string(s) + ", t=" + std::to_string(t) +
                              (b_row ? ", b_row=" + std::to_string(*b_row) : std::string()) + ")";
    if (t < 1 || t > rr * s) throw Error(ErrorKind::ParameterOutOfRange, "need 1 <= t <= rs" + where);
    if (b_row) {
        if (rr < 2) throw Error(ErrorKind::ParameterOutOfRange, "bottleneck codes need r >= 2" + where);
        if (*b_row < 1 || *b_row > s) throw Error(ErrorKind::ParameterOutOfRange, "need 1 <= b_row <= s" + where);
        if (t < rr * (*b_row - 1) + 1)
            throw Error(ErrorKind::ParameterOutOfRange, "need r(b_row-1)+1 <= t" + where);
    }
}

std::vector<Polynomial> constrained_basis(const FieldPtr& field, const std::vector<Elem>& points, unsigned t,
                                          unsigned order) {
    if (t < 1) throw Error(ErrorKind::ParameterOutOfRange, "t must be >= 1");
    if (std::set<Elem>(points.begin(), points.end()).size() != points.size())
        throw Error(ErrorKind::DuplicatePoints, "evaluation points must be distinct");
    const auto& F = *field;
    linalg::Matrix system;
    for (auto a : points) {
        std::vector<Elem> row(t + 1);
        for (unsigned i = order; i < t; ++i) row[i] = F.mul(F.binom(i, order), F.pow(a, i - order));
        row[t] = F.neg(F.one());
        system.push_back(std::move(row));
    }
    linalg::Matrix solutions;
    for (auto& v : linalg::nullspace(F, system, t + 1)) {
        v.resize(t);
        solutions.push_back(std::move(v));
    }
    std::vector<Polynomial> basis;
    for (auto& v : linalg::rref(F, std::move(solutions), t).rows) basis.emplace_back(field, std::move(v));
    return basis;
}

MatrixWord evaluation_matrix(const Polynomial& f, const std::vector<Elem>& points, unsigned s) {
    MatrixWord A(s, static_cast<unsigned>(points.size()));
    for (unsigned j = 0; j < A.r; ++j) {
        const auto col = poly::taylor_coeffs(f, points[j], s);
        for (unsigned i = 0; i < s; ++i) A.at(i, j) = col[i];
    }
    return A;
}

RSCode build_code(const RSCodeSpec& spec) {
    spec.validate();
    RSCode out{spec, {}, {spec.field, Metric{spec.s, spec.r(), spec.b_row}, {}}};
    if (spec.b_row) {
        out.basis = constrained_basis(spec.field, spec.points, spec.t, *spec.b_row - 1);
    } else {
        for (unsigned i = 0; i < spec.t; ++i) out.basis.push_back(Polynomial::monomial(spec.field, Elem{1}, i));
    }
    for (const auto& f : out.basis) out.code.generator.push_back(evaluation_matrix(f, spec.points, spec.s));
    return out;
}

MatrixWord encode(const Code& code, std::span<const Elem> message) {
    if (message.size() != code.dim())
        throw Error(ErrorKind::LengthMismatch, "message length " + std::to_string(message.size()) + " vs dimension " +
                                                   std::to_string(code.dim()));
    const auto& F = *code.field;
    MatrixWord A(code.metric.s, code.metric.r);
    for (std::size_t i = 0; i < message.size(); ++i) {
        if (message[i].is_zero()) continue;
        const auto& g = code.generator[i].entries;
        for (std::size_t e = 0; e < A.entries.size(); ++e) A.entries[e] = F.add(A.entries[e], F.mul(message[i], g[e]));
    }
    return A;
}

Polynomial message_polynomial(const RSCode& code, std::span<const Elem> message) {
    if (message.size() != code.basis.size())
        throw Error(ErrorKind::LengthMismatch, "message length does not match dimension");
    Polynomial f(code.spec.field);
    for (std::size_t i = 0; i < message.size(); ++i) f = f + code.basis[i].scaled(message[i]);
    return f;
}

MatrixWord encode_poly(const RSCode& code, std::span<const Elem> message) {
    return evaluation_matrix(message_polynomial(code, message), code.spec.points, code.spec.s);
}

std::vector<Elem> message_from_index(std::uint64_t index, std::uint32_t q, std::size_t dim) {
    std::vector<Elem> m(dim);
    for (std::size_t i = dim; i-- > 0;) {
        m[i] = Elem{static_cast<std::uint32_t>(index % q)};
        index /= q;
    }
    return m;
}

std::uint64_t WeightEnumerator::total() const noexcept {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

std::size_t WeightEnumerator::min_nonzero() const noexcept {
    for (std::size_t w = 1; w < counts.size(); ++w)
        if (counts[w]) return w;
    return 0;
}

std::string WeightEnumerator::polynomial() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t w = 0; w < counts.size(); ++w) {
        if (!counts[w]) continue;
        if (!first) os << " + ";
        first = false;
        if (w == 0) {
            os << counts[w];
            continue;
        }
        if (counts[w] != 1) os << counts[w];
        os << 'x';
        if (w > 1) os << '^' << w;
    }
    return first ? "0" : os.str();
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("POSETCODE_BUDGET")) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 500000;
}

std::uint64_t checked_size(std::uint32_t q, std::size_t dim, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (total > budget / q)
            throw Error(ErrorKind::BudgetExceeded, std::to_string(q) + "^" + std::to_string(dim) +
                                                       " codewords exceed budget " + std::to_string(budget));
        total *= q;
    }
    if (total > budget)
        throw Error(ErrorKind::BudgetExceeded, std::to_string(q) + "^" + std::to_string(dim) +
                                                   " codewords exceed budget " + std::to_string(budget));
    return total;
}

WeightEnumerator weight_enumerator(const Code& code, std::uint64_t budget, int workers) {
    return kernels::enumerate_parallel(code, budget, workers);
}

std::size_t min_distance(const Code& code, std::uint64_t budget, int workers) {
    if (code.dim() == 0) throw Error(ErrorKind::ParameterOutOfRange, "minimum distance of a zero-dimensional code");
    return weight_enumerator(code, budget, workers).min_nonzero();
}

SingletonReport singleton_report(std::size_t n, std::size_t k, std::size_t d) {
    SingletonReport r{n, k, d, static_cast<long long>(n) - static_cast<long long>(k) + 1 - static_cast<long long>(d),
                      false};
    r.mds = r.slack == 0;
    return r;
}

SingletonReport singleton_report(const Code& code, std::size_t d) {
    return singleton_report(code.length(), code.dim(), d);
}

CodeParams make_params(std::size_t length, std::size_t dim, std::size_t distance) {
    const auto n = static_cast<long long>(length);
    return {length, dim, distance, Rational(static_cast<long long>(dim), n),
            Rational(static_cast<long long>(distance), n)};
}

Comparison compare_metrics(const FieldPtr& field, const std::vector<Elem>& points, unsigned s, unsigned t,
                           std::uint64_t budget, int workers) {
    const unsigned r = static_cast<unsigned>(points.size());
    if (r < 2 || t < r || t > r * s)
        throw Error(ErrorKind::ParameterOutOfRange, "comparison needs r >= 2 and r <= t <= rs (r=" +
                                                        std::to_string(r) + ", s=" + std::to_string(s) +
                                                        ", t=" + std::to_string(t) + ")");
    const auto c1 = build_code({field, points, s, t, std::nullopt});
    const auto c2 = build_code({field, points, s, t, 1u});
    Comparison out;
    out.nrt = make_params(c1.code.length(), c1.code.dim(), min_distance(c1.code, budget, workers));
    out.bottleneck = make_params(c2.code.length(), c2.code.dim(), min_distance(c2.code, budget, workers));
    out.nrt_closed = make_params(std::size_t(r) * s, t, std::size_t(r) * s - t + 1);
    out.bottleneck_closed = make_params(std::size_t(r) * (s - 1) + 1, t - r + 1, std::size_t(r) * s - t + 1);
    out.matches_closed_form = out.nrt == out.nrt_closed && out.bottleneck == out.bottleneck_closed;
    out.bottleneck_better = out.bottleneck.relative_distance > out.nrt.relative_distance;
    return out;
}

}  // namespace posetcode::codes
