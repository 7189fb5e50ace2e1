#include "posetcode/poset.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "posetcode/error.hpp"

namespace posetcode::poset {

Poset Poset::from_covers(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> covers,
                         std::vector<int> labels) {
    Poset P;
    P.n_ = n;
    if (labels.empty()) {
        labels.resize(n);
        for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(i + 1);
    }
    if (labels.size() != n) throw Error(ErrorKind::InvalidPoset, "label count differs from vertex count");
    for (std::size_t i = 1; i < n; ++i)
        if (labels[i] <= labels[i - 1]) throw Error(ErrorKind::InvalidPoset, "labels must be strictly increasing");
    std::vector<std::vector<std::size_t>> up(n);
    for (auto [lo, hi] : covers) {
        if (lo >= n || hi >= n || lo == hi) throw Error(ErrorKind::InvalidPoset, "bad covering pair");
        up[lo].push_back(hi);
    }
    P.leq_.assign(n * n, false);
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<std::size_t> stack{a};
        P.leq_[a * n + a] = true;
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            for (auto w : up[v]) {
                if (w == a) throw Error(ErrorKind::InvalidPoset, "covering relation has a cycle");
                if (!P.leq_[a * n + w]) {
                    P.leq_[a * n + w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    // Longest chain from a minimal element; then every cover must step by one.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::vector<std::size_t> below(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && P.leq_[b * n + a]) ++below[a];
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return below[x] < below[y]; });
    P.rank_.assign(n, 0);
    for (auto v : order)
        for (auto w : up[v]) P.rank_[w] = std::max(P.rank_[w], P.rank_[v] + 1);
    for (auto [lo, hi] : covers)
        if (P.rank_[hi] != P.rank_[lo] + 1) throw Error(ErrorKind::InvalidPoset, "no rank function exists");
    P.labels_ = std::move(labels);
    P.covers_ = std::move(covers);
    return P;
}

std::vector<std::size_t> Poset::maximal() const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < n_; ++a) {
        bool top = true;
        for (std::size_t b = 0; b < n_ && top; ++b)
            if (b != a && leq(a, b)) top = false;
        if (top) out.push_back(a);
    }
    return out;
}

std::string Poset::to_dot(const std::string& name) const {
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n  rankdir=BT;\n";
    for (std::size_t v = 0; v < n_; ++v) os << "  " << labels_[v] << ";\n";
    for (auto [lo, hi] : covers_) os << "  " << labels_[lo] << " -> " << labels_[hi] << ";\n";
    os << "}\n";
    return os.str();
}

std::string Poset::to_json() const {
    nlohmann::json j;
    j["labels"] = labels_;
    j["ranks"] = rank_;
    auto edges = nlohmann::json::array();
    for (auto [lo, hi] : covers_) edges.push_back({labels_[lo], labels_[hi]});
    j["edges"] = edges;
    return j.dump(2);
}

Poset chain_union(unsigned s, unsigned r) {
    const std::size_t n = std::size_t(s) * r;
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t v = r; v < n; ++v) covers.emplace_back(v - r, v);
    return Poset::from_covers(n, std::move(covers));
}

void BottleneckShape::validate() const {
    if (s < 1 || r < 2 || b_row < 1 || b_row > s)
        throw Error(ErrorKind::ParameterOutOfRange, "bottleneck shape needs s >= 1, r >= 2, 1 <= b_row <= s (got s=" +
                                                        std::to_string(s) + ", r=" + std::to_string(r) +
                                                        ", b_row=" + std::to_string(b_row) + ")");
}

Poset bottleneck(const BottleneckShape& shape) {
    shape.validate();
    const unsigned s = shape.s, r = shape.r, lc = shape.collapsed_level();
    std::vector<int> labels;
    std::vector<std::size_t> level_start(s + 2);
    for (unsigned L = 1; L <= s; ++L) {
        level_start[L] = labels.size();
        const unsigned width = L == lc ? 1 : r;
        for (unsigned j = 1; j <= width; ++j) labels.push_back(static_cast<int>((L - 1) * r + j));
    }
    level_start[s + 1] = labels.size();
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (unsigned L = 1; L < s; ++L) {
        const auto lo = level_start[L], hi = level_start[L + 1];
        if (L == lc) {
            for (unsigned j = 0; j < r; ++j) covers.emplace_back(lo, hi + j);
        } else if (L + 1 == lc) {
            for (unsigned j = 0; j < r; ++j) covers.emplace_back(lo + j, hi);
        } else {
            for (unsigned j = 0; j < r; ++j) covers.emplace_back(lo + j, hi + j);
        }
    }
    const auto n = labels.size();
    return Poset::from_covers(n, std::move(covers), std::move(labels));
}

bool MatrixWord::is_zero() const noexcept {
    return std::all_of(entries.begin(), entries.end(), [](Elem e) { return e.is_zero(); });
}

bool MatrixWord::row_constant(unsigned i) const noexcept {
    for (unsigned j = 1; j < r; ++j)
        if (at(i, j) != at(i, 0)) return false;
    return true;
}

std::size_t p_weight(const Poset& P, std::span<const Elem> v) {
    if (v.size() != P.size())
        throw Error(ErrorKind::LengthMismatch,
                    "vector length " + std::to_string(v.size()) + " vs poset size " + std::to_string(P.size()));
    const std::size_t n = P.size();
    std::vector<bool> in_ideal(n, false);
    std::vector<std::size_t> frontier;
    for (std::size_t i = 0; i < n; ++i)
        if (!v[i].is_zero()) {
            in_ideal[i] = true;
            frontier.push_back(i);
        }
    while (!frontier.empty()) {
        const auto x = frontier.back();
        frontier.pop_back();
        for (std::size_t y = 0; y < n; ++y)
            if (!in_ideal[y] && P.leq(y, x)) {
                in_ideal[y] = true;
                frontier.push_back(y);
            }
    }
    return static_cast<std::size_t>(std::count(in_ideal.begin(), in_ideal.end(), true));
}

std::size_t nrt_weight_raw(const Elem* a, unsigned s, unsigned r) noexcept {
    std::size_t w = 0;
    for (unsigned j = 0; j < r; ++j)
        for (unsigned i = 0; i < s; ++i)
            if (!a[std::size_t(i) * r + j].is_zero()) {
                w += s - i;
                break;
            }
    return w;
}

std::size_t bottleneck_weight_raw(const Elem* a, unsigned s, unsigned r, unsigned b_row) noexcept {
    const std::size_t below = std::size_t(s - b_row) * r + 1;
    const std::size_t above = nrt_weight_raw(a, b_row - 1, r);
    if (above > 0) return above + below;
    for (unsigned j = 0; j < r; ++j)
        if (!a[std::size_t(b_row - 1) * r + j].is_zero()) return below;
    return nrt_weight_raw(a, s, r);
}

std::size_t nrt_weight(const MatrixWord& A) { return nrt_weight_raw(A.entries.data(), A.s, A.r); }

namespace {
void check_shape(const MatrixWord& A, const BottleneckShape& shape) {
    shape.validate();
    if (A.s != shape.s || A.r != shape.r || A.entries.size() != std::size_t(A.s) * A.r)
        throw Error(ErrorKind::LengthMismatch, "matrix is not " + std::to_string(shape.s) + "x" +
                                                   std::to_string(shape.r));
    if (!A.row_constant(shape.b_row - 1))
        throw Error(ErrorKind::NotConstantRow, "row " + std::to_string(shape.b_row) + " is not constant");
}
}  // namespace

std::size_t bottleneck_weight(const MatrixWord& A, const BottleneckShape& shape) {
    check_shape(A, shape);
    return bottleneck_weight_raw(A.entries.data(), A.s, A.r, shape.b_row);
}

std::size_t nrt_vertex(unsigned s, unsigned r, unsigned i, unsigned j) noexcept {
    return std::size_t(s - 1 - i) * r + j;
}

std::size_t bottleneck_vertex(const BottleneckShape& shape, unsigned i, unsigned j) noexcept {
    const unsigned L = shape.s - i, lc = shape.collapsed_level(), r = shape.r;
    if (L < lc) return std::size_t(L - 1) * r + j;
    if (L == lc) return std::size_t(lc - 1) * r;
    return std::size_t(L - 1) * r + j - (r - 1);
}

std::vector<Elem> flatten_nrt(const MatrixWord& A) {
    std::vector<Elem> v(std::size_t(A.s) * A.r);
    for (unsigned i = 0; i < A.s; ++i)
        for (unsigned j = 0; j < A.r; ++j) v[nrt_vertex(A.s, A.r, i, j)] = A.at(i, j);
    return v;
}

std::vector<Elem> flatten(const MatrixWord& A, const BottleneckShape& shape) {
    check_shape(A, shape);
    std::vector<Elem> v(shape.size());
    for (unsigned i = 0; i < A.s; ++i)
        for (unsigned j = 0; j < A.r; ++j) v[bottleneck_vertex(shape, i, j)] = A.at(i, j);
    return v;
}

MatrixWord unflatten(std::span<const Elem> v, const BottleneckShape& shape) {
    shape.validate();
    if (v.size() != shape.size()) throw Error(ErrorKind::LengthMismatch, "vector length does not match shape");
    MatrixWord A(shape.s, shape.r);
    for (unsigned i = 0; i < shape.s; ++i)
        for (unsigned j = 0; j < shape.r; ++j) A.at(i, j) = v[bottleneck_vertex(shape, i, j)];
    return A;
}

}  // namespace posetcode::poset
