#include <doctest.h>

#include <algorithm>

#include "posetcode/error.hpp"
#include "posetcode/poset.hpp"
#include "support.hpp"

using namespace posetcode;
using gf::Elem;
using poset::BottleneckShape;
using poset::MatrixWord;

namespace {

MatrixWord matrix(unsigned s, unsigned r, std::vector<std::uint32_t> v) {
    MatrixWord A(s, r);
    for (std::size_t i = 0; i < v.size(); ++i) A.entries[i] = Elem{v[i]};
    return A;
}

std::vector<std::pair<int, int>> labelled_covers(const poset::Poset& P) {
    std::vector<std::pair<int, int>> out;
    for (auto [a, b] : P.covers()) out.emplace_back(P.label(a), P.label(b));
    std::sort(out.begin(), out.end());
    return out;
}

// Every s x r matrix over GF(q) with the given predicate, in counting order.
template <class F>
void for_each_matrix(const gf::Field& Fq, unsigned s, unsigned r, F&& f) {
    MatrixWord A(s, r);
    const std::size_t n = A.entries.size();
    while (true) {
        f(A);
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++A.entries[i].v < Fq.q()) break;
            A.entries[i].v = 0;
        }
        if (i == n) return;
    }
}

}  // namespace

TEST_CASE("chain_union examples") {
    const auto P = poset::chain_union(2, 3);
    CHECK(P.size() == 6);
    CHECK(labelled_covers(P) == std::vector<std::pair<int, int>>{{1, 4}, {2, 5}, {3, 6}});
    const auto A = poset::chain_union(1, 4);
    CHECK(A.covers().empty());
    CHECK(A.maximal().size() == 4);
    const auto C = poset::chain_union(3, 3);
    CHECK(C.size() == 9);
    CHECK(C.covers().size() == 6);
}

TEST_CASE("bottleneck examples") {
    const auto U = poset::bottleneck({3, 3, 2});
    CHECK(U.size() == 7);
    CHECK(U.labels() == std::vector<int>{1, 2, 3, 4, 7, 8, 9});
    CHECK(labelled_covers(U) == std::vector<std::pair<int, int>>{{1, 4}, {2, 4}, {3, 4}, {4, 7}, {4, 8}, {4, 9}});
    const auto V = poset::bottleneck({2, 3, 1});
    CHECK(V.size() == 4);
    CHECK(labelled_covers(V) == std::vector<std::pair<int, int>>{{1, 4}, {2, 4}, {3, 4}});
    CHECK(poset::bottleneck({1, 3, 1}).size() == 1);
    try {
        poset::bottleneck({3, 3, 4});
        FAIL("expected ParameterOutOfRange");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParameterOutOfRange);
    }
}

TEST_CASE("maximal elements of bottleneck posets share rank s-1") {
    for (unsigned s = 1; s <= 5; ++s)
        for (unsigned r = 2; r <= 4; ++r)
            for (unsigned b = 1; b <= s; ++b) {
                const auto U = poset::bottleneck({s, r, b});
                CHECK(U.size() == std::size_t(s) * r - r + 1);
                for (auto v : U.maximal()) CHECK(U.rank(v) == int(s) - 1);
            }
}

TEST_CASE("from_covers rejects cycles and unranked posets") {
    CHECK_THROWS_AS(poset::Poset::from_covers(2, {{0, 1}, {1, 0}}), Error);
    // 0 < 1 < 2 and 0 < 2 as a cover: no rank function.
    CHECK_THROWS_AS(poset::Poset::from_covers(3, {{0, 1}, {1, 2}, {0, 2}}), Error);
    const auto P = poset::Poset::from_covers(3, {{0, 1}, {1, 2}});
    CHECK(P.leq(0, 2));
    CHECK_FALSE(P.leq(2, 0));
}

TEST_CASE("p_weight examples") {
    const auto C = poset::chain_union(2, 3);
    CHECK(poset::p_weight(C, std::vector<Elem>(6)) == 0);
    std::vector<Elem> e4(6);
    e4[3] = Elem{1};
    CHECK(poset::p_weight(C, e4) == 2);
    const auto U = poset::bottleneck({2, 3, 1});
    std::vector<Elem> top(4);
    top[3] = Elem{2};
    CHECK(poset::p_weight(U, top) == 4);
    try {
        poset::p_weight(U, e4);
        FAIL("expected LengthMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LengthMismatch);
    }
}

TEST_CASE("worked weight pair") {
    const auto A = matrix(3, 3, {1, 0, 1, 1, 1, 1, 0, 0, 1});
    CHECK(poset::nrt_weight(A) == 8);
    const BottleneckShape sh{3, 3, 2};
    CHECK(poset::bottleneck_weight(A, sh) == 6);
    const auto v = poset::flatten(A, sh);
    CHECK(v.size() == 7);
    CHECK(poset::p_weight(poset::bottleneck(sh), v) == 6);
}

TEST_CASE("nrt and bottleneck weight examples") {
    CHECK(poset::nrt_weight(MatrixWord(3, 3)) == 0);
    // Column written bottom-up as (0,1,1,0,1,0,0,0): highest nonzero level 5.
    const std::vector<std::uint32_t> bottom_up{0, 1, 1, 0, 1, 0, 0, 0};
    MatrixWord col(8, 1);
    for (unsigned L = 1; L <= 8; ++L) col.at(8 - L, 0) = Elem{bottom_up[L - 1]};
    CHECK(poset::nrt_weight(col) == 5);

    const BottleneckShape sh{2, 3, 1};
    CHECK(poset::bottleneck_weight(matrix(2, 3, {0, 0, 0, 2, 1, 1}), sh) == 3);
    const auto B = matrix(2, 3, {3, 3, 3, 4, 2, 2});
    CHECK(poset::bottleneck_weight(B, sh) == 4);
    CHECK(poset::flatten(B, sh) == std::vector<Elem>{Elem{4}, Elem{2}, Elem{2}, Elem{3}});
    CHECK(poset::flatten(MatrixWord(2, 3), sh) == std::vector<Elem>(4));
    try {
        poset::bottleneck_weight(matrix(2, 3, {1, 2, 1, 0, 0, 0}), sh);
        FAIL("expected NotConstantRow");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotConstantRow);
    }
    CHECK_THROWS_AS(poset::flatten(matrix(2, 3, {1, 2, 1, 0, 0, 0}), sh), Error);
}

TEST_CASE("weight oracles agree exhaustively over GF(2) and GF(3)") {
    for (std::uint32_t p : {2u, 3u}) {
        const auto F = gf::Field::make(p, 1);
        for (unsigned s = 1; s <= 3; ++s)
            for (unsigned r = 1; r <= 3; ++r) {
                const auto C = poset::chain_union(s, r);
                std::vector<std::pair<BottleneckShape, poset::Poset>> shapes;
                if (r >= 2)
                    for (unsigned b = 1; b <= s; ++b) shapes.emplace_back(BottleneckShape{s, r, b}, poset::bottleneck({s, r, b}));
                for_each_matrix(*F, s, r, [&](const MatrixWord& A) {
                    REQUIRE(poset::nrt_weight(A) == poset::p_weight(C, poset::flatten_nrt(A)));
                    for (const auto& [sh, U] : shapes) {
                        if (!A.row_constant(sh.b_row - 1)) continue;
                        const auto v = poset::flatten(A, sh);
                        REQUIRE(poset::bottleneck_weight(A, sh) == poset::p_weight(U, v));
                        REQUIRE(poset::unflatten(v, sh) == A);
                    }
                });
            }
    }
}

TEST_CASE("weight oracles agree on random matrices over GF(5) and GF(7)") {
    for (std::uint32_t p : {5u, 7u}) {
        const auto F = gf::Field::make(p, 1);
        for (unsigned s = 1; s <= 3; ++s)
            for (unsigned r = 2; r <= 3; ++r) {
                const auto C = poset::chain_union(s, r);
                for (unsigned b = 1; b <= s; ++b) {
                    const BottleneckShape sh{s, r, b};
                    const auto U = poset::bottleneck(sh);
                    for (int n = 0; n < 1000; ++n) {
                        auto A = test::random_matrix(*F, s, r);
                        // Sparse rows exercise the zero-prefix cases of the formula.
                        for (unsigned i = 0; i < s; ++i)
                            if (test::uniform(0, 2) == 0)
                                for (unsigned j = 0; j < r; ++j) A.at(i, j) = Elem{};
                        REQUIRE(poset::nrt_weight(A) == poset::p_weight(C, poset::flatten_nrt(A)));
                        test::make_row_constant(*F, A, b);
                        REQUIRE(poset::bottleneck_weight(A, sh) == poset::p_weight(U, poset::flatten(A, sh)));
                        REQUIRE(poset::bottleneck_weight_raw(A.entries.data(), s, r, b) ==
                                poset::bottleneck_weight(A, sh));
                        REQUIRE(poset::nrt_weight_raw(A.entries.data(), s, r) == poset::nrt_weight(A));
                    }
                }
            }
    }
}

TEST_CASE("poset metric axioms") {
    const auto F = gf::Field::make(3, 1);
    std::vector<poset::Poset> posets{poset::chain_union(3, 3), poset::chain_union(2, 4), poset::bottleneck({3, 3, 2}),
                                     poset::bottleneck({4, 2, 1}), poset::bottleneck({3, 4, 3})};
    for (const auto& P : posets) {
        auto rnd = [&] {
            std::vector<Elem> v(P.size());
            for (auto& e : v) e = test::uniform(0, 1) ? test::random_elem(*F) : Elem{};
            return v;
        };
        auto dist = [&](const std::vector<Elem>& u, const std::vector<Elem>& w) {
            std::vector<Elem> d(u.size());
            for (std::size_t i = 0; i < u.size(); ++i) d[i] = F->sub(u[i], w[i]);
            return poset::p_weight(P, d);
        };
        for (int n = 0; n < 1000; ++n) {
            const auto u = rnd(), v = rnd(), w = rnd();
            REQUIRE(dist(u, w) == dist(w, u));
            REQUIRE((dist(u, w) == 0) == (u == w));
            REQUIRE(dist(u, w) <= dist(u, v) + dist(v, w));
        }
    }
}

TEST_CASE("exports") {
    const auto U = poset::bottleneck({2, 3, 1});
    const auto dot = U.to_dot("U(2,3,1)");
    CHECK(dot.find("1 -> 4") != std::string::npos);
    const auto js = U.to_json();
    CHECK(js.find("\"labels\"") != std::string::npos);
}
