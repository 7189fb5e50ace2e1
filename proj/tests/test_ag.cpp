#include <doctest.h>

#include <set>

#include "posetcode/ag.hpp"
#include "posetcode/codes.hpp"
#include "posetcode/error.hpp"
#include "posetcode/linalg.hpp"
#include "support.hpp"

using namespace posetcode;
using ag::Divisor;
using ag::Place;
using ag::RationalFunction;
using gf::Elem;
using poly::Polynomial;

namespace {

Place fin(std::uint32_t a) { return Place::finite(Elem{a}); }

std::vector<Place> finite_places(std::initializer_list<std::uint32_t> v) {
    std::vector<Place> out;
    for (auto a : v) out.push_back(fin(a));
    return out;
}

std::set<std::vector<Elem>> codeword_set(const codes::Code& c) {
    std::set<std::vector<Elem>> out;
    const auto total = codes::checked_size(c.field->q(), c.dim(), 1u << 20);
    for (std::uint64_t i = 0; i < total; ++i)
        out.insert(codes::encode(c, codes::message_from_index(i, c.field->q(), c.dim())).entries);
    return out;
}

RationalFunction rf(const Polynomial& num, const Polynomial& den) { return RationalFunction(num, den); }

}  // namespace

TEST_CASE("rr_basis examples") {
    const auto F = gf::Field::make(5, 1);
    const Divisor G3{{Place::infinity(), 3}};
    const auto b = ag::rr_basis(F, G3);
    REQUIRE(b.size() == 4);
    std::set<int> degrees;
    for (const auto& f : b) {
        CHECK(f.den() == Polynomial::constant(F, F->one()));
        degrees.insert(f.num().degree());
    }
    CHECK(degrees == std::set<int>{0, 1, 2, 3});

    CHECK(ag::rr_basis(F, Divisor{{Place::infinity(), -1}}).empty());

    const Divisor G{{fin(0), 2}, {Place::infinity(), 1}, {fin(1), -1}};
    const auto c = ag::rr_basis(F, G);
    CHECK(c.size() == 3);
    for (const auto& f : c) {
        CHECK(ag::in_riemann_roch(f, G));
        CHECK(ag::valuation(f, fin(1)) >= 1);
        CHECK(poly::eval(f.num(), Elem{1}) == Elem{0});
    }
    // Basis elements are independent: their numerators over the common denominator x^2.
    linalg::Matrix m;
    for (const auto& f : c) {
        const auto scaled = f * RationalFunction::from_poly(poly::pow(Polynomial::linear(F, Elem{0}), 2));
        REQUIRE(scaled.den().degree() == 0);
        std::vector<Elem> row(4);
        for (std::size_t i = 0; i < 4; ++i) row[i] = scaled.num().coeff(i);
        m.push_back(row);
    }
    CHECK(linalg::rank(*F, m, 4) == 3);
}

TEST_CASE("Riemann-Roch dimension on random genus-0 divisors") {
    for (const auto& F : {gf::Field::make(5, 1), gf::Field::make(2, 3), gf::Field::make(7, 1)}) {
        for (int n = 0; n < 60; ++n) {
            Divisor G;
            for (std::uint32_t a = 0; a < 3; ++a) {
                const int c = int(test::uniform(0, 6)) - 3;
                if (c) G[fin(a)] = c;
            }
            const int ci = int(test::uniform(0, 6)) - 2;
            if (ci) G[Place::infinity()] = ci;
            const auto b = ag::rr_basis(F, G);
            const int deg = ag::degree(G);
            REQUIRE(b.size() == std::size_t(std::max(deg + 1, 0)));
            for (const auto& f : b) {
                REQUIRE(ag::in_riemann_roch(f, G));
                // Valuation bound checked through the expansion itself.
                for (const auto& [P, nP] : G) REQUIRE_NOTHROW(ag::local_expansion(f, P, -nP, 2));
            }
        }
    }
}

TEST_CASE("local_expansion examples") {
    const auto F = gf::Field::make(5, 1);
    for (int n = 0; n < 300; ++n) {
        const auto f = test::random_poly(F, 6);
        const auto a = test::random_elem(*F);
        const auto s = static_cast<std::size_t>(test::uniform(1, 5));
        REQUIRE(ag::local_expansion(RationalFunction::from_poly(f), fin(a.v), 0, s).coeffs ==
                poly::taylor_coeffs(f, a, s));
    }
    const auto one = Polynomial::constant(F, F->one());
    const auto inv = rf(one, Polynomial::linear(F, Elem{2}));
    CHECK(ag::local_expansion(inv, fin(2), -1, 3).coeffs == std::vector<Elem>{Elem{1}, Elem{0}, Elem{0}});
    const auto x3 = RationalFunction::from_poly(Polynomial::monomial(F, F->one(), 3));
    CHECK(ag::local_expansion(x3, Place::infinity(), -3, 2).coeffs == std::vector<Elem>{Elem{1}, Elem{0}});
    try {
        ag::local_expansion(inv, fin(2), 0, 2);
        FAIL("expected PoleDeeperThanStart");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PoleDeeperThanStart);
    }
    CHECK(ag::local_expansion(RationalFunction(F), fin(1), -2, 3).coeffs == std::vector<Elem>(3));
}

TEST_CASE("cf_matrix examples") {
    const auto F = gf::Field::make(5, 1);
    const auto places = finite_places({1, 3, 4});
    const ag::AGCodeSpec spec{F, places, Divisor{{Place::infinity(), 3}}, 2, true};
    std::vector<Elem> alphas{Elem{1}, Elem{3}, Elem{4}};
    for (const auto& f : ag::rr_basis(F, spec.G))
        CHECK(ag::cf_matrix(f, spec) == codes::evaluation_matrix(f.num(), alphas, 2));
    CHECK(ag::cf_matrix(RationalFunction(F), spec).is_zero());
    const auto x4 = RationalFunction::from_poly(Polynomial::monomial(F, F->one(), 4));
    try {
        ag::cf_matrix(x4, spec);
        FAIL("expected NotInRiemannRochSpace");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInRiemannRochSpace);
    }

    // 1/(x-1) + 1/(x-3) has residue 1 at both poles.
    const ag::AGCodeSpec poles{F, finite_places({1, 3}), Divisor{{fin(1), 1}, {fin(3), 1}}, 3, true};
    const auto one = Polynomial::constant(F, F->one());
    const auto f = rf(one, Polynomial::linear(F, Elem{1})) + rf(one, Polynomial::linear(F, Elem{3}));
    const auto A = ag::cf_matrix(f, poles);
    CHECK(A.at(0, 0) == Elem{1});
    CHECK(A.at(0, 1) == Elem{1});
    CHECK(poset::bottleneck_weight(A, {3, 2, 1}) == 3 * 2 - 2 + 1);
}

TEST_CASE("l0_basis examples") {
    const auto F = gf::Field::make(5, 1);
    const ag::AGCodeSpec spec{F, finite_places({1, 3, 4}), Divisor{{Place::infinity(), 3}}, 2, true};
    const auto b = ag::l0_basis(spec);
    REQUIRE(b.size() == 2);
    const auto rs = codes::constrained_basis(F, {Elem{1}, Elem{3}, Elem{4}}, 4, 0);
    auto rank_of = [&](const std::vector<Polynomial>& ps) {
        linalg::Matrix m;
        for (const auto& p : ps) {
            std::vector<Elem> row(4);
            for (std::size_t i = 0; i < 4; ++i) row[i] = p.coeff(i);
            m.push_back(row);
        }
        return linalg::rank(*F, m, 4);
    };
    std::vector<Polynomial> both = rs;
    for (const auto& f : b) both.push_back(f.num());
    CHECK(rank_of(both) == 2);

    const ag::AGCodeSpec minimal{F, finite_places({1, 3, 4}), Divisor{{Place::infinity(), 2}}, 2, true};
    const auto m = ag::l0_basis(minimal);
    CHECK(m.size() >= 1);
    bool has_constant = false;
    for (const auto& f : m) has_constant |= f.num().degree() == 0 && f.den().degree() == 0;
    CHECK(has_constant);
}

TEST_CASE("build_ag_code examples") {
    const auto F5 = gf::Field::make(5, 1);
    const ag::AGCodeSpec spec{F5, finite_places({1, 3, 4}), Divisor{{Place::infinity(), 3}}, 2, true};
    const auto ag_code = ag::build_ag_code(spec);
    const auto rs = codes::build_code({F5, {Elem{1}, Elem{3}, Elem{4}}, 2, 4, 1u});
    CHECK(codeword_set(ag_code.code) == codeword_set(rs.code));

    const auto F7 = gf::Field::make(7, 1);
    const ag::AGCodeSpec g4{F7, finite_places({1, 2, 3}),
                            Divisor{{fin(1), 2}, {fin(2), 2}, {fin(3), 2}, {Place::infinity(), -2}}, 3, true};
    const auto rep = ag::verify_bounds(ag::build_ag_code(g4), 1u << 20);
    CHECK(rep.deg_g == 4);
    CHECK(rep.distance_bound == 5);
    CHECK(rep.dim_bound == 3);
    CHECK(rep.d >= 5);
    CHECK(rep.k >= 3);
    CHECK(rep.mds);
    CHECK(rep.all_ok());

    // deg G = rs - r + 1 boundary.
    const ag::AGCodeSpec top{F7, finite_places({1, 2, 3}), Divisor{{Place::infinity(), 7}}, 3, true};
    const auto rt = ag::verify_bounds(ag::build_ag_code(top), 1u << 20);
    CHECK(rt.d >= 2);
    CHECK(rt.k + rt.d == 3 * 3 - 3 + 2);

    const ag::AGCodeSpec bad{F7, finite_places({1, 2, 3}), Divisor{{Place::infinity(), 8}}, 3, true};
    CHECK_THROWS_AS(ag::build_ag_code(bad), Error);
}

TEST_CASE("unconstrained codes meet the NRT bounds") {
    const auto F = gf::Field::make(7, 1);
    const ag::AGCodeSpec spec{F, finite_places({0, 1}), Divisor{{fin(0), 1}, {Place::infinity(), 2}}, 3, false};
    const auto code = ag::build_ag_code(spec);
    CHECK(code.code.metric.describe() == "C(3,2)");
    const auto rep = ag::verify_bounds(code, 1u << 20);
    CHECK(rep.k == 4);
    CHECK(rep.d >= 6 - 3);
    CHECK(rep.all_ok());
}

TEST_CASE("clipped column weights") {
    const auto F = gf::Field::make(5, 1);
    const ag::AGCodeSpec spec{F, finite_places({1, 3}), Divisor{{fin(1), 1}, {Place::infinity(), 2}}, 2, true};
    // (x-3)^3 / (x-1): pole of order 1 at 1, zero of order 3 at 3.
    const auto f = rf(poly::pow(Polynomial::linear(F, Elem{3}), 3), Polynomial::linear(F, Elem{1}));
    CHECK(ag::clipped_column_weights(f, spec) == std::vector<unsigned>{0, 2});
}

TEST_CASE("mds_inequality examples") {
    ag::MdsInequalityParams bad{1, 2, 3, 0, 100, 1};
    const auto r0 = ag::mds_inequality(bad);
    CHECK_FALSE(r0.violations.empty());
    CHECK_FALSE(r0.verdict);
    CHECK(r0.elliptic_conflict);

    ag::MdsInequalityParams ok{2, 2, 3, 1, 1000, 5};
    const auto r1 = ag::mds_inequality(ok);
    CHECK(r1.violations.empty());
    CHECK(r1.lhs == 20);
    CHECK(r1.rhs == 1000);
    CHECK(r1.verdict);
    CHECK(r1.stated_distance_bound == 4);
    CHECK(r1.stated_dim_bound == 2);
    CHECK(r1.proof_degree == 2 * 3 - 2 - 3 + 2 - 1);

    ag::MdsInequalityParams k3{2, 2, 3, 3, 1000, 1};
    const auto r2 = ag::mds_inequality(k3);
    CHECK(r2.lhs == 6);
    CHECK(r2.mds_case);

    ag::MdsInequalityParams big{3, 4, 6, 2, ag::BigInt("100000000000000000000000000000"), ag::BigInt("99999999999999")};
    const auto r3 = ag::mds_inequality(big);
    CHECK(r3.lhs == ag::BigInt(84) * ag::BigInt("99999999999999"));
}

TEST_CASE("divisor text") {
    const auto F = gf::Field::make(5, 1);
    const auto places = ag::parse_places(*F, "1,3,4,inf");
    CHECK(places.size() == 4);
    CHECK(places[3] == Place::infinity());
    const auto G = ag::parse_divisor(*F, "P1:0,P2:1,Pinf:3,A0:-1", places);
    CHECK(ag::degree(G) == 3);
    CHECK(ag::divisor_to_text(G) == "A0:-1,A3:1,Pinf:3");
    CHECK(ag::parse_divisor(*F, ag::divisor_to_text(G), places) == G);
    CHECK_THROWS_AS(ag::parse_divisor(*F, "P1:1,P1:2", places), Error);
    CHECK_THROWS_AS(ag::parse_divisor(*F, "P9:1", places), Error);
    CHECK_THROWS_AS(ag::parse_divisor(*F, "Q1:1", places), Error);
}
