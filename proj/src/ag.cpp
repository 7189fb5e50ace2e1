#include "posetcode/ag.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "posetcode/error.hpp"
#include "posetcode/linalg.hpp"

namespace posetcode::ag {

std::string Place::describe() const { return infinite ? "inf" : std::to_string(alpha.v); }

int degree(const Divisor& G) {
    int d = 0;
    for (const auto& [P, n] : G) d += n;
    return d;
}

int coefficient(const Divisor& G, const Place& P) {
    const auto it = G.find(P);
    return it == G.end() ? 0 : it->second;
}

RationalFunction::RationalFunction(const FieldPtr& field)
    : num_(field), den_(Polynomial::constant(field, Elem{1})) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial::constant(num_.field(), Elem{1});
        return;
    }
    const auto g = poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = poly::divmod(num_, g).first;
        den_ = poly::divmod(den_, g).first;
    }
    const auto& F = *num_.field();
    const Elem lead_inv = F.inv(den_.leading());
    num_ = num_.scaled(lead_inv);
    den_ = den_.scaled(lead_inv);
}

RationalFunction RationalFunction::from_poly(Polynomial f) {
    auto field = f.field();
    return {std::move(f), Polynomial::constant(field, Elem{1})};
}

RationalFunction RationalFunction::scaled(Elem c) const { return {num_.scaled(c), den_}; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

int valuation(const RationalFunction& f, const Place& P) {
    if (f.is_zero()) return poly::kInfiniteOrder;
    if (P.infinite) return f.den().degree() - f.num().degree();
    return poly::vanishing_order(f.num(), P.alpha) - poly::vanishing_order(f.den(), P.alpha);
}

namespace {

// Product of (x - a)^n over finite places with positive coefficient.
Polynomial pole_polynomial(const FieldPtr& field, const Divisor& G) {
    Polynomial D = Polynomial::constant(field, Elem{1});
    for (const auto& [P, n] : G)
        if (!P.infinite && n > 0) D = D * poly::pow(Polynomial::linear(field, P.alpha), static_cast<unsigned>(n));
    return D;
}

std::size_t first_nonzero(const std::vector<Elem>& v) {
    std::size_t i = 0;
    while (i < v.size() && v[i].is_zero()) ++i;
    return i;
}

}  // namespace

bool in_riemann_roch(const RationalFunction& f, const Divisor& G) {
    if (f.is_zero()) return true;
    // Poles may only sit at finite places with positive coefficient.
    if (!poly::divmod(pole_polynomial(f.field(), G), f.den()).second.is_zero()) return false;
    for (const auto& [P, n] : G)
        if (valuation(f, P) < -n) return false;
    if (!G.count(Place::infinity()) && valuation(f, Place::infinity()) < 0) return false;
    return true;
}

std::vector<RationalFunction> rr_basis(const FieldPtr& field, const Divisor& G) {
    const auto& F = *field;
    const Polynomial D = pole_polynomial(field, G);
    const int top = D.degree() + coefficient(G, Place::infinity());
    if (top < 0) return {};
    const auto unknowns = static_cast<std::size_t>(top) + 1;
    linalg::Matrix conditions;
    for (const auto& [P, n] : G) {
        if (P.infinite || n >= 0) continue;
        for (int j = 0; j < -n; ++j) {
            std::vector<Elem> row(unknowns);
            for (std::size_t i = static_cast<std::size_t>(j); i < unknowns; ++i)
                row[i] = F.mul(F.binom(i, static_cast<std::uint64_t>(j)), F.pow(P.alpha, i - j));
            conditions.push_back(std::move(row));
        }
    }
    std::vector<RationalFunction> basis;
    for (auto& v : linalg::nullspace(F, conditions, unknowns)) basis.emplace_back(Polynomial(field, std::move(v)), D);
    return basis;
}

LaurentSlice local_expansion(const RationalFunction& f, const Place& P, int start, std::size_t count) {
    const auto& F = *f.field();
    LaurentSlice out{P, start, std::vector<Elem>(count)};
    if (f.is_zero()) return out;
    std::vector<Elem> ns, ds;
    if (P.infinite) {
        ns.assign(f.num().coeffs().rbegin(), f.num().coeffs().rend());
        ds.assign(f.den().coeffs().rbegin(), f.den().coeffs().rend());
    } else {
        ns = poly::taylor_coeffs(f.num(), P.alpha, f.num().coeffs().size());
        ds = poly::taylor_coeffs(f.den(), P.alpha, f.den().coeffs().size());
    }
    const std::size_t vn = first_nonzero(ns), vd = first_nonzero(ds);
    const int nu = static_cast<int>(vn) - static_cast<int>(vd) +
                   (P.infinite ? f.den().degree() - f.num().degree() : 0);
    if (nu < start)
        throw Error(ErrorKind::PoleDeeperThanStart, "valuation " + std::to_string(nu) + " at " + P.describe() +
                                                        " is below start " + std::to_string(start));
    ns.erase(ns.begin(), ns.begin() + static_cast<std::ptrdiff_t>(vn));
    ds.erase(ds.begin(), ds.begin() + static_cast<std::ptrdiff_t>(vd));
    const long long last = static_cast<long long>(start) + static_cast<long long>(count) - 1 - nu;
    if (last < 0) return out;
    // Power series ns/ds up to degree `last`.
    const Elem d0_inv = F.inv(ds[0]);
    std::vector<Elem> series(static_cast<std::size_t>(last) + 1);
    for (std::size_t k = 0; k < series.size(); ++k) {
        Elem acc = k < ns.size() ? ns[k] : Elem{};
        for (std::size_t i = 1; i <= k && i < ds.size(); ++i) acc = F.sub(acc, F.mul(ds[i], series[k - i]));
        series[k] = F.mul(acc, d0_inv);
    }
    for (std::size_t e = 0; e < count; ++e) {
        const long long exponent = static_cast<long long>(start) + static_cast<long long>(e);
        if (exponent >= nu) out.coeffs[e] = series[static_cast<std::size_t>(exponent - nu)];
    }
    return out;
}

void AGCodeSpec::validate() const {
    if (!field) throw Error(ErrorKind::ParameterOutOfRange, "missing field");
    if (r() < 2) throw Error(ErrorKind::ParameterOutOfRange, "need at least two places");
    if (std::set<Place>(places.begin(), places.end()).size() != places.size())
        throw Error(ErrorKind::DuplicatePoints, "places must be distinct");
    for (const auto& P : places)
        if (!P.infinite && P.alpha.v >= field->q()) throw Error(ErrorKind::ParameterOutOfRange, "place outside field");
    for (const auto& [P, n] : G)
        if (!P.infinite && P.alpha.v >= field->q())
            throw Error(ErrorKind::ParameterOutOfRange, "divisor place outside field");
    if (s < 2) throw Error(ErrorKind::ParameterOutOfRange, "s must be >= 2");
    const long long deg = degree(G), rs = static_cast<long long>(r()) * s;
    const std::string where = " (deg G=" + std::to_string(deg) + ", r=" + std::to_string(r()) +
                              ", s=" + std::to_string(s) + ")";
    if (constrained && (deg < static_cast<long long>(r()) - 1 || deg > rs - r() + 1))
        throw Error(ErrorKind::ParameterOutOfRange, "need r-1 <= deg G <= rs-r+1" + where);
    if (!constrained && (deg < 0 || deg > rs - 1))
        throw Error(ErrorKind::ParameterOutOfRange, "need 0 <= deg G <= rs-1" + where);
}

poset::MatrixWord cf_matrix(const RationalFunction& f, const AGCodeSpec& spec) {
    if (!in_riemann_roch(f, spec.G))
        throw Error(ErrorKind::NotInRiemannRochSpace, to_string(f) + " is not in L(" + divisor_to_text(spec.G) + ")");
    poset::MatrixWord A(spec.s, spec.r());
    for (unsigned j = 0; j < spec.r(); ++j) {
        const auto slice = local_expansion(f, spec.places[j], -spec.n(j), spec.s);
        for (unsigned i = 0; i < spec.s; ++i) A.at(i, j) = slice.coeffs[i];
    }
    return A;
}

std::vector<RationalFunction> l0_basis(const AGCodeSpec& spec) {
    const auto& F = *spec.field;
    const auto full = rr_basis(spec.field, spec.G);
    if (full.empty()) return {};
    std::vector<std::vector<Elem>> lowest(full.size());
    for (std::size_t k = 0; k < full.size(); ++k)
        for (unsigned i = 0; i < spec.r(); ++i)
            lowest[k].push_back(local_expansion(full[k], spec.places[i], -spec.n(i), 1).coeffs[0]);
    linalg::Matrix conditions;
    for (unsigned i = 1; i < spec.r(); ++i) {
        std::vector<Elem> row(full.size());
        for (std::size_t k = 0; k < full.size(); ++k) row[k] = F.sub(lowest[k][0], lowest[k][i]);
        conditions.push_back(std::move(row));
    }
    std::vector<RationalFunction> basis;
    for (const auto& lambda : linalg::nullspace(F, conditions, full.size())) {
        RationalFunction f(spec.field);
        for (std::size_t k = 0; k < full.size(); ++k)
            if (!lambda[k].is_zero()) f = f + full[k].scaled(lambda[k]);
        basis.push_back(std::move(f));
    }
    return basis;
}

AGCode build_ag_code(const AGCodeSpec& spec) {
    spec.validate();
    AGCode out{spec, spec.constrained ? l0_basis(spec) : rr_basis(spec.field, spec.G), {}};
    out.code.field = spec.field;
    out.code.metric = codes::Metric{spec.s, spec.r(), spec.constrained ? std::optional<unsigned>(1) : std::nullopt};
    for (const auto& f : out.basis) out.code.generator.push_back(cf_matrix(f, spec));
    return out;
}

std::vector<unsigned> clipped_column_weights(const RationalFunction& f, const AGCodeSpec& spec) {
    std::vector<unsigned> w;
    for (unsigned i = 0; i < spec.r(); ++i) {
        const int nu = valuation(f, spec.places[i]);
        if (nu == poly::kInfiniteOrder) {
            w.push_back(spec.s);
            continue;
        }
        const long long shifted = static_cast<long long>(nu) + spec.n(i);
        w.push_back(static_cast<unsigned>(std::clamp<long long>(shifted, 0, spec.s)));
    }
    return w;
}

BoundReport verify_bounds(const AGCode& code, std::uint64_t budget, int workers) {
    BoundReport rep;
    rep.constrained = code.spec.constrained;
    rep.deg_g = degree(code.spec.G);
    rep.n = code.code.length();
    rep.k = code.code.dim();
    rep.d = code.code.dim() ? codes::min_distance(code.code, budget, workers) : 0;
    const long long rs = static_cast<long long>(code.spec.r()) * code.spec.s;
    rep.dim_bound = code.spec.constrained ? rep.deg_g - static_cast<long long>(code.spec.r()) + 2 : rep.deg_g + 1;
    rep.distance_bound = rs - rep.deg_g;
    rep.dim_ok = static_cast<long long>(rep.k) >= rep.dim_bound;
    rep.distance_ok = rep.k > 0 && static_cast<long long>(rep.d) >= rep.distance_bound;
    rep.mds = rep.k > 0 && rep.k + rep.d == rep.n + 1;
    return rep;
}

namespace {
BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt out = 1;
    for (long long i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}
}  // namespace

MdsInequalityReport mds_inequality(const MdsInequalityParams& p) {
    MdsInequalityReport rep;
    auto need = [&](bool ok, const std::string& what) {
        if (!ok) rep.violations.push_back(what);
    };
    need(p.g >= 1, "g >= 1");
    need(p.r >= 1 && p.s >= 1 && p.k >= 1, "r, s, k positive");
    need(2 * p.r + p.s - p.g <= p.r * p.s, "2r + s - g <= rs");
    need(0 <= p.k - 1, "0 <= k - 1");
    need(p.k - 1 <= p.g, "k - 1 <= g");
    need(p.g <= p.r, "g <= r");
    need(p.g - 1 <= p.s, "g - 1 <= s");
    need(p.h >= 1, "h >= 1");
    need(p.a_k >= 0, "A_k >= 0");

    rep.lhs = binomial(p.r + p.s + p.k - p.g, p.r - 1) * p.a_k;
    rep.rhs = p.h;
    rep.verdict = rep.violations.empty() && rep.lhs < rep.rhs;
    rep.length = p.r * p.s - p.r + 1;
    rep.stated_distance_bound = p.s - p.g + 2 + p.k;
    rep.stated_dim_bound = p.r * p.s - p.r + 1 - p.s;
    rep.proof_degree = p.r * p.s - p.r - p.s + p.g - 1;
    rep.proof_dim_bound = rep.proof_degree - p.g - p.r + 2;
    rep.mds_case = p.g == p.k - 1;
    rep.elliptic_conflict = p.g == 1;

    const long long singleton = rep.length + 1;
    const long long stated_sum = rep.stated_distance_bound + rep.stated_dim_bound;
    const long long proof_sum = rep.stated_distance_bound + rep.proof_dim_bound;
    if (rep.stated_dim_bound != rep.proof_dim_bound)
        rep.notes.push_back("stated dim bound " + std::to_string(rep.stated_dim_bound) +
                            " differs from deg G - g - r + 2 = " + std::to_string(rep.proof_dim_bound) +
                            " for deg G = " + std::to_string(rep.proof_degree));
    if (stated_sum > singleton)
        rep.notes.push_back("stated bounds give d + dim >= " + std::to_string(stated_sum) +
                            ", above the Singleton maximum n + 1 = " + std::to_string(singleton));
    if (rep.mds_case)
        rep.notes.push_back("g = k - 1: d + dim >= " + std::to_string(stated_sum) + " (stated) / " +
                            std::to_string(proof_sum) + " (degree-derived) against n + 1 = " +
                            std::to_string(singleton));
    if (rep.elliptic_conflict)
        rep.notes.push_back("g = 1 with 0 <= k - 1 <= g allows only k = 1 or k = 2; the elliptic k = 0 case is "
                            "outside these hypotheses");
    return rep;
}

namespace {
std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

long long parse_int(const std::string& text, const std::string& context) {
    const auto t = strip(text);
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(t, &used);
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "expected an integer in " + context + ", got '" + text + "'");
    }
    if (used != t.size()) throw Error(ErrorKind::ParseError, "expected an integer in " + context + ", got '" + text + "'");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!strip(item).empty()) out.push_back(strip(item));
    return out;
}

Elem parse_code(const gf::Field& F, const std::string& text, const std::string& context) {
    const long long v = parse_int(text, context);
    if (v < 0) throw Error(ErrorKind::ParameterOutOfRange, "negative element code in " + context);
    return F.element(static_cast<std::uint64_t>(v));
}
}  // namespace

std::vector<Place> parse_places(const gf::Field& F, const std::string& text) {
    std::vector<Place> out;
    for (const auto& item : split(text, ',')) {
        if (item == "inf" || item == "Inf" || item == "INF")
            out.push_back(Place::infinity());
        else
            out.push_back(Place::finite(parse_code(F, item, "places")));
    }
    if (std::set<Place>(out.begin(), out.end()).size() != out.size())
        throw Error(ErrorKind::DuplicatePoints, "places must be distinct");
    return out;
}

Divisor parse_divisor(const gf::Field& F, const std::string& text, const std::vector<Place>& places) {
    Divisor G;
    std::set<Place> seen;
    for (const auto& term : split(text, ',')) {
        const auto colon = term.find(':');
        if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "divisor term '" + term + "' lacks ':'");
        const auto name = strip(term.substr(0, colon));
        const long long n = parse_int(term.substr(colon + 1), "divisor");
        Place P;
        if (name == "Pinf") {
            P = Place::infinity();
        } else if (name.size() > 1 && name[0] == 'P') {
            const long long i = parse_int(name.substr(1), "divisor place index");
            if (i < 1 || i > static_cast<long long>(places.size()))
                throw Error(ErrorKind::ParameterOutOfRange, "divisor refers to " + name + " but there are " +
                                                                std::to_string(places.size()) + " places");
            P = places[static_cast<std::size_t>(i - 1)];
        } else if (name.size() > 1 && name[0] == 'A') {
            P = Place::finite(parse_code(F, name.substr(1), "divisor"));
        } else {
            throw Error(ErrorKind::ParseError, "unknown place name '" + name + "'");
        }
        if (!seen.insert(P).second) throw Error(ErrorKind::ParseError, "place " + name + " listed twice");
        if (n != 0) G[P] = static_cast<int>(n);
    }
    return G;
}

std::string divisor_to_text(const Divisor& G) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [P, n] : G) {
        if (n == 0) continue;
        os << (first ? "" : ",") << (P.infinite ? std::string("Pinf") : "A" + std::to_string(P.alpha.v)) << ':' << n;
        first = false;
    }
    return os.str();
}

std::string to_string(const RationalFunction& f) {
    if (f.den().degree() == 0) return poly::pretty(f.num());
    return "(" + poly::pretty(f.num()) + ")/(" + poly::pretty(f.den()) + ")";
}

}  // namespace posetcode::ag
