#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "posetcode/codes.hpp"
#include "posetcode/gf.hpp"
#include "posetcode/poly.hpp"

namespace posetcode::ag {

using gf::Elem;
using gf::FieldPtr;
using poly::Polynomial;

/// Rational place of the projective line: x = alpha (local parameter x - alpha)
/// or the place at infinity (local parameter 1/x). Infinity sorts last.
struct Place {
    bool infinite = false;
    Elem alpha{};

    static Place finite(Elem a) { return {false, a}; }
    static Place infinity() { return {true, {}}; }
    /// "inf" or the packed element code.
    std::string describe() const;
    friend auto operator<=>(const Place&, const Place&) = default;
};

using Divisor = std::map<Place, int>;

int degree(const Divisor& G);
int coefficient(const Divisor& G, const Place& P);

/// num/den with gcd(num, den) = 1 and den monic. Zero is 0/1.
class RationalFunction {
public:
    explicit RationalFunction(const FieldPtr& field);
    RationalFunction(Polynomial num, Polynomial den);  // DivisionByZero if den = 0
    static RationalFunction from_poly(Polynomial f);

    const Polynomial& num() const noexcept { return num_; }
    const Polynomial& den() const noexcept { return den_; }
    const FieldPtr& field() const noexcept { return num_.field(); }
    bool is_zero() const noexcept { return num_.is_zero(); }

    RationalFunction scaled(Elem c) const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    Polynomial num_;
    Polynomial den_;
};

/// Normalized valuation; poly::kInfiniteOrder for the zero function.
int valuation(const RationalFunction& f, const Place& P);
/// div(f) + G >= 0, checked at every place (including poles of higher degree).
bool in_riemann_roch(const RationalFunction& f, const Divisor& G);

/// Basis of L(G) on the projective line; deg G + 1 elements, empty if deg G < 0.
std::vector<RationalFunction> rr_basis(const FieldPtr& field, const Divisor& G);

struct LaurentSlice {
    Place place;
    int start = 0;
    std::vector<Elem> coeffs;  // c_start, ..., c_{start+count-1}
};

/// Coefficients of f in powers of the local parameter at P. Throws
/// PoleDeeperThanStart if valuation(f, P) < start.
LaurentSlice local_expansion(const RationalFunction& f, const Place& P, int start, std::size_t count);

struct AGCodeSpec {
    FieldPtr field;
    std::vector<Place> places;
    Divisor G;
    unsigned s = 2;
    /// false gives the unconstrained code { c(f) : f in L(G) } in the NRT metric.
    bool constrained = true;

    unsigned r() const noexcept { return static_cast<unsigned>(places.size()); }
    int n(std::size_t i) const { return coefficient(G, places[i]); }
    /// ParameterOutOfRange / DuplicatePoints. Constrained codes need
    /// r-1 <= deg G <= rs-r+1; unconstrained ones 0 <= deg G <= rs-1.
    void validate() const;
};

/// s x r matrix whose column i is local_expansion(f, P_i, -n_i, s).
/// Throws NotInRiemannRochSpace if f is not in L(G).
poset::MatrixWord cf_matrix(const RationalFunction& f, const AGCodeSpec& spec);

/// Subspace of L(G) where the lowest coefficients c_{i,-n_i} all agree.
std::vector<RationalFunction> l0_basis(const AGCodeSpec& spec);

struct AGCode {
    AGCodeSpec spec;
    std::vector<RationalFunction> basis;
    codes::Code code;  // metric U(s, r, 1) when constrained, C(s, r) otherwise
};

AGCode build_ag_code(const AGCodeSpec& spec);

/// w_i(f) = min(s, valuation(f, P_i) + n_i); the NRT weight of column i is s - w_i.
std::vector<unsigned> clipped_column_weights(const RationalFunction& f, const AGCodeSpec& spec);

struct BoundReport {
    int deg_g = 0;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    long long dim_bound = 0;       // deg G - r + 2 (constrained) or deg G + 1
    long long distance_bound = 0;  // rs - deg G
    bool dim_ok = false;
    bool distance_ok = false;
    bool mds = false;  // k + d = n + 1
    bool all_ok() const noexcept { return dim_ok && distance_ok && (mds || !constrained); }
    bool constrained = true;
};

BoundReport verify_bounds(const AGCode& code, std::uint64_t budget, int workers = 0);

using BigInt = boost::multiprecision::cpp_int;

struct MdsInequalityParams {
    long long g = 1;
    long long r = 2;
    long long s = 2;
    long long k = 1;
    BigInt h = 1;
    BigInt a_k = 0;
};

struct MdsInequalityReport {
    std::vector<std::string> violations;  // failed hypotheses, empty when all hold
    BigInt lhs;                           // C(r+s+k-g, r-1) * A_k
    BigInt rhs;                           // h
    bool verdict = false;                 // lhs < rhs and hypotheses hold
    long long stated_distance_bound = 0;  // s - g + 2 + k
    long long stated_dim_bound = 0;       // rs - r + 1 - s
    long long proof_degree = 0;           // deg G = rs - r - s + g - 1
    long long proof_dim_bound = 0;        // deg G - g - r + 2
    long long length = 0;                 // rs - r + 1
    bool mds_case = false;                // g = k - 1
    bool elliptic_conflict = false;       // g = 1 forces k in {1, 2}, never 0
    std::vector<std::string> notes;
};

MdsInequalityReport mds_inequality(const MdsInequalityParams& params);

/// "1,3,4,inf": packed element codes, "inf" for the place at infinity.
std::vector<Place> parse_places(const gf::Field& F, const std::string& text);
/// Comma separated NAME:COEFF terms. NAME is Pi (i-th entry of `places`,
/// 1-based), Pinf (place at infinity) or Aa (finite place x = a).
Divisor parse_divisor(const gf::Field& F, const std::string& text, const std::vector<Place>& places);
/// Canonical text: places in order, Pinf last, zero coefficients dropped.
std::string divisor_to_text(const Divisor& G);

std::string to_string(const RationalFunction& f);

}  // namespace posetcode::ag
