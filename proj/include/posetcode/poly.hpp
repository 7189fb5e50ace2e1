#pragma once

#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "posetcode/gf.hpp"

namespace posetcode::poly {

using gf::Elem;
using gf::FieldPtr;

/// Dense univariate polynomial over GF(q), coefficients low-to-high, with no
/// trailing zeros. The zero polynomial has no coefficients.
class Polynomial {
public:
    static constexpr int kZeroDegree = INT_MIN;

    explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}
    Polynomial(FieldPtr field, std::vector<Elem> coeffs);

    static Polynomial constant(FieldPtr field, Elem c);
    static Polynomial monomial(FieldPtr field, Elem c, std::size_t degree);
    /// z - alpha
    static Polynomial linear(FieldPtr field, Elem alpha);

    const FieldPtr& field() const noexcept { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Elem{}; }
    Elem leading() const noexcept { return coeffs_.empty() ? Elem{} : coeffs_.back(); }

    Polynomial scaled(Elem c) const;
    Polynomial monic() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    void trim();

    FieldPtr field_;
    std::vector<Elem> coeffs_;
};

/// Quotient and remainder; throws DivisionByZero when b is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);
Polynomial pow(const Polynomial& f, unsigned e);

/// Horner evaluation. Throws MixedFields if alpha's field differs.
Elem eval(const Polynomial& f, Elem alpha);
gf::FieldElement eval(const Polynomial& f, const gf::FieldElement& alpha);

/// j-th Hasse derivative: sum over i >= j of C(i, j) f_i z^{i-j}.
Polynomial hyperderivative(const Polynomial& f, unsigned j);

/// (d^0 f(alpha), ..., d^{count-1} f(alpha)) by repeated synthetic division.
std::vector<Elem> taylor_coeffs(const Polynomial& f, Elem alpha, std::size_t count);

inline constexpr int kInfiniteOrder = INT_MAX;
/// Multiplicity of alpha as a root; kInfiniteOrder for the zero polynomial.
int vanishing_order(const Polynomial& f, Elem alpha);

/// "[c0,c1,...]" with packed element codes; zero is "[]".
std::string to_text(const Polynomial& f);
Polynomial parse(const FieldPtr& field, const std::string& text);

/// Descending powers, e.g. "4x^3 + 3x^2 + x". Coefficients are packed codes.
std::string pretty(const Polynomial& f, char var = 'x');

}  // namespace posetcode::poly
