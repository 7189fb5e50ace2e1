#include "posetcode/poly.hpp"

#include <sstream>

#include "posetcode/error.hpp"

namespace posetcode::poly {

namespace {

void require_same(const FieldPtr& a, const FieldPtr& b) {
    if (!gf::same_field(*a, *b))
        throw Error(ErrorKind::MixedFields, "GF(" + a->describe() + ") vs GF(" + b->describe() + ")");
}

// Divides g by (z - alpha) in place; returns the remainder g(alpha).
Elem synthetic_divide(const gf::Field& F, std::vector<Elem>& g, Elem alpha) {
    if (g.empty()) return {};
    Elem carry{};
    for (std::size_t i = g.size(); i-- > 0;) {
        const Elem next = F.add(g[i], F.mul(carry, alpha));
        g[i] = carry;
        carry = next;
    }
    g.pop_back();
    return carry;
}

}  // namespace

Polynomial::Polynomial(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_)
        if (c.v >= field_->q()) throw Error(ErrorKind::ParameterOutOfRange, "coefficient outside field");
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(FieldPtr field, Elem c) { return Polynomial(std::move(field), {c}); }

Polynomial Polynomial::monomial(FieldPtr field, Elem c, std::size_t degree) {
    std::vector<Elem> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(field), std::move(v));
}

Polynomial Polynomial::linear(FieldPtr field, Elem alpha) {
    const Elem na = field->neg(alpha);
    return Polynomial(std::move(field), {na, Elem{1}});
}

Polynomial Polynomial::scaled(Elem c) const {
    Polynomial out(field_);
    if (c.is_zero()) return out;
    out.coeffs_.reserve(coeffs_.size());
    for (auto x : coeffs_) out.coeffs_.push_back(field_->mul(x, c));
    return out;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(field_->inv(leading()));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same(a.field_, b.field_);
    const auto& F = *a.field_;
    Polynomial out(a.field_);
    out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = F.add(a.coeff(i), b.coeff(i));
    out.trim();
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    require_same(a.field_, b.field_);
    const auto& F = *a.field_;
    Polynomial out(a.field_);
    out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = F.sub(a.coeff(i), b.coeff(i));
    out.trim();
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same(a.field_, b.field_);
    Polynomial out(a.field_);
    if (a.is_zero() || b.is_zero()) return out;
    const auto& F = *a.field_;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Elem{});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out.coeffs_[i + j] = F.add(out.coeffs_[i + j], F.mul(a.coeffs_[i], b.coeffs_[j]));
    }
    out.trim();
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return gf::same_field(*a.field_, *b.field_) && a.coeffs_ == b.coeffs_;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    require_same(a.field(), b.field());
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
    const auto& F = *a.field();
    std::vector<Elem> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial(a.field()), a};
    std::vector<Elem> quot(rem.size() - b.coeffs().size() + 1);
    const Elem lead_inv = F.inv(b.leading());
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Elem c = F.mul(rem[k + db], lead_inv);
        quot[k] = c;
        if (c.is_zero()) continue;
        for (int i = 0; i <= db; ++i) rem[k + i] = F.sub(rem[k + i], F.mul(c, b.coeffs()[i]));
    }
    rem.resize(db);
    return {Polynomial(a.field(), std::move(quot)), Polynomial(a.field(), std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial pow(const Polynomial& f, unsigned e) {
    Polynomial result = Polynomial::constant(f.field(), Elem{1}), base = f;
    for (; e > 0; e >>= 1) {
        if (e & 1) result = result * base;
        if (e > 1) base = base * base;
    }
    return result;
}

Elem eval(const Polynomial& f, Elem alpha) {
    const auto& F = *f.field();
    Elem acc{};
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = F.add(F.mul(acc, alpha), f.coeffs()[i]);
    return acc;
}

gf::FieldElement eval(const Polynomial& f, const gf::FieldElement& alpha) {
    require_same(f.field(), alpha.field());
    return {f.field(), eval(f, alpha.value())};
}

Polynomial hyperderivative(const Polynomial& f, unsigned j) {
    const auto& F = *f.field();
    if (f.degree() < static_cast<int>(j)) return Polynomial(f.field());
    std::vector<Elem> out(f.coeffs().size() - j);
    for (std::size_t i = j; i < f.coeffs().size(); ++i) out[i - j] = F.mul(F.binom(i, j), f.coeffs()[i]);
    return Polynomial(f.field(), std::move(out));
}

std::vector<Elem> taylor_coeffs(const Polynomial& f, Elem alpha, std::size_t count) {
    if (count == 0) throw Error(ErrorKind::ParameterOutOfRange, "count must be >= 1");
    const auto& F = *f.field();
    std::vector<Elem> g = f.coeffs(), out;
    out.reserve(count);
    for (std::size_t j = 0; j < count; ++j) out.push_back(synthetic_divide(F, g, alpha));
    return out;
}

int vanishing_order(const Polynomial& f, Elem alpha) {
    if (f.is_zero()) return kInfiniteOrder;
    const auto& F = *f.field();
    std::vector<Elem> g = f.coeffs();
    int order = 0;
    while (synthetic_divide(F, g, alpha).is_zero()) ++order;
    return order;
}

std::string to_text(const Polynomial& f) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) os << (i ? "," : "") << f.coeffs()[i].v;
    os << ']';
    return os.str();
}

Polynomial parse(const FieldPtr& field, const std::string& text) {
    const auto b = text.find('['), e = text.rfind(']');
    if (b == std::string::npos || e == std::string::npos || e < b)
        throw Error(ErrorKind::ParseError, "polynomial must look like [c0,c1,...]");
    std::vector<Elem> coeffs;
    std::stringstream ss(text.substr(b + 1, e - b - 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &used);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "bad coefficient '" + item + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos)
            throw Error(ErrorKind::ParseError, "bad coefficient '" + item + "'");
        coeffs.push_back(field->element(v));
    }
    return Polynomial(field, std::move(coeffs));
}

std::string pretty(const Polynomial& f, char var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.coeffs().size(); i-- > 0;) {
        const auto c = f.coeffs()[i].v;
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (c != 1 || i == 0) os << c;
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

}  // namespace posetcode::poly
