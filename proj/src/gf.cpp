#include "posetcode/gf.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "posetcode/error.hpp"

namespace posetcode {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case ErrorKind::FieldTooLarge: return "FieldTooLarge";
        case ErrorKind::InvalidModulus: return "InvalidModulus";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::MixedFields: return "MixedFields";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::NotConstantRow: return "NotConstantRow";
        case ErrorKind::DuplicatePoints: return "DuplicatePoints";
        case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::PoleDeeperThanStart: return "PoleDeeperThanStart";
        case ErrorKind::NotInRiemannRochSpace: return "NotInRiemannRochSpace";
        case ErrorKind::InvalidPoset: return "InvalidPoset";
        case ErrorKind::GoldenMismatch: return "GoldenMismatch";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace gf {

namespace {

using Residues = std::vector<std::uint32_t>;

void trim(Residues& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // Fermat; p is prime.
    std::uint64_t result = 1, base = a % p;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over GF(p); b nonzero.
Residues poly_mod(Residues a, const Residues& b, std::uint32_t p) {
    trim(a);
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * b[i] % p) % p);
        trim(a);
    }
    return a;
}

bool irreducible(const Residues& f, std::uint32_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg <= 1) return deg == 1;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Residues g(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint32_t small_binom_mod(std::uint32_t n, std::uint32_t k, std::uint32_t p) {
    if (k > n) return 0;
    std::uint64_t num = 1, den = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    return static_cast<std::uint32_t>(num * inv_mod(static_cast<std::uint32_t>(den), p) % p);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool same_field(const Field& a, const Field& b) noexcept { return &a == &b || a == b; }

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), m_(static_cast<std::uint32_t>(modulus.size() - 1)), q_(1), modulus_(std::move(modulus)) {
    pow_p_.resize(m_ + 1);
    for (std::uint32_t i = 0; i <= m_; ++i) {
        pow_p_[i] = q_;
        if (i < m_) q_ *= p_;
    }
    if (q_ <= kMaxCachedOrder) build_tables();
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw Error(ErrorKind::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    if (m < 1) throw Error(ErrorKind::ParameterOutOfRange, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder)
            throw Error(ErrorKind::FieldTooLarge, std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^20");
    }
    if (m == 1) return std::make_shared<const Field>(p, Residues{0, 1});
    for (std::uint64_t code = 0; code < q; ++code) {
        Residues f(m + 1, 0);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < m; ++i) {
            f[i] = static_cast<std::uint32_t>(c % p);
            c /= p;
        }
        f[m] = 1;
        if (irreducible(f, p)) return std::make_shared<const Field>(p, std::move(f));
    }
    throw Error(ErrorKind::InvalidModulus, "no irreducible polynomial found");  // unreachable
}

FieldPtr Field::make(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw Error(ErrorKind::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
    if (modulus.size() < 2 || modulus.back() != 1)
        throw Error(ErrorKind::InvalidModulus, "modulus must be monic of degree >= 1");
    for (auto c : modulus)
        if (c >= p) throw Error(ErrorKind::InvalidModulus, "modulus coefficient out of range");
    std::uint64_t q = 1;
    for (std::size_t i = 1; i < modulus.size(); ++i) {
        q *= p;
        if (q > kMaxOrder) throw Error(ErrorKind::FieldTooLarge, "field order exceeds 2^20");
    }
    if (!irreducible(modulus, p)) throw Error(ErrorKind::InvalidModulus, "modulus is reducible");
    return std::make_shared<const Field>(p, std::move(modulus));
}

Elem Field::element(std::uint64_t code) const {
    if (code >= q_)
        throw Error(ErrorKind::ParameterOutOfRange,
                    "element code " + std::to_string(code) + " outside GF(" + describe() + ")");
    return {static_cast<std::uint32_t>(code)};
}

Elem Field::from_int(std::int64_t n) const noexcept {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
    std::vector<std::uint32_t> d(m_);
    std::uint32_t v = a.v;
    for (std::uint32_t i = 0; i < m_; ++i) {
        d[i] = v % p_;
        v /= p_;
    }
    return d;
}

Elem Field::from_digits(std::span<const std::uint32_t> d) const {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i] % p_;
    return {v};
}

Elem Field::add(Elem a, Elem b) const noexcept {
    if (!add_.empty()) return {add_[a.v * q_ + b.v]};
    if (m_ == 1) return {static_cast<std::uint32_t>((std::uint64_t(a.v) + b.v) % p_)};
    if (p_ == 2) return {a.v ^ b.v};
    std::uint32_t out = 0, x = a.v, y = b.v;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((x % p_ + y % p_) % p_) * pow_p_[i];
        x /= p_;
        y /= p_;
    }
    return {out};
}

Elem Field::neg(Elem a) const noexcept {
    if (p_ == 2) return a;
    std::uint32_t out = 0, x = a.v;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += ((p_ - x % p_) % p_) * pow_p_[i];
        x /= p_;
    }
    return {out};
}

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul_residue(Elem a, Elem b) const noexcept {
    if (a.is_zero() || b.is_zero()) return {};
    if (m_ == 1) return {static_cast<std::uint32_t>(std::uint64_t(a.v) * b.v % p_)};
    const auto da = digits(a), db = digits(b);
    Residues prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i)
        for (std::uint32_t j = 0; j < m_; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(da[i]) * db[j]) % p_);
    const Residues r = poly_mod(std::move(prod), modulus_, p_);
    return from_digits(r);
}

Elem Field::mul(Elem a, Elem b) const noexcept {
    if (a.is_zero() || b.is_zero()) return {};
    if (!exp_.empty()) return {exp_[log_[a.v] + log_[b.v]]};
    return mul_residue(a, b);
}

Elem Field::inv_euclid(Elem a) const {
    if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    if (m_ == 1) return {inv_mod(a.v, p_)};
    // Invariants: r0 = s0 * a (mod modulus), r1 = s1 * a (mod modulus).
    Residues r0 = modulus_, r1 = digits(a);
    trim(r1);
    Residues s0{}, s1{1};
    while (!(r1.size() == 1)) {
        // r0 = quot * r1 + rem
        Residues rem = r0, quot(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
        const std::uint32_t lead_inv = inv_mod(r1.back(), p_);
        trim(rem);
        while (rem.size() >= r1.size()) {
            const std::uint64_t c = std::uint64_t(rem.back()) * lead_inv % p_;
            const std::size_t shift = rem.size() - r1.size();
            quot[shift] = static_cast<std::uint32_t>(c);
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = static_cast<std::uint32_t>((rem[shift + i] + p_ - c * r1[i] % p_) % p_);
            trim(rem);
        }
        // s_new = s0 - quot * s1
        Residues s_new(std::max(s0.size(), quot.size() + s1.size()), 0);
        for (std::size_t i = 0; i < s0.size(); ++i) s_new[i] = s0[i];
        for (std::size_t i = 0; i < quot.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j)
                s_new[i + j] =
                    static_cast<std::uint32_t>((s_new[i + j] + p_ - std::uint64_t(quot[i]) * s1[j] % p_) % p_);
        trim(s_new);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s_new);
    }
    // r1 is a nonzero constant c with s1 * a = c.
    const std::uint32_t c_inv = inv_mod(r1[0], p_);
    Residues out = poly_mod(s1, modulus_, p_);
    for (auto& x : out) x = static_cast<std::uint32_t>(std::uint64_t(x) * c_inv % p_);
    return from_digits(out);
}

Elem Field::inv(Elem a) const {
    if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    if (!exp_.empty()) return {exp_[(q_ - 1 - log_[a.v]) % (q_ - 1)]};
    return inv_euclid(a);
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    Elem result = one(), base = a;
    for (; e > 0; e >>= 1) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

Elem Field::binom(std::uint64_t i, std::uint64_t j) const noexcept {
    if (j > i) return {};
    std::uint64_t result = 1;
    while (i > 0 || j > 0) {
        const auto ni = static_cast<std::uint32_t>(i % p_), nj = static_cast<std::uint32_t>(j % p_);
        if (nj > ni) return {};
        result = result * small_binom_mod(ni, nj, p_) % p_;
        i /= p_;
        j /= p_;
    }
    return {static_cast<std::uint32_t>(result)};
}

std::string Field::describe() const {
    return m_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^" + std::to_string(m_);
}

void Field::build_tables() {
    if (q_ <= 256) {
        add_.assign(std::size_t(q_) * q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b) {
                std::uint32_t out = 0, x = a, y = b;
                for (std::uint32_t i = 0; i < m_; ++i) {
                    out += ((x % p_ + y % p_) % p_) * pow_p_[i];
                    x /= p_;
                    y /= p_;
                }
                add_[std::size_t(a) * q_ + b] = static_cast<std::uint8_t>(out);
            }
    }
    if (q_ == 2) {
        exp_ = {1, 1};
        log_ = {0, 0};
        return;
    }
    const std::uint64_t order = q_ - 1;
    const auto factors = prime_factors(order);
    auto slow_pow = [&](Elem a, std::uint64_t e) {
        Elem r = one();
        for (; e > 0; e >>= 1) {
            if (e & 1) r = mul_residue(r, a);
            a = mul_residue(a, a);
        }
        return r;
    };
    Elem gen{};
    for (std::uint32_t c = 2; c < q_; ++c) {
        bool primitive = true;
        for (auto l : factors)
            if (slow_pow({c}, order / l) == one()) {
                primitive = false;
                break;
            }
        if (primitive) {
            gen = {c};
            break;
        }
    }
    exp_.resize(2 * order);
    log_.assign(q_, 0);
    Elem x = one();
    for (std::uint64_t i = 0; i < order; ++i) {
        exp_[i] = exp_[i + order] = x.v;
        log_[x.v] = static_cast<std::uint32_t>(i);
        x = mul_residue(x, gen);
    }
}

namespace {
const Field& checked(const FieldElement& a, const FieldElement& b) {
    if (!same_field(*a.field(), *b.field()))
        throw Error(ErrorKind::MixedFields, "GF(" + a.field()->describe() + ") vs GF(" + b.field()->describe() + ")");
    return *a.field();
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return {a.field_, checked(a, b).add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return {a.field_, checked(a, b).sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return {a.field_, checked(a, b).mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    return {a.field_, checked(a, b).div(a.value_, b.value_)};
}
bool operator==(const FieldElement& a, const FieldElement& b) {
    return same_field(*a.field_, *b.field_) && a.value_ == b.value_;
}

namespace {
std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::uint64_t parse_uint(const std::string& s, const std::string& context) {
    std::uint64_t v = 0;
    const auto t = strip(s);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size())
        throw Error(ErrorKind::ParseError, "expected a non-negative integer in " + context + ", got '" + s + "'");
    return v;
}
}  // namespace

FieldPtr parse_field(const std::string& text) {
    const auto caret = text.find('^');
    if (caret == std::string::npos) return Field::make(static_cast<std::uint32_t>(parse_uint(text, "field")), 1);
    const auto p = parse_uint(text.substr(0, caret), "field");
    const auto m = parse_uint(text.substr(caret + 1), "field");
    if (p > Field::kMaxOrder || m > 64) throw Error(ErrorKind::FieldTooLarge, text);
    return Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m));
}

std::vector<std::uint32_t> parse_modulus(const std::string& text) {
    auto t = strip(text);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw Error(ErrorKind::ParseError, "modulus must look like [c0,c1,...,1]");
    t = t.substr(1, t.size() - 2);
    std::vector<std::uint32_t> out;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(static_cast<std::uint32_t>(parse_uint(item, "modulus")));
    return out;
}

}  // namespace gf
}  // namespace posetcode
