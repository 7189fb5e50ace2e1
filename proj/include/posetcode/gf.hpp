#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace posetcode::gf {

/// Packed element of GF(p^m): the residue sequence (c_0, ..., c_{m-1}) stored
/// as the integer c_0 + c_1 p + ... + c_{m-1} p^{m-1}. For prime fields this is
/// just the residue.
struct Elem {
    std::uint32_t v = 0;

    constexpr bool is_zero() const noexcept { return v == 0; }
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^m) with exact arithmetic. Immutable after construction and safe to
/// share between threads.
///
/// For q <= 2^16 multiplication and inversion go through log/antilog tables;
/// larger fields fall back to residue-polynomial arithmetic. Both paths are
/// always available (`mul_residue`, `inv_euclid`) so the tables can be checked
/// against them.
class Field {
public:
    static constexpr std::uint32_t kMaxOrder = 1u << 20;
    static constexpr std::uint32_t kMaxCachedOrder = 1u << 16;

    /// Picks the smallest monic irreducible of degree m, ordering candidates by
    /// their packed coefficient value.
    static FieldPtr make(std::uint32_t p, std::uint32_t m);
    /// Uses an explicit modulus (low-to-high, monic, irreducible over GF(p)).
    static FieldPtr make(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t m() const noexcept { return m_; }
    std::uint32_t q() const noexcept { return q_; }
    /// Low-to-high coefficients, length m+1. For m = 1 this is x, i.e. [0, 1].
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    bool cached() const noexcept { return !exp_.empty(); }

    Elem zero() const noexcept { return {}; }
    Elem one() const noexcept { return {1}; }
    /// Element with packed code `code`; throws ParameterOutOfRange if code >= q.
    Elem element(std::uint64_t code) const;
    /// Image of an integer under Z -> GF(p).
    Elem from_int(std::int64_t n) const noexcept;

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    /// Throws DivisionByZero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    Elem mul_residue(Elem a, Elem b) const noexcept;
    /// Inverse through the extended Euclidean algorithm in GF(p)[x].
    Elem inv_euclid(Elem a) const;

    std::vector<std::uint32_t> digits(Elem a) const;
    Elem from_digits(std::span<const std::uint32_t> d) const;

    /// Binomial coefficient C(i, j) mapped into the field, via Lucas' theorem.
    /// Zero when j > i.
    Elem binom(std::uint64_t i, std::uint64_t j) const noexcept;

    /// "5", "2^3" and similar.
    std::string describe() const;

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
    }

    Field(std::uint32_t p, std::vector<std::uint32_t> modulus);

private:
    void build_tables();

    std::uint32_t p_;
    std::uint32_t m_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> pow_p_;
    // Cache (q <= 2^16): exp_ has length 2(q-1) so log sums need no reduction.
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    // Addition table for q <= 256.
    std::vector<std::uint8_t> add_;
};

/// Checked element: a value together with its field. Mixing fields throws.
class FieldElement {
public:
    FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {}

    const FieldPtr& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    FieldPtr field_;
    Elem value_;
};

bool same_field(const Field& a, const Field& b) noexcept;
bool is_prime(std::uint64_t n) noexcept;

/// Parses "p" or "p^m".
FieldPtr parse_field(const std::string& text);
/// Parses "[c0,c1,...,1]".
std::vector<std::uint32_t> parse_modulus(const std::string& text);

}  // namespace posetcode::gf
