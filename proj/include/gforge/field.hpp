#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "gforge/error.hpp"

namespace gforge {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integers beyond this many bits (about 10^6 decimal digits) abort with CoefficientBlowup.
inline constexpr std::size_t kMaxCoefficientBits = 3'321'929;

void check_coefficient_size(const Integer& value);
void check_coefficient_size(const Rational& value);

namespace detail {
struct FieldData;
}

class FieldElem;

/// Handle to an interned base field: Q, GF(p) or GF(p^k).
///
/// Fields are interned for the life of the process, so two handles compare
/// equal exactly when they describe the same field. Extension fields are built
/// on the lexicographically smallest monic irreducible modulus of degree k and
/// carry discrete-log tables, which caps their order at 2^20.
class Field {
public:
    enum class Kind { Rationals, PrimeField, ExtField };

    static Field rationals();
    static Field prime(std::uint64_t p);
    static Field gf(std::uint64_t p, unsigned k);
    /// Finite field of order q = p^k.
    static Field finite(std::uint64_t q);
    /// Accepts "Q", "GF(p)", "GF(q)" and "GF(p^k)".
    static Field parse(std::string_view text);

    Kind kind() const noexcept;
    bool is_finite() const noexcept { return kind() != Kind::Rationals; }
    std::uint64_t characteristic() const noexcept;
    /// Number of elements; 0 for Q.
    std::uint64_t order() const noexcept;
    /// Degree k over the prime field (1 for Q and GF(p)).
    unsigned degree() const noexcept;
    /// Modulus over GF(p), ascending coefficients, monic. Empty unless ExtField.
    const std::vector<std::uint64_t>& modulus() const noexcept;
    std::string name() const;

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(long long value) const;
    FieldElem from_integer(const Integer& value) const;
    FieldElem from_rational(const Rational& value) const;
    /// Finite fields only: the element with packed coefficient vector `code`
    /// (sum of c_i p^i over the residue class of y^i).
    FieldElem from_code(std::uint64_t code) const;
    /// Finite fields only: the distinguished primitive element g, printed as "g".
    FieldElem generator() const;
    /// Finite fields only: all q elements in code order.
    std::vector<FieldElem> elements() const;

    const detail::FieldData& data() const noexcept { return *data_; }

    friend bool operator==(const Field& a, const Field& b) noexcept { return a.data_ == b.data_; }

private:
    explicit Field(const detail::FieldData* data) : data_(data) {}
    const detail::FieldData* data_;
};

/// Exact element of a Field. Rationals are kept in lowest terms; finite-field
/// elements are stored as packed coefficient vectors reduced mod the modulus.
class FieldElem {
public:
    FieldElem() : FieldElem(Field::rationals()) {}
    explicit FieldElem(Field field);
    FieldElem(Field field, Rational value);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Q only.
    const Rational& rational() const;
    /// Finite fields only.
    std::uint64_t code() const;
    /// Finite fields only; -1 for zero. g^log == *this.
    std::int64_t log() const;
    /// True when the element lies in the prime field.
    bool in_prime_field() const noexcept;

    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& rhs);
    FieldElem& operator-=(const FieldElem& rhs);
    FieldElem& operator*=(const FieldElem& rhs);
    FieldElem& operator/=(const FieldElem& rhs);

    friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
    friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
    friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
    friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
    friend bool operator==(const FieldElem& a, const FieldElem& b);

    FieldElem inverse() const;
    FieldElem pow(const Integer& exponent) const;
    FieldElem pow(long long exponent) const { return pow(Integer(static_cast<long>(exponent))); }

    /// Total order used for deterministic output: numeric on Q, by code on finite fields.
    friend int compare(const FieldElem& a, const FieldElem& b);

    /// "p/q" on Q; an integer for prime-field elements, "g" or "g^k" otherwise.
    std::string to_string() const;

private:
    friend class Field;
    FieldElem(Field field, std::uint64_t code) : field_(field), value_(code) {}

    Field field_;
    std::variant<std::uint64_t, Rational> value_;
};

/// Finite-field square test by Euler's criterion (odd q) or always-true (even q);
/// on Q an exact test of the numerator-denominator product.
bool is_square(const FieldElem& a);

/// Finite fields of odd order and Q: a square root when one exists.
std::optional<FieldElem> sqrt_exact(const FieldElem& a);

/// Primality for 64-bit moduli.
bool is_prime(std::uint64_t n);

}  // namespace gforge
