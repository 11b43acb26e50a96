#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gforge/field.hpp"

namespace gforge {

/// Dense univariate polynomial over a Field, ascending coefficients.
/// The coefficient vector never carries trailing zeros.
class UniPoly {
public:
    explicit UniPoly(Field field) : field_(field) {}
    UniPoly(Field field, std::vector<FieldElem> coeffs);

    static UniPoly constant(const FieldElem& c);
    static UniPoly monomial(const FieldElem& c, int degree);
    /// The indeterminate itself.
    static UniPoly x(Field field);
    /// Convenience for tests and literals: integer coefficients, ascending.
    static UniPoly from_ints(Field field, std::initializer_list<long long> coeffs);
    /// Product of (x - r) over the given roots.
    static UniPoly from_roots(Field field, const std::vector<FieldElem>& roots);

    const Field& field() const noexcept { return field_; }
    const std::vector<FieldElem>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().is_one(); }
    FieldElem coeff(int i) const;
    FieldElem leading() const;

    FieldElem operator()(const FieldElem& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    UniPoly scaled(const FieldElem& c) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const UniPoly& rhs);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

    /// Deterministic order: degree first, then coefficients from the top down.
    friend int compare(const UniPoly& a, const UniPoly& b);

    std::string to_string(char var = 'Y') const;

private:
    void trim();

    Field field_;
    std::vector<FieldElem> coeffs_;
};

/// a = q*b + r with deg r < deg b.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);

/// Monic gcd (zero only if both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct Xgcd {
    UniPoly g, s, t;  // g = s*a + t*b, g monic
};
Xgcd xgcd(const UniPoly& a, const UniPoly& b);

UniPoly pow_mod(UniPoly base, const Integer& exponent, const UniPoly& modulus);

/// Substitute x -> inner in f.
UniPoly compose(const UniPoly& f, const UniPoly& inner);

/// Element of k[T][Y] stored as coefficients in T indexed by Y-degree, monic in Y.
class ParamPoly {
public:
    /// Validates that the top Y-coefficient is the constant 1.
    ParamPoly(Field field, std::vector<UniPoly> coeffs_in_t);
    /// A polynomial in Y with T-constant coefficients.
    static ParamPoly from_fiber(const UniPoly& fiber);

    const Field& field() const noexcept { return field_; }
    const std::vector<UniPoly>& coeffs() const noexcept { return coeffs_; }
    int degree_y() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    int degree_t() const noexcept;

    /// R(t0, Y).
    UniPoly specialize(const FieldElem& t0) const;
    /// dR/dY, a (not necessarily monic) element of k[T][Y] as a coefficient list.
    std::vector<UniPoly> derivative_y() const;

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

    std::string to_string() const;

private:
    Field field_;
    std::vector<UniPoly> coeffs_;
};

/// Resultant of two polynomials over a field via the Sylvester determinant.
/// `formal_degree_b` pads b with leading zeros (pass -1 to use deg b).
FieldElem resultant(const UniPoly& a, const UniPoly& b, int formal_degree_b = -1);

/// Resultant in Y of two elements of k[T][Y], as a polynomial in T.
UniPoly resultant_y(const std::vector<UniPoly>& a, const std::vector<UniPoly>& b, int formal_degree_b = -1);

/// Discriminant with respect to the variable; zero iff f is inseparable.
FieldElem discriminant(const UniPoly& f);
UniPoly discriminant_y(const ParamPoly& f);

/// gcd(f, f') == 1.
bool is_separable(const UniPoly& f);

/// Monic R(T,Y) with R(node_i, Y) == fiber_i and deg_T of every coefficient < #nodes.
ParamPoly lagrange_interpolate_coeffwise(const std::vector<FieldElem>& nodes, const std::vector<UniPoly>& fibers);

/// Primitive integer polynomial with positive leading coefficient, proportional to f (f over Q).
std::vector<Integer> primitive_integer_part(const UniPoly& f);
UniPoly from_integers(Field field, const std::vector<Integer>& coeffs);

}  // namespace gforge
