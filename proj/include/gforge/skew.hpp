#pragma once

#include <array>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gforge/field.hpp"

namespace gforge {

/// Element a + b*i + c*j + d*k of the rational quaternions (-1,-1/Q).
class Quaternion {
public:
    Quaternion() = default;
    Quaternion(Rational a, Rational b, Rational c, Rational d)
        : q_{std::move(a), std::move(b), std::move(c), std::move(d)} {}
    explicit Quaternion(Rational scalar) : q_{std::move(scalar), 0, 0, 0} {}

    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    const Rational& operator[](int idx) const { return q_[static_cast<std::size_t>(idx)]; }
    bool is_zero() const;
    Quaternion conjugate() const;
    /// a^2 + b^2 + c^2 + d^2.
    Rational norm() const;
    Quaternion inverse() const;

    Quaternion operator-() const;
    friend Quaternion operator+(const Quaternion& x, const Quaternion& y);
    friend Quaternion operator-(const Quaternion& x, const Quaternion& y);
    friend Quaternion operator*(const Quaternion& x, const Quaternion& y);
    friend bool operator==(const Quaternion& x, const Quaternion& y) { return x.q_ == y.q_; }

    std::string to_string() const;

private:
    std::array<Rational, 4> q_{0, 0, 0, 0};
};

/// Coefficient of a skew polynomial: a finite-field element or a quaternion.
class SkewCoeff {
public:
    SkewCoeff() = default;
    SkewCoeff(FieldElem e) : v_(std::move(e)) {}
    SkewCoeff(Quaternion q) : v_(std::move(q)) {}

    bool is_quaternion() const { return std::holds_alternative<Quaternion>(v_); }
    const FieldElem& field_elem() const { return std::get<FieldElem>(v_); }
    const Quaternion& quaternion() const { return std::get<Quaternion>(v_); }

    bool is_zero() const;
    SkewCoeff inverse() const;
    SkewCoeff operator-() const;
    friend SkewCoeff operator+(const SkewCoeff& x, const SkewCoeff& y);
    friend SkewCoeff operator-(const SkewCoeff& x, const SkewCoeff& y);
    friend SkewCoeff operator*(const SkewCoeff& x, const SkewCoeff& y);
    friend bool operator==(const SkewCoeff& x, const SkewCoeff& y) { return x.v_ == y.v_; }

    std::string to_string() const;
    /// True when to_string() is a single term that needs no parentheses before "*T".
    bool is_atomic() const;

private:
    std::variant<FieldElem, Quaternion> v_;
};

namespace detail {
struct SkewRingData;
}

/// Coefficient ring H with an automorphism sigma of finite order n.
///
/// Supported: a finite field GF(p^k) with the Frobenius power x -> x^(p^j),
/// and the quaternions (-1,-1/Q) with conjugation x -> u x u^-1. The
/// automorphism is checked on generators when the ring is built.
class SkewRing {
public:
    static SkewRing frobenius(const Field& field, unsigned power = 1);
    static SkewRing quaternion_conjugation(const Quaternion& u);
    /// "GF(4);frob", "GF(9);frob^2", "GF(5);id", "H;conj(i)", "H;conj(1 + j)".
    static SkewRing parse(std::string_view text);

    bool is_quaternion() const;
    /// Finite-field rings only.
    const Field& field() const;
    /// Smallest n >= 1 with sigma^n = id.
    int order() const;
    /// sigma^k(c) for any integer k.
    SkewCoeff sigma(const SkewCoeff& c, long k = 1) const;
    /// Ring generators over the prime field (resp. Q): {g} or {i, j}.
    std::vector<SkewCoeff> generators() const;
    /// Whether c lies in the centre of H and is fixed by sigma.
    bool central_fixed(const SkewCoeff& c) const;

    SkewCoeff zero() const;
    SkewCoeff one() const;
    SkewCoeff from_int(long long v) const;
    SkewCoeff from_rational(const Rational& v) const;
    bool contains(const SkewCoeff& c) const;

    std::string to_string() const;

    friend bool operator==(const SkewRing& a, const SkewRing& b);

private:
    explicit SkewRing(std::shared_ptr<const detail::SkewRingData> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::SkewRingData> d_;
};

/// a_0 + a_1 T + ... + a_m T^m in H[T, sigma], with T a = sigma(a) T.
class SkewPoly {
public:
    explicit SkewPoly(SkewRing ring) : ring_(std::move(ring)) {}
    SkewPoly(SkewRing ring, std::vector<SkewCoeff> coeffs);

    static SkewPoly constant(const SkewRing& ring, const SkewCoeff& c);
    /// c * T^m.
    static SkewPoly monomial(const SkewRing& ring, const SkewCoeff& c, int m);

    const SkewRing& ring() const noexcept { return ring_; }
    const std::vector<SkewCoeff>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    SkewCoeff coeff(int i) const;
    SkewCoeff leading() const;

    SkewPoly operator-() const;
    friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b);
    friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b);
    friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
        return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
    }

    /// Coefficients to the left of T-powers: "g^2*T^2 + (1 + i)*T + 3".
    std::string to_string() const;

private:
    void trim();

    SkewRing ring_;
    std::vector<SkewCoeff> coeffs_;
};

/// The twisted product; throws RingMismatch for different rings.
SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g);

/// a = q*b + r with deg r < deg b.
std::pair<SkewPoly, SkewPoly> right_divide(const SkewPoly& a, const SkewPoly& b);
/// a = b*q + r with deg r < deg b.
std::pair<SkewPoly, SkewPoly> left_divide(const SkewPoly& a, const SkewPoly& b);

/// r, s with x*r = y*s != 0 of minimal degree (least common right multiple),
/// from the extended left Euclidean algorithm. Throws ZeroInput.
std::pair<SkewPoly, SkewPoly> ore_witness(const SkewPoly& x, const SkewPoly& y);

/// f commutes with T and with the generators of H.
bool center_test(const SkewPoly& f);

/// Reads the polynomial text grammar in T with coefficient symbols g (finite
/// fields) or i, j, k (quaternions). Products are taken in H[T, sigma], so
/// "T*g" reads as sigma(g)*T.
SkewPoly parse_skewpoly(std::string_view text, const SkewRing& ring);
SkewCoeff parse_skewcoeff(std::string_view text, const SkewRing& ring);

// Permutation groups --------------------------------------------------------

/// Images of 0..n-1. Composition (p*q)(x) = p(q(x)).
using Perm = std::vector<int>;

Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);
Perm identity_perm(int degree);
/// Cycle notation with 1-based points: "(1 2)(3 4)", "()" for the identity.
Perm parse_perm(std::string_view text, int degree);
std::string perm_to_string(const Perm& p);

inline constexpr std::size_t kMaxGroupOrder = 10'000;

class PermGroup {
public:
    /// Closure of the generators; throws GroupTooLarge beyond kMaxGroupOrder elements.
    static PermGroup generate(int degree, const std::vector<Perm>& generators);
    static PermGroup symmetric(int n);
    /// Generators in cycle notation separated by commas: "(1 2), (1 2 3)".
    static PermGroup parse(std::string_view generators, int degree);

    int degree() const noexcept { return degree_; }
    const std::vector<Perm>& generators() const noexcept { return generators_; }
    /// All elements, sorted.
    const std::vector<Perm>& elements() const noexcept { return elements_; }
    std::size_t order() const noexcept { return elements_.size(); }
    bool contains(const Perm& p) const;
    bool is_subgroup_of(const PermGroup& g) const;
    bool is_normal_in(const PermGroup& g) const;

    friend bool operator==(const PermGroup& a, const PermGroup& b) {
        return a.degree_ == b.degree_ && a.elements_ == b.elements_;
    }

private:
    int degree_ = 0;
    std::vector<Perm> generators_;
    std::vector<Perm> elements_;
};

struct NormalizerQuotient {
    std::size_t normalizer_order = 0;
    std::size_t order = 0;  // |N_G(K) / K|
    /// One representative per coset of K in N_G(K), the smallest in each.
    std::vector<Perm> coset_representatives;
};

/// N_G(K)/K by element enumeration. Throws NotASubgroup.
NormalizerQuotient normalizer_quotient(const PermGroup& g, const PermGroup& k);

/// Every subgroup of g (|g| <= 200), sorted by order then elements.
std::vector<PermGroup> all_subgroups(const PermGroup& g);

/// [E : H(T,sigma)] = [e_hat : base] / [e_hat : e]. Throws NonDivisible.
long degree_bookkeeping(long deg_ehat_over_base, long deg_ehat_over_e);

}  // namespace gforge
