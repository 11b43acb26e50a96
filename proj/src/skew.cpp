#include "gforge/skew.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

#include "expr.hpp"

namespace gforge {

// Quaternions ---------------------------------------------------------------

bool Quaternion::is_zero() const {
    return std::all_of(q_.begin(), q_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

Quaternion Quaternion::conjugate() const { return {q_[0], -q_[1], -q_[2], -q_[3]}; }

Rational Quaternion::norm() const { return q_[0] * q_[0] + q_[1] * q_[1] + q_[2] * q_[2] + q_[3] * q_[3]; }

Quaternion Quaternion::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of the zero quaternion");
    const Rational n = norm();
    const Quaternion c = conjugate();
    return {c[0] / n, c[1] / n, c[2] / n, c[3] / n};
}

Quaternion Quaternion::operator-() const { return {-q_[0], -q_[1], -q_[2], -q_[3]}; }

Quaternion operator+(const Quaternion& x, const Quaternion& y) {
    return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}

Quaternion operator-(const Quaternion& x, const Quaternion& y) {
    return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
}

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
    Quaternion out(x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
                   x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
                   x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
                   x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]);
    for (int i = 0; i < 4; ++i) check_coefficient_size(out[i]);
    return out;
}

std::string Quaternion::to_string() const {
    static const char* const units[] = {"", "i", "j", "k"};
    std::string out;
    for (int u = 0; u < 4; ++u) {
        const Rational& r = q_[static_cast<std::size_t>(u)];
        if (sgn(r) == 0) continue;
        std::string term;
        const Rational mag = abs(r);
        if (u == 0)
            term = mag.get_str();
        else if (mag == 1)
            term = units[u];
        else
            term = mag.get_str() + "*" + units[u];
        if (out.empty())
            out = sgn(r) < 0 ? "-" + term : term;
        else
            out += (sgn(r) < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

// Coefficients --------------------------------------------------------------

namespace {

void require_same_kind(const SkewCoeff& x, const SkewCoeff& y) {
    if (x.is_quaternion() != y.is_quaternion())
        throw Error(ErrorCode::RingMismatch, "mixing quaternion and finite-field coefficients");
}

}  // namespace

bool SkewCoeff::is_zero() const { return is_quaternion() ? quaternion().is_zero() : field_elem().is_zero(); }

SkewCoeff SkewCoeff::inverse() const {
    if (is_quaternion()) return quaternion().inverse();
    return field_elem().inverse();
}

SkewCoeff SkewCoeff::operator-() const {
    if (is_quaternion()) return -quaternion();
    return -field_elem();
}

SkewCoeff operator+(const SkewCoeff& x, const SkewCoeff& y) {
    require_same_kind(x, y);
    if (x.is_quaternion()) return x.quaternion() + y.quaternion();
    return x.field_elem() + y.field_elem();
}

SkewCoeff operator-(const SkewCoeff& x, const SkewCoeff& y) {
    require_same_kind(x, y);
    if (x.is_quaternion()) return x.quaternion() - y.quaternion();
    return x.field_elem() - y.field_elem();
}

SkewCoeff operator*(const SkewCoeff& x, const SkewCoeff& y) {
    require_same_kind(x, y);
    if (x.is_quaternion()) return x.quaternion() * y.quaternion();
    return x.field_elem() * y.field_elem();
}

std::string SkewCoeff::to_string() const { return is_quaternion() ? quaternion().to_string() : field_elem().to_string(); }

bool SkewCoeff::is_atomic() const { return to_string().find(' ') == std::string::npos; }

// Rings ---------------------------------------------------------------------

namespace detail {

struct SkewRingData {
    bool quaternion = false;
    Field field = Field::rationals();
    unsigned power = 0;  // Frobenius x -> x^(p^power)
    Quaternion u, u_inv;
    int order = 1;
    std::string name;

    SkewCoeff apply(const SkewCoeff& c) const {
        if (quaternion) return u * c.quaternion() * u_inv;
        Integer e = 1;
        for (unsigned i = 0; i < power; ++i) e *= static_cast<unsigned long>(field.characteristic());
        return c.field_elem().pow(e);
    }

    SkewCoeff apply(const SkewCoeff& c, long k) const {
        long reduced = k % order;
        if (reduced < 0) reduced += order;
        SkewCoeff out = c;
        for (long i = 0; i < reduced; ++i) out = apply(out);
        return out;
    }

    std::vector<SkewCoeff> generators() const {
        if (quaternion) return {Quaternion::i(), Quaternion::j()};
        return {field.generator()};
    }
};

}  // namespace detail

namespace {

constexpr int kMaxSigmaOrder = 12;

/// Checks the homomorphism identities of sigma on generators and returns its order.
int validate_and_order(const detail::SkewRingData& d) {
    const auto gens = d.generators();
    if (d.quaternion) {
        const SkewCoeff minus_one = Quaternion(-1);
        const SkewCoeff si = d.apply(gens[0]), sj = d.apply(gens[1]);
        if (!(si * si == minus_one) || !(sj * sj == minus_one) || !(si * sj == -(sj * si)) ||
            !(d.apply(SkewCoeff(Quaternion(1))) == SkewCoeff(Quaternion(1))))
            throw Error(ErrorCode::InvalidAutomorphism, "conjugation does not preserve the quaternion relations");
    } else {
        const SkewCoeff g = gens[0], one = d.field.one();
        if (!(d.apply(g * g) == d.apply(g) * d.apply(g)) || !(d.apply(g + one) == d.apply(g) + one) ||
            d.apply(g).is_zero())
            throw Error(ErrorCode::InvalidAutomorphism, "Frobenius power is not a field automorphism");
    }
    for (int n = 1; n <= kMaxSigmaOrder; ++n) {
        bool identity = true;
        for (const auto& g : gens) {
            SkewCoeff x = g;
            for (int i = 0; i < n; ++i) x = d.apply(x);
            identity = identity && x == g;
        }
        if (identity) return n;
    }
    throw Error(ErrorCode::InvalidAutomorphism, "automorphism order exceeds " + std::to_string(kMaxSigmaOrder));
}

std::string trim_copy(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

}  // namespace

SkewRing SkewRing::frobenius(const Field& field, unsigned power) {
    if (!field.is_finite()) throw Error(ErrorCode::UnsupportedField, "Frobenius twists need a finite field");
    auto d = std::make_shared<detail::SkewRingData>();
    d->field = field;
    d->power = power % field.degree();
    d->name = field.name() + ";" + (power == 0 ? std::string("id") : power == 1 ? "frob" : "frob^" + std::to_string(power));
    d->order = validate_and_order(*d);
    return SkewRing(std::move(d));
}

SkewRing SkewRing::quaternion_conjugation(const Quaternion& u) {
    if (u.is_zero()) throw Error(ErrorCode::InvalidAutomorphism, "conjugation by zero");
    auto d = std::make_shared<detail::SkewRingData>();
    d->quaternion = true;
    d->u = u;
    d->u_inv = u.inverse();
    d->name = "H;conj(" + u.to_string() + ")";
    d->order = validate_and_order(*d);
    return SkewRing(std::move(d));
}

SkewRing SkewRing::parse(std::string_view text) {
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) throw ParseError("expected '<coefficients>;<automorphism>'", 1, 1);
    const std::string coeff = trim_copy(text.substr(0, semi));
    const std::string sigma = trim_copy(text.substr(semi + 1));
    const int sigma_col = static_cast<int>(semi) + 2;
    if (coeff == "H") {
        if (sigma == "id") return quaternion_conjugation(Quaternion(1));
        if (sigma.rfind("conj(", 0) != 0 || sigma.back() != ')')
            throw ParseError("expected conj(<quaternion>) or id", 1, sigma_col);
        const std::string inner = sigma.substr(5, sigma.size() - 6);
        const SkewRing plain = quaternion_conjugation(Quaternion(1));
        const SkewCoeff u = parse_skewcoeff(inner, plain);
        return quaternion_conjugation(u.quaternion());
    }
    const Field field = Field::parse(coeff);
    if (!field.is_finite()) throw Error(ErrorCode::UnsupportedField, "skew rings over " + coeff + " are not supported");
    if (sigma == "id") return frobenius(field, 0);
    if (sigma == "frob") return frobenius(field, 1);
    if (sigma.rfind("frob^", 0) == 0) {
        const std::string e = sigma.substr(5);
        if (e.empty() || e.size() > 6 || !std::all_of(e.begin(), e.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("expected a non-negative Frobenius exponent", 1, sigma_col + 5);
        return frobenius(field, static_cast<unsigned>(std::stoul(e)));
    }
    throw ParseError("unknown automorphism '" + sigma + "'", 1, sigma_col);
}

bool SkewRing::is_quaternion() const { return d_->quaternion; }

const Field& SkewRing::field() const {
    if (d_->quaternion) throw Error(ErrorCode::UnsupportedField, "quaternion rings have no base field handle");
    return d_->field;
}

int SkewRing::order() const { return d_->order; }

SkewCoeff SkewRing::sigma(const SkewCoeff& c, long k) const {
    if (!contains(c)) throw Error(ErrorCode::RingMismatch, c.to_string() + " is not in " + to_string());
    return d_->apply(c, k);
}

std::vector<SkewCoeff> SkewRing::generators() const { return d_->generators(); }

bool SkewRing::central_fixed(const SkewCoeff& c) const {
    if (d_->quaternion) {
        const Quaternion& q = c.quaternion();
        return sgn(q[1]) == 0 && sgn(q[2]) == 0 && sgn(q[3]) == 0;
    }
    return d_->apply(c) == c;
}

SkewCoeff SkewRing::zero() const { return from_int(0); }
SkewCoeff SkewRing::one() const { return from_int(1); }
SkewCoeff SkewRing::from_int(long long v) const { return from_rational(Rational(static_cast<long>(v))); }

SkewCoeff SkewRing::from_rational(const Rational& v) const {
    if (d_->quaternion) return Quaternion(v);
    return d_->field.from_rational(v);
}

bool SkewRing::contains(const SkewCoeff& c) const {
    if (d_->quaternion) return c.is_quaternion();
    return !c.is_quaternion() && c.field_elem().field() == d_->field;
}

std::string SkewRing::to_string() const { return d_->name; }

bool operator==(const SkewRing& a, const SkewRing& b) {
    if (a.d_ == b.d_) return true;
    if (a.d_->quaternion != b.d_->quaternion) return false;
    if (!a.d_->quaternion) return a.d_->field == b.d_->field && a.d_->power == b.d_->power;
    for (const auto& g : a.generators())
        if (!(a.d_->apply(g) == b.d_->apply(g))) return false;
    return true;
}

// Skew polynomials ----------------------------------------------------------

SkewPoly::SkewPoly(SkewRing ring, std::vector<SkewCoeff> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (!ring_.contains(c)) throw Error(ErrorCode::RingMismatch, c.to_string() + " is not in " + ring_.to_string());
    trim();
}

void SkewPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

SkewPoly SkewPoly::constant(const SkewRing& ring, const SkewCoeff& c) { return SkewPoly(ring, {c}); }

SkewPoly SkewPoly::monomial(const SkewRing& ring, const SkewCoeff& c, int m) {
    std::vector<SkewCoeff> v(static_cast<std::size_t>(m), ring.zero());
    v.push_back(c);
    return SkewPoly(ring, std::move(v));
}

SkewCoeff SkewPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return ring_.zero();
    return coeffs_[static_cast<std::size_t>(i)];
}

SkewCoeff SkewPoly::leading() const {
    if (is_zero()) throw Error(ErrorCode::ZeroInput, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

SkewPoly SkewPoly::operator-() const {
    SkewPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

namespace {

void require_same_ring(const SkewPoly& a, const SkewPoly& b) {
    if (!(a.ring() == b.ring()))
        throw Error(ErrorCode::RingMismatch, a.ring().to_string() + " vs " + b.ring().to_string());
}

}  // namespace

SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
    require_same_ring(a, b);
    std::vector<SkewCoeff> c;
    const int n = std::max(a.degree(), b.degree());
    for (int i = 0; i <= n; ++i) c.push_back(a.coeff(i) + b.coeff(i));
    return SkewPoly(a.ring(), std::move(c));
}

SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }

std::string SkewPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int m = degree(); m >= 0; --m) {
        const SkewCoeff& c = coeffs_[static_cast<std::size_t>(m)];
        if (c.is_zero()) continue;
        const std::string power = m == 1 ? "T" : "T^" + std::to_string(m);
        std::string term;
        const std::string s = c.to_string();
        if (m == 0)
            term = c.is_atomic() ? s : "(" + s + ")";
        else if (s == "1")
            term = power;
        else if (s == "-1")
            term = "-" + power;
        else
            term = (c.is_atomic() ? s : "(" + s + ")") + "*" + power;
        if (out.empty())
            out = term;
        else if (term.front() == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g) {
    require_same_ring(f, g);
    if (f.is_zero() || g.is_zero()) return SkewPoly(f.ring());
    const SkewRing& ring = f.ring();
    std::vector<SkewCoeff> out(static_cast<std::size_t>(f.degree() + g.degree() + 1), ring.zero());
    std::vector<SkewCoeff> twisted = g.coeffs();  // sigma^i applied to g's coefficients
    for (int i = 0; i <= f.degree(); ++i) {
        if (i > 0)
            for (auto& c : twisted) c = ring.sigma(c);
        const SkewCoeff& a = f.coeffs()[static_cast<std::size_t>(i)];
        if (a.is_zero()) continue;
        for (int j = 0; j <= g.degree(); ++j) {
            auto& slot = out[static_cast<std::size_t>(i + j)];
            slot = slot + a * twisted[static_cast<std::size_t>(j)];
        }
    }
    return SkewPoly(ring, std::move(out));
}

std::pair<SkewPoly, SkewPoly> right_divide(const SkewPoly& a, const SkewPoly& b) {
    require_same_ring(a, b);
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero skew polynomial");
    const SkewRing& ring = a.ring();
    SkewPoly q(ring), r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int m = r.degree() - b.degree();
        const SkewCoeff c = r.leading() * ring.sigma(b.leading(), m).inverse();
        const SkewPoly term = SkewPoly::monomial(ring, c, m);
        q = q + term;
        r = r - skew_mul(term, b);
    }
    return {q, r};
}

std::pair<SkewPoly, SkewPoly> left_divide(const SkewPoly& a, const SkewPoly& b) {
    require_same_ring(a, b);
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero skew polynomial");
    const SkewRing& ring = a.ring();
    SkewPoly q(ring), r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int m = r.degree() - b.degree();
        const SkewCoeff c = ring.sigma(b.leading().inverse() * r.leading(), -b.degree());
        const SkewPoly term = SkewPoly::monomial(ring, c, m);
        q = q + term;
        r = r - skew_mul(b, term);
    }
    return {q, r};
}

std::pair<SkewPoly, SkewPoly> ore_witness(const SkewPoly& x, const SkewPoly& y) {
    require_same_ring(x, y);
    if (x.is_zero() || y.is_zero()) throw Error(ErrorCode::ZeroInput, "Ore witnesses need nonzero inputs");
    const SkewRing& ring = x.ring();
    // Invariant: r_i = x*u_i + y*v_i.
    SkewPoly r0 = x, r1 = y;
    SkewPoly u0 = SkewPoly::constant(ring, ring.one()), u1(ring);
    SkewPoly v0(ring), v1 = SkewPoly::constant(ring, ring.one());
    while (!r1.is_zero()) {
        auto [q, rem] = left_divide(r0, r1);
        SkewPoly u2 = u0 - skew_mul(u1, q), v2 = v0 - skew_mul(v1, q);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    // 0 = x*u1 + y*v1, so x*u1 = y*(-v1).
    SkewPoly r = u1, s = -v1;
    const SkewPoly lhs = skew_mul(x, r);
    if (lhs.is_zero() || !(lhs == skew_mul(y, s)))
        throw Error(ErrorCode::InvalidArgument, "Ore witness failed re-verification");
    return {r, s};
}

bool center_test(const SkewPoly& f) {
    const SkewRing& ring = f.ring();
    const SkewPoly t = SkewPoly::monomial(ring, ring.one(), 1);
    if (!(skew_mul(f, t) == skew_mul(t, f))) return false;
    for (const auto& g : ring.generators()) {
        const SkewPoly c = SkewPoly::constant(ring, g);
        if (!(skew_mul(f, c) == skew_mul(c, f))) return false;
    }
    return true;
}

// Skew text -----------------------------------------------------------------

namespace {

struct SkewAlgebra {
    SkewRing ring;

    SkewPoly constant(const SkewCoeff& c) const { return SkewPoly::constant(ring, c); }

    SkewPoly number(const Integer& n, const detail::Expr&) const { return constant(ring.from_rational(Rational(n))); }

    SkewPoly symbol(const std::string& s, const detail::Expr& e) const {
        if (s == "T") return SkewPoly::monomial(ring, ring.one(), 1);
        if (ring.is_quaternion()) {
            if (s == "i") return constant(Quaternion::i());
            if (s == "j") return constant(Quaternion::j());
            if (s == "k") return constant(Quaternion::k());
        } else if (s == "g") {
            return constant(ring.field().generator());
        }
        throw ParseError("unknown symbol '" + s + "' in " + ring.to_string(), e.line, e.column);
    }

    SkewPoly add(const SkewPoly& a, const SkewPoly& b) const { return a + b; }
    SkewPoly sub(const SkewPoly& a, const SkewPoly& b) const { return a - b; }
    SkewPoly neg(const SkewPoly& a) const { return -a; }
    SkewPoly mul(const SkewPoly& a, const SkewPoly& b) const { return skew_mul(a, b); }

    SkewPoly div(const SkewPoly& a, const SkewPoly& b, const detail::Expr& e) const {
        if (b.degree() > 0) throw ParseError("division is only defined by constants", e.line, e.column);
        if (b.is_zero()) throw ParseError("division by zero", e.line, e.column);
        return skew_mul(a, constant(b.leading().inverse()));
    }

    SkewPoly pow(const SkewPoly& a, long exponent, const detail::Expr& e) const {
        if (exponent < 0) {
            if (a.degree() != 0) throw ParseError("negative powers need a nonzero constant base", e.line, e.column);
            return pow(constant(a.leading().inverse()), -exponent, e);
        }
        SkewPoly out = constant(ring.one());
        for (long i = 0; i < exponent; ++i) out = skew_mul(out, a);
        return out;
    }
};

}  // namespace

SkewPoly parse_skewpoly(std::string_view text, const SkewRing& ring) {
    auto expr = detail::parse_expression(text);
    SkewAlgebra alg{ring};
    return detail::evaluate(*expr, alg);
}

SkewCoeff parse_skewcoeff(std::string_view text, const SkewRing& ring) {
    const SkewPoly p = parse_skewpoly(text, ring);
    if (p.degree() > 0) throw ParseError("expected a coefficient, got '" + std::string(text) + "'", 1, 1);
    return p.coeff(0);
}

// Permutation groups --------------------------------------------------------

Perm compose(const Perm& p, const Perm& q) {
    if (p.size() != q.size()) throw Error(ErrorCode::InvalidArgument, "permutations of different degrees");
    Perm out(p.size());
    for (std::size_t x = 0; x < q.size(); ++x) out[x] = p[static_cast<std::size_t>(q[x])];
    return out;
}

Perm inverse(const Perm& p) {
    Perm out(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) out[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
    return out;
}

Perm identity_perm(int degree) {
    Perm out(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) out[static_cast<std::size_t>(i)] = i;
    return out;
}

Perm parse_perm(std::string_view text, int degree) {
    Perm out = identity_perm(degree);
    std::vector<bool> used(static_cast<std::size_t>(degree), false);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& msg) -> void { throw ParseError(msg, 1, static_cast<int>(pos) + 1); };
    skip();
    if (pos == text.size()) fail("empty permutation");
    while (pos < text.size()) {
        if (text[pos] != '(') fail("expected '('");
        ++pos;
        std::vector<int> cycle;
        for (;;) {
            skip();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a point");
            int v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + (text[pos] - '0');
                if (v > degree) fail("point exceeds the degree " + std::to_string(degree));
                ++pos;
            }
            if (v < 1) fail("points are numbered from 1");
            if (used[static_cast<std::size_t>(v - 1)]) fail("point " + std::to_string(v) + " repeats");
            used[static_cast<std::size_t>(v - 1)] = true;
            cycle.push_back(v - 1);
            skip();
            if (pos < text.size() && text[pos] == ',') ++pos;
        }
        for (std::size_t i = 0; i < cycle.size(); ++i)
            out[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
        skip();
    }
    return out;
}

std::string perm_to_string(const Perm& p) {
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (seen[x] || p[x] == static_cast<int>(x)) continue;
        out += "(";
        for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(p[y])) {
            seen[y] = true;
            if (y != x) out += " ";
            out += std::to_string(y + 1);
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

PermGroup PermGroup::generate(int degree, const std::vector<Perm>& generators) {
    PermGroup g;
    g.degree_ = degree;
    for (const auto& p : generators) {
        if (static_cast<int>(p.size()) != degree) throw Error(ErrorCode::InvalidArgument, "generator of the wrong degree");
        g.generators_.push_back(p);
    }
    std::set<Perm> seen{identity_perm(degree)};
    std::vector<Perm> frontier{identity_perm(degree)};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& x : frontier)
            for (const auto& s : g.generators_) {
                Perm y = compose(s, x);
                if (seen.insert(y).second) {
                    if (seen.size() > kMaxGroupOrder)
                        throw Error(ErrorCode::GroupTooLarge, "group order exceeds " + std::to_string(kMaxGroupOrder));
                    next.push_back(std::move(y));
                }
            }
        frontier = std::move(next);
    }
    g.elements_.assign(seen.begin(), seen.end());
    return g;
}

PermGroup PermGroup::symmetric(int n) {
    std::vector<Perm> gens;
    if (n >= 2) {
        Perm t = identity_perm(n);
        std::swap(t[0], t[1]);
        gens.push_back(t);
        Perm c(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = (i + 1) % n;
        gens.push_back(c);
    }
    return generate(n, gens);
}

PermGroup PermGroup::parse(std::string_view generators, int degree) {
    std::vector<Perm> gens;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= generators.size(); ++i) {
        const bool end = i == generators.size();
        if (!end && generators[i] == '(') ++depth;
        if (!end && generators[i] == ')') --depth;
        if (end || (generators[i] == ',' && depth == 0)) {
            const std::string piece = trim_copy(generators.substr(start, i - start));
            if (!piece.empty()) gens.push_back(parse_perm(piece, degree));
            start = i + 1;
        }
    }
    return generate(degree, gens);
}

bool PermGroup::contains(const Perm& p) const { return std::binary_search(elements_.begin(), elements_.end(), p); }

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
    if (degree_ != g.degree_) return false;
    return std::all_of(elements_.begin(), elements_.end(), [&](const Perm& p) { return g.contains(p); });
}

bool PermGroup::is_normal_in(const PermGroup& g) const {
    if (!is_subgroup_of(g)) return false;
    for (const auto& x : g.generators_)
        for (const auto& k : generators_)
            if (!contains(compose(compose(x, k), inverse(x)))) return false;
    return true;
}

NormalizerQuotient normalizer_quotient(const PermGroup& g, const PermGroup& k) {
    if (!k.is_subgroup_of(g)) throw Error(ErrorCode::NotASubgroup, "K is not contained in G");
    std::vector<Perm> normalizer;
    for (const auto& x : g.elements()) {
        const Perm xi = inverse(x);
        bool normalizes = true;
        for (const auto& s : k.generators())
            if (!k.contains(compose(compose(x, s), xi))) {
                normalizes = false;
                break;
            }
        if (normalizes) normalizer.push_back(x);
    }
    NormalizerQuotient out;
    out.normalizer_order = normalizer.size();
    out.order = normalizer.size() / k.order();
    std::set<Perm> covered;
    for (const auto& x : normalizer) {  // sorted, so the first uncovered element is its coset's minimum
        if (covered.count(x)) continue;
        out.coset_representatives.push_back(x);
        for (const auto& y : k.elements()) covered.insert(compose(x, y));
    }
    return out;
}

std::vector<PermGroup> all_subgroups(const PermGroup& g) {
    if (g.order() > 200) throw Error(ErrorCode::GroupTooLarge, "subgroup enumeration is capped at order 200");
    std::map<std::vector<Perm>, PermGroup> found;
    std::vector<PermGroup> work;
    auto add = [&](PermGroup h) {
        if (found.emplace(h.elements(), h).second) work.push_back(std::move(h));
    };
    add(PermGroup::generate(g.degree(), {}));
    for (const auto& x : g.elements()) add(PermGroup::generate(g.degree(), {x}));
    while (!work.empty()) {
        PermGroup h = std::move(work.back());
        work.pop_back();
        for (const auto& x : g.elements()) {
            if (h.contains(x)) continue;
            auto gens = h.generators();
            gens.push_back(x);
            add(PermGroup::generate(g.degree(), gens));
        }
    }
    std::vector<PermGroup> out;
    for (auto& [elems, h] : found) out.push_back(h);
    std::stable_sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
    return out;
}

long degree_bookkeeping(long deg_ehat_over_base, long deg_ehat_over_e) {
    if (deg_ehat_over_base < 1 || deg_ehat_over_e < 1) throw Error(ErrorCode::InvalidArgument, "degrees must be positive");
    if (deg_ehat_over_base % deg_ehat_over_e != 0)
        throw Error(ErrorCode::NonDivisible, std::to_string(deg_ehat_over_e) + " does not divide " +
                                                 std::to_string(deg_ehat_over_base));
    return deg_ehat_over_base / deg_ehat_over_e;
}

}  // namespace gforge
