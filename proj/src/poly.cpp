#include "gforge/poly.hpp"

#include <algorithm>

#include "bareiss.hpp"

namespace gforge {

namespace {

void require_same(const Field& a, const Field& b) {
    if (!(a == b)) throw Error(ErrorCode::FieldMismatch, a.name() + " vs " + b.name());
}

// Renders c*var^d, with the sign folded into the leading character.
std::string render_term(const std::string& coeff, bool coeff_is_one, bool coeff_is_minus_one, char var, int d) {
    if (d == 0) return coeff;
    std::string mono(1, var);
    if (d > 1) mono += "^" + std::to_string(d);
    if (coeff_is_one) return mono;
    if (coeff_is_minus_one) return "-" + mono;
    return coeff + "*" + mono;
}

std::string join_terms(const std::vector<std::string>& terms) {
    if (terms.empty()) return "0";
    std::string out = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        const std::string& t = terms[i];
        if (!t.empty() && t.front() == '-')
            out += " - " + t.substr(1);
        else
            out += " + " + t;
    }
    return out;
}

}  // namespace

UniPoly::UniPoly(Field field, std::vector<FieldElem> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) require_same(field_, c.field());
    trim();
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const FieldElem& c) { return UniPoly(c.field(), {c}); }

UniPoly UniPoly::monomial(const FieldElem& c, int degree) {
    std::vector<FieldElem> v(static_cast<std::size_t>(degree) + 1, c.field().zero());
    v.back() = c;
    return UniPoly(c.field(), std::move(v));
}

UniPoly UniPoly::x(Field field) { return monomial(field.one(), 1); }

UniPoly UniPoly::from_ints(Field field, std::initializer_list<long long> coeffs) {
    std::vector<FieldElem> v;
    for (long long c : coeffs) v.push_back(field.from_int(c));
    return UniPoly(field, std::move(v));
}

UniPoly UniPoly::from_roots(Field field, const std::vector<FieldElem>& roots) {
    UniPoly out = constant(field.one());
    for (const auto& r : roots) out *= UniPoly(field, {-r, field.one()});
    return out;
}

FieldElem UniPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return field_.zero();
    return coeffs_[static_cast<std::size_t>(i)];
}

FieldElem UniPoly::leading() const { return is_zero() ? field_.zero() : coeffs_.back(); }

FieldElem UniPoly::operator()(const FieldElem& x) const {
    require_same(field_, x.field());
    FieldElem acc = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    std::vector<FieldElem> d;
    for (int i = 1; i <= degree(); ++i) d.push_back(coeffs_[static_cast<std::size_t>(i)] * field_.from_int(i));
    return UniPoly(field_, std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

UniPoly UniPoly::scaled(const FieldElem& c) const {
    std::vector<FieldElem> v = coeffs_;
    for (auto& e : v) e *= c;
    return UniPoly(field_, std::move(v));
}

UniPoly UniPoly::operator-() const {
    std::vector<FieldElem> v = coeffs_;
    for (auto& e : v) e = -e;
    return UniPoly(field_, std::move(v));
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    require_same(field_, rhs.field_);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_.zero());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
    require_same(field_, rhs.field_);
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), field_.zero());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
    require_same(field_, rhs.field_);
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<FieldElem> out(coeffs_.size() + rhs.coeffs_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

int compare(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        const int c = compare(a.coeffs_[static_cast<std::size_t>(i)], b.coeffs_[static_cast<std::size_t>(i)]);
        if (c != 0) return c;
    }
    return 0;
}

std::string UniPoly::to_string(char var) const {
    std::vector<std::string> terms;
    for (int d = degree(); d >= 0; --d) {
        const FieldElem& c = coeffs_[static_cast<std::size_t>(d)];
        if (c.is_zero()) continue;
        const bool minus_one = !field_.is_finite() && c.rational() == -1;
        terms.push_back(render_term(c.to_string(), c.is_one(), minus_one, var, d));
    }
    return join_terms(terms);
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    require_same(a.field(), b.field());
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
    const Field& f = a.field();
    if (a.degree() < b.degree()) return {UniPoly(f), a};
    std::vector<FieldElem> rem = a.coeffs();
    std::vector<FieldElem> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, f.zero());
    const FieldElem inv_lc = b.leading().inverse();
    const auto db = static_cast<std::size_t>(b.degree());
    for (std::size_t i = rem.size(); i-- > db;) {
        if (rem[i].is_zero()) continue;
        const FieldElem c = rem[i] * inv_lc;
        quot[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeffs()[j];
    }
    rem.resize(db);
    return {UniPoly(f, std::move(quot)), UniPoly(f, std::move(rem))};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Xgcd xgcd(const UniPoly& a, const UniPoly& b) {
    const Field& f = a.field();
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(f.one()), s1(f);
    UniPoly t0(f), t1 = UniPoly::constant(f.one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const FieldElem inv = r0.leading().inverse();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

UniPoly pow_mod(UniPoly base, const Integer& exponent, const UniPoly& modulus) {
    const Field& f = modulus.field();
    UniPoly result = UniPoly::constant(f.one()) % modulus;
    base = base % modulus;
    const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % modulus;
        if (mpz_tstbit(exponent.get_mpz_t(), i)) result = (result * base) % modulus;
    }
    return result;
}

UniPoly compose(const UniPoly& f, const UniPoly& inner) {
    UniPoly acc(f.field());
    for (int i = f.degree(); i >= 0; --i) acc = acc * inner + UniPoly::constant(f.coeff(i));
    return acc;
}

// ---------------------------------------------------------------------------

ParamPoly::ParamPoly(Field field, std::vector<UniPoly> coeffs_in_t) : field_(field), coeffs_(std::move(coeffs_in_t)) {
    for (const auto& c : coeffs_) require_same(field_, c.field());
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty() || coeffs_.back().degree() != 0 || !coeffs_.back().leading().is_one()) {
        throw Error(ErrorCode::NotMonic, "parametric polynomial must be monic in Y");
    }
}

ParamPoly ParamPoly::from_fiber(const UniPoly& fiber) {
    std::vector<UniPoly> c;
    for (const auto& e : fiber.coeffs()) c.push_back(UniPoly::constant(e));
    return ParamPoly(fiber.field(), std::move(c));
}

int ParamPoly::degree_t() const noexcept {
    int d = 0;
    for (const auto& c : coeffs_) d = std::max(d, c.degree());
    return d;
}

UniPoly ParamPoly::specialize(const FieldElem& t0) const {
    std::vector<FieldElem> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c(t0));
    return UniPoly(field_, std::move(out));
}

std::vector<UniPoly> ParamPoly::derivative_y() const {
    std::vector<UniPoly> d;
    for (int i = 1; i <= degree_y(); ++i) d.push_back(coeffs_[static_cast<std::size_t>(i)].scaled(field_.from_int(i)));
    while (!d.empty() && d.back().is_zero()) d.pop_back();
    return d;
}

std::string ParamPoly::to_string() const {
    std::vector<std::string> terms;
    for (int d = degree_y(); d >= 0; --d) {
        const UniPoly& c = coeffs_[static_cast<std::size_t>(d)];
        if (c.is_zero()) continue;
        std::size_t nonzero = 0;
        for (const auto& e : c.coeffs()) nonzero += e.is_zero() ? 0 : 1;
        if (c.degree() == 0) {
            const FieldElem& e = c.leading();
            const bool minus_one = !field_.is_finite() && e.rational() == -1;
            terms.push_back(render_term(e.to_string(), e.is_one(), minus_one, 'Y', d));
            continue;
        }
        const std::string inner = c.to_string('T');
        std::string coeff = nonzero > 1 ? "(" + inner + ")" : inner;
        terms.push_back(d == 0 ? coeff : render_term(coeff, false, false, 'Y', d));
    }
    return join_terms(terms);
}

// ---------------------------------------------------------------------------

namespace {

struct FieldOps {
    bool is_zero(const FieldElem& a) const { return a.is_zero(); }
    FieldElem mul(const FieldElem& a, const FieldElem& b) const { return a * b; }
    FieldElem sub(const FieldElem& a, const FieldElem& b) const { return a - b; }
    FieldElem neg(const FieldElem& a) const { return -a; }
    FieldElem exact_div(const FieldElem& a, const FieldElem& b) const { return a / b; }
};

struct PolyOps {
    bool is_zero(const UniPoly& a) const { return a.is_zero(); }
    UniPoly mul(const UniPoly& a, const UniPoly& b) const { return a * b; }
    UniPoly sub(const UniPoly& a, const UniPoly& b) const { return a - b; }
    UniPoly neg(const UniPoly& a) const { return -a; }
    UniPoly exact_div(const UniPoly& a, const UniPoly& b) const { return a / b; }
};

struct IntegerOps {
    bool is_zero(const Integer& a) const { return sgn(a) == 0; }
    Integer mul(const Integer& a, const Integer& b) const { return a * b; }
    Integer sub(const Integer& a, const Integer& b) const { return a - b; }
    Integer neg(const Integer& a) const { return -a; }
    Integer exact_div(const Integer& a, const Integer& b) const {
        Integer q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
};

/// Determinant of a matrix over a field. Over Q each row is scaled to integers
/// and the determinant is taken by integer Bareiss elimination.
FieldElem field_determinant(const std::vector<std::vector<FieldElem>>& m, const Field& f) {
    if (f.is_finite()) return detail::bareiss_determinant(m, f.one(), FieldOps{});
    std::vector<std::vector<Integer>> z;
    Rational scale = 1;
    for (const auto& row : m) {
        Integer l = 1;
        for (const auto& e : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.rational().get_den_mpz_t());
        std::vector<Integer> zr;
        for (const auto& e : row) zr.push_back(e.rational().get_num() * (l / e.rational().get_den()));
        z.push_back(std::move(zr));
        scale *= l;
    }
    const Rational det = Rational(detail::bareiss_determinant(z, Integer(1), IntegerOps{})) / scale;
    return f.from_rational(det);
}

template <class R>
std::vector<std::vector<R>> sylvester(const std::vector<R>& a, const std::vector<R>& b, const R& zero) {
    // a, b ascending; formal degrees are a.size()-1 and b.size()-1.
    const std::size_t m = a.size() - 1, n = b.size() - 1, size = m + n;
    std::vector<std::vector<R>> s(size, std::vector<R>(size, zero));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j <= m; ++j) s[r][r + j] = a[m - j];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= n; ++j) s[n + r][r + j] = b[n - j];
    return s;
}

}  // namespace

FieldElem resultant(const UniPoly& a, const UniPoly& b, int formal_degree_b) {
    require_same(a.field(), b.field());
    const Field& f = a.field();
    if (a.is_zero()) return f.zero();
    if (b.is_zero()) return f.zero();
    if (formal_degree_b < 0) formal_degree_b = b.degree();
    if (b.degree() > formal_degree_b) throw Error(ErrorCode::InvalidArgument, "formal degree below actual degree");
    std::vector<FieldElem> ca = a.coeffs(), cb = b.coeffs();
    cb.resize(static_cast<std::size_t>(formal_degree_b) + 1, f.zero());
    return field_determinant(sylvester(ca, cb, f.zero()), f);
}

UniPoly resultant_y(const std::vector<UniPoly>& a, const std::vector<UniPoly>& b, int formal_degree_b) {
    if (a.empty()) throw Error(ErrorCode::InvalidArgument, "resultant of an empty coefficient list");
    const Field& f = a.front().field();
    std::vector<UniPoly> ca = a, cb = b;
    while (!ca.empty() && ca.back().is_zero()) ca.pop_back();
    while (!cb.empty() && cb.back().is_zero()) cb.pop_back();
    if (ca.empty() || cb.empty()) return UniPoly(f);
    if (formal_degree_b < 0) formal_degree_b = static_cast<int>(cb.size()) - 1;
    if (static_cast<int>(cb.size()) - 1 > formal_degree_b) {
        throw Error(ErrorCode::InvalidArgument, "formal degree below actual degree");
    }
    cb.resize(static_cast<std::size_t>(formal_degree_b) + 1, UniPoly(f));

    // deg_T of the determinant is at most deg_Y(b) * max deg_T(a_i) + deg_Y(a) * max deg_T(b_j).
    auto max_t = [](const std::vector<UniPoly>& c) {
        int d = 0;
        for (const auto& x : c) d = std::max(d, x.degree());
        return d;
    };
    const long bound = static_cast<long>(cb.size() - 1) * max_t(ca) + static_cast<long>(ca.size() - 1) * max_t(cb);
    if (f.is_finite() && f.order() <= static_cast<std::uint64_t>(bound)) {
        const UniPoly one = UniPoly::constant(f.one());
        return detail::bareiss_determinant(sylvester(ca, cb, UniPoly(f)), one, PolyOps{});
    }
    // Evaluate at bound + 1 points and interpolate (Newton form).
    std::vector<FieldElem> xs, ys;
    const auto elems = f.is_finite() ? f.elements() : std::vector<FieldElem>{};
    for (long i = 0; i <= bound; ++i) {
        const FieldElem t = f.is_finite() ? elems[static_cast<std::size_t>(i)] : f.from_int(i);
        std::vector<FieldElem> va, vb;
        for (const auto& x : ca) va.push_back(x(t));
        for (const auto& x : cb) vb.push_back(x(t));
        xs.push_back(t);
        ys.push_back(field_determinant(sylvester(va, vb, f.zero()), f));
    }
    for (std::size_t k = 1; k < xs.size(); ++k)
        for (std::size_t i = xs.size() - 1; i >= k; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - k]);
    UniPoly out(f);
    for (std::size_t i = xs.size(); i-- > 0;) out = out * UniPoly(f, {-xs[i], f.one()}) + UniPoly::constant(ys[i]);
    return out;
}

FieldElem discriminant(const UniPoly& f) {
    const int n = f.degree();
    if (n < 1) throw Error(ErrorCode::ConstantPolynomial, "discriminant of a constant polynomial");
    const UniPoly d = f.derivative();
    if (d.is_zero()) return f.field().zero();
    FieldElem res = resultant(f, d, n - 1) / f.leading();
    return (n * (n - 1) / 2) % 2 ? -res : res;
}

UniPoly discriminant_y(const ParamPoly& f) {
    const int n = f.degree_y();
    if (n < 1) throw Error(ErrorCode::ConstantPolynomial, "discriminant of a polynomial constant in Y");
    const auto d = f.derivative_y();
    if (d.empty()) return UniPoly(f.field());
    UniPoly res = resultant_y(f.coeffs(), d, n - 1);
    return (n * (n - 1) / 2) % 2 ? -res : res;
}

bool is_separable(const UniPoly& f) {
    if (f.degree() < 1) throw Error(ErrorCode::ConstantPolynomial, "separability of a constant polynomial");
    return gcd(f, f.derivative()).degree() == 0;
}

ParamPoly lagrange_interpolate_coeffwise(const std::vector<FieldElem>& nodes, const std::vector<UniPoly>& fibers) {
    if (nodes.size() < 2) throw Error(ErrorCode::InvalidArgument, "interpolation needs at least two nodes");
    if (nodes.size() != fibers.size()) throw Error(ErrorCode::InvalidArgument, "one fiber per node is required");
    const Field f = nodes.front().field();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        require_same(f, nodes[i].field());
        require_same(f, fibers[i].field());
        for (std::size_t j = 0; j < i; ++j)
            if (nodes[i] == nodes[j]) throw Error(ErrorCode::DuplicateNodes, "node " + nodes[i].to_string() + " repeats");
    }
    const int n = fibers.front().degree();
    for (const auto& fib : fibers) {
        if (fib.degree() != n) throw Error(ErrorCode::DegreeMismatch, "fibers must share one degree");
        if (!fib.is_monic()) throw Error(ErrorCode::NonMonicFiber, fib.to_string());
    }
    std::vector<UniPoly> basis;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        UniPoly li = UniPoly::constant(f.one());
        FieldElem denom = f.one();
        for (std::size_t m = 0; m < nodes.size(); ++m) {
            if (m == i) continue;
            li *= UniPoly(f, {-nodes[m], f.one()});
            denom *= nodes[i] - nodes[m];
        }
        basis.push_back(li.scaled(denom.inverse()));
    }
    std::vector<UniPoly> coeffs;
    for (int j = 0; j <= n; ++j) {
        UniPoly c(f);
        for (std::size_t i = 0; i < nodes.size(); ++i) c += basis[i].scaled(fibers[i].coeff(j));
        coeffs.push_back(std::move(c));
    }
    return ParamPoly(f, std::move(coeffs));
}

std::vector<Integer> primitive_integer_part(const UniPoly& f) {
    if (f.field().is_finite()) throw Error(ErrorCode::UnsupportedField, "integer part needs a polynomial over Q");
    Integer den = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
    std::vector<Integer> out;
    Integer content = 0;
    for (const auto& c : f.coeffs()) {
        Integer v = c.rational().get_num() * (den / c.rational().get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    if (out.empty()) return out;
    if (sgn(out.back()) < 0) content = -content;
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    return out;
}

UniPoly from_integers(Field field, const std::vector<Integer>& coeffs) {
    std::vector<FieldElem> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs) v.push_back(field.from_integer(c));
    return UniPoly(field, std::move(v));
}

}  // namespace gforge
