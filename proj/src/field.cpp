#include "gforge/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace gforge {

void check_coefficient_size(const Integer& value) {
    if (mpz_sizeinbase(value.get_mpz_t(), 2) > kMaxCoefficientBits) {
        throw Error(ErrorCode::CoefficientBlowup, "integer exceeds 10^6 decimal digits");
    }
}

void check_coefficient_size(const Rational& value) {
    check_coefficient_size(value.get_num());
    check_coefficient_size(value.get_den());
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    Integer z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

namespace detail {

constexpr std::uint64_t kMaxTableOrder = std::uint64_t{1} << 20;

struct FieldData {
    Field::Kind kind = Field::Kind::Rationals;
    std::uint64_t p = 0;
    unsigned k = 1;
    std::uint64_t q = 0;
    std::vector<std::uint64_t> modulus;
    std::string name;

    // Discrete-log tables; built eagerly for extension fields, lazily for prime fields.
    mutable std::once_flag tables_once;
    mutable std::vector<std::uint32_t> exp_table;  // size q-1
    mutable std::vector<std::uint32_t> log_table;  // size q, log_table[0] unused
    mutable std::uint64_t generator_code = 0;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        if (k == 1) {
            std::uint64_t s = a + b;
            return s >= p ? s - p : s;
        }
        if (p == 2) return a ^ b;
        std::uint64_t out = 0, scale = 1;
        for (unsigned i = 0; i < k; ++i) {
            std::uint64_t d = (a % p + b % p) % p;
            out += d * scale;
            scale *= p;
            a /= p;
            b /= p;
        }
        return out;
    }

    std::uint64_t neg(std::uint64_t a) const {
        if (k == 1) return a == 0 ? 0 : p - a;
        if (p == 2) return a;
        std::uint64_t out = 0, scale = 1;
        for (unsigned i = 0; i < k; ++i) {
            std::uint64_t d = a % p;
            out += (d == 0 ? 0 : p - d) * scale;
            scale *= p;
            a /= p;
        }
        return out;
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        if (a == 0 || b == 0) return 0;
        if (k == 1) {
            return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
        }
        std::uint64_t e = std::uint64_t{log_table[a]} + log_table[b];
        if (e >= q - 1) e -= q - 1;
        return exp_table[e];
    }

    std::uint64_t pow_prime(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1 % p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + name);
        if (k == 1) return pow_prime(a, p - 2);
        return exp_table[(q - 1 - log_table[a]) % (q - 1)];
    }

    // Multiplication of packed vectors mod the modulus, used only to build tables.
    std::uint64_t mul_naive(std::uint64_t a, std::uint64_t b) const {
        std::vector<std::uint64_t> x(k), y(k), prod(2 * k - 1, 0);
        for (unsigned i = 0; i < k; ++i) {
            x[i] = a % p;
            a /= p;
            y[i] = b % p;
            b /= p;
        }
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
        for (std::size_t d = prod.size(); d-- > k;) {
            std::uint64_t c = prod[d];
            if (c == 0) continue;
            for (unsigned i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * modulus[i]) % p;
            prod[d] = 0;
        }
        std::uint64_t out = 0;
        for (unsigned i = k; i-- > 0;) out = out * p + prod[i];
        return out;
    }

    void build_tables() const {
        std::call_once(tables_once, [this] {
            if (q > kMaxTableOrder) {
                if (k > 1) throw Error(ErrorCode::UnsupportedField, name + " exceeds the table cap 2^20");
                generator_code = primitive_root_by_factoring();
                return;
            }
            auto step = [this](std::uint64_t a, std::uint64_t g) {
                return k == 1 ? static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * g % p)
                              : mul_naive(a, g);
            };
            for (std::uint64_t g = (q == 2 ? 1 : 2); g < q; ++g) {
                std::vector<std::uint32_t> powers;
                powers.reserve(q - 1);
                std::uint64_t x = 1;
                do {
                    powers.push_back(static_cast<std::uint32_t>(x));
                    x = step(x, g);
                } while (x != 1 && powers.size() < q);
                if (powers.size() != q - 1) continue;
                generator_code = g;
                exp_table = std::move(powers);
                log_table.assign(q, 0);
                for (std::uint32_t i = 0; i < exp_table.size(); ++i) log_table[exp_table[i]] = i;
                return;
            }
            throw Error(ErrorCode::UnsupportedField, "no primitive element found in " + name);
        });
    }

    std::uint64_t primitive_root_by_factoring() const {
        std::vector<std::uint64_t> primes;
        std::uint64_t m = p - 1;
        for (std::uint64_t d = 2; d * d <= m; ++d) {
            if (m % d == 0) {
                primes.push_back(d);
                while (m % d == 0) m /= d;
            }
        }
        if (m > 1) primes.push_back(m);
        for (std::uint64_t g = 2; g < p; ++g) {
            bool ok = std::all_of(primes.begin(), primes.end(),
                                  [&](std::uint64_t r) { return pow_prime(g, (p - 1) / r) != 1; });
            if (ok) return g;
        }
        return 1;
    }
};

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Brute-force irreducibility over GF(p): no monic divisor of degree <= k/2.
bool divides(const std::vector<std::uint64_t>& d, std::vector<std::uint64_t> f, std::uint64_t p) {
    const std::size_t dd = d.size() - 1;
    for (std::size_t i = f.size(); i-- > dd;) {
        std::uint64_t c = f[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) f[i - dd + j] = (f[i - dd + j] + (p - c) * d[j]) % p;
    }
    return std::all_of(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(dd), [](auto c) { return c == 0; });
}

bool is_irreducible_small(const std::vector<std::uint64_t>& f, std::uint64_t p) {
    const unsigned k = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; 2 * d <= k; ++d) {
        const std::uint64_t count = ipow(p, d);
        for (std::uint64_t n = 0; n < count; ++n) {
            std::vector<std::uint64_t> g(d + 1);
            std::uint64_t m = n;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = m % p;
                m /= p;
            }
            g[d] = 1;
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned k) {
    // Enumeration order makes c_{k-1} the most significant digit, i.e. lexicographic
    // order on (c_{k-1}, ..., c_0).
    const std::uint64_t count = ipow(p, k);
    for (std::uint64_t n = 0; n < count; ++n) {
        std::vector<std::uint64_t> f(k + 1);
        std::uint64_t m = n;
        for (unsigned i = 0; i < k; ++i) {
            f[i] = m % p;
            m /= p;
        }
        f[k] = 1;
        if (f[0] != 0 && is_irreducible_small(f, p)) return f;
    }
    throw Error(ErrorCode::UnsupportedField, "no irreducible modulus found");
}

struct Registry {
    std::mutex mutex;
    std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<FieldData>> fields;
    FieldData rationals;
    Registry() { rationals.name = "Q"; }
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace
}  // namespace detail

Field Field::rationals() { return Field(&detail::registry().rationals); }

Field Field::prime(std::uint64_t p) { return gf(p, 1); }

Field Field::gf(std::uint64_t p, unsigned k) {
    if (!is_prime(p)) throw Error(ErrorCode::UnsupportedField, "characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw Error(ErrorCode::UnsupportedField, "extension degree must be positive");
    if (k > 1) {
        long double approx = 1;
        for (unsigned i = 0; i < k; ++i) approx *= static_cast<long double>(p);
        if (approx > static_cast<long double>(detail::kMaxTableOrder)) {
            throw Error(ErrorCode::UnsupportedField, "extension fields are capped at order 2^20");
        }
    }
    if (p >= (std::uint64_t{1} << 62)) throw Error(ErrorCode::UnsupportedField, "prime too large");
    auto& reg = detail::registry();
    std::lock_guard lock(reg.mutex);
    auto& slot = reg.fields[{p, k}];
    if (!slot) {
        auto data = std::make_unique<detail::FieldData>();
        data->kind = k == 1 ? Kind::PrimeField : Kind::ExtField;
        data->p = p;
        data->k = k;
        data->q = detail::ipow(p, k);
        data->name = "GF(" + std::to_string(data->q) + ")";
        if (k > 1) {
            data->modulus = detail::smallest_irreducible(p, k);
            data->build_tables();
        }
        slot = std::move(data);
    }
    return Field(slot.get());
}

Field Field::finite(std::uint64_t q) {
    if (q < 2) throw Error(ErrorCode::UnsupportedField, "field order must be at least 2");
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        unsigned k = 0;
        std::uint64_t m = q;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        if (m != 1) throw Error(ErrorCode::UnsupportedField, std::to_string(q) + " is not a prime power");
        return gf(p, k);
    }
    return gf(q, 1);
}

Field Field::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    const std::string_view s = trim(text);
    if (s == "Q" || s == "QQ") return rationals();
    auto fail = [&] {
        return ParseError("malformed field spec '" + std::string(text) + "'", 1, 1);
    };
    if (s.size() < 5 || s.substr(0, 3) != "GF(" || s.back() != ')') throw fail();
    const std::string_view inner = trim(s.substr(3, s.size() - 4));
    auto number = [&](std::string_view t) {
        t = trim(t);
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || ptr != t.data() + t.size()) throw fail();
        return v;
    };
    if (auto caret = inner.find('^'); caret != std::string_view::npos) {
        return gf(number(inner.substr(0, caret)), static_cast<unsigned>(number(inner.substr(caret + 1))));
    }
    return finite(number(inner));
}

Field::Kind Field::kind() const noexcept { return data_->kind; }
std::uint64_t Field::characteristic() const noexcept { return data_->p; }
std::uint64_t Field::order() const noexcept { return data_->q; }
unsigned Field::degree() const noexcept { return data_->k; }
const std::vector<std::uint64_t>& Field::modulus() const noexcept { return data_->modulus; }
std::string Field::name() const { return data_->name; }

FieldElem Field::zero() const { return is_finite() ? FieldElem(*this, std::uint64_t{0}) : FieldElem(*this, Rational(0)); }
FieldElem Field::one() const { return is_finite() ? FieldElem(*this, std::uint64_t{1}) : FieldElem(*this, Rational(1)); }

FieldElem Field::from_int(long long value) const {
    if (!is_finite()) return FieldElem(*this, Rational(static_cast<long>(value)));
    const auto p = static_cast<long long>(data_->p);
    long long r = value % p;
    if (r < 0) r += p;
    return FieldElem(*this, static_cast<std::uint64_t>(r));
}

FieldElem Field::from_integer(const Integer& value) const {
    if (!is_finite()) return FieldElem(*this, Rational(value));
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), data_->p);
    return FieldElem(*this, static_cast<std::uint64_t>(r.get_ui()));
}

FieldElem Field::from_rational(const Rational& value) const {
    if (!is_finite()) return FieldElem(*this, value);
    return from_integer(value.get_num()) / from_integer(value.get_den());
}

FieldElem Field::from_code(std::uint64_t code) const {
    if (!is_finite()) throw Error(ErrorCode::UnsupportedField, "codes exist only for finite fields");
    if (code >= data_->q) throw Error(ErrorCode::InvalidArgument, "code out of range for " + name());
    return FieldElem(*this, code);
}

FieldElem Field::generator() const {
    if (!is_finite()) throw Error(ErrorCode::UnsupportedField, "Q has no generator");
    data_->build_tables();
    return FieldElem(*this, data_->generator_code);
}

std::vector<FieldElem> Field::elements() const {
    if (!is_finite()) throw Error(ErrorCode::UnsupportedField, "Q is infinite");
    if (data_->q > detail::kMaxTableOrder) throw Error(ErrorCode::UnsupportedField, "field too large to enumerate");
    std::vector<FieldElem> out;
    out.reserve(data_->q);
    for (std::uint64_t c = 0; c < data_->q; ++c) out.push_back(FieldElem(*this, c));
    return out;
}

// ---------------------------------------------------------------------------

FieldElem::FieldElem(Field field) : field_(field) {
    if (field.is_finite())
        value_ = std::uint64_t{0};
    else
        value_ = Rational(0);
}

FieldElem::FieldElem(Field field, Rational value) : field_(field) {
    value.canonicalize();
    if (field.is_finite()) {
        value_ = field.from_rational(value).code();
    } else {
        check_coefficient_size(value);
        value_ = std::move(value);
    }
}

bool FieldElem::is_zero() const noexcept {
    if (auto c = std::get_if<std::uint64_t>(&value_)) return *c == 0;
    return sgn(std::get<Rational>(value_)) == 0;
}

bool FieldElem::is_one() const noexcept {
    if (auto c = std::get_if<std::uint64_t>(&value_)) return *c == 1;
    return std::get<Rational>(value_) == 1;
}

const Rational& FieldElem::rational() const {
    if (auto r = std::get_if<Rational>(&value_)) return *r;
    throw Error(ErrorCode::UnsupportedField, "element of " + field_.name() + " is not rational");
}

std::uint64_t FieldElem::code() const {
    if (auto c = std::get_if<std::uint64_t>(&value_)) return *c;
    throw Error(ErrorCode::UnsupportedField, "rational element has no finite-field code");
}

std::int64_t FieldElem::log() const {
    const auto c = code();
    if (c == 0) return -1;
    const auto& d = field_.data();
    d.build_tables();
    if (d.log_table.empty()) throw Error(ErrorCode::UnsupportedField, "discrete log unavailable in " + d.name);
    return d.log_table[c];
}

bool FieldElem::in_prime_field() const noexcept {
    if (auto c = std::get_if<std::uint64_t>(&value_)) return *c < field_.characteristic();
    return true;
}

namespace {
void require_same(const Field& a, const Field& b) {
    if (!(a == b)) throw Error(ErrorCode::FieldMismatch, a.name() + " vs " + b.name());
}
}  // namespace

FieldElem FieldElem::operator-() const {
    if (auto c = std::get_if<std::uint64_t>(&value_)) return FieldElem(field_, field_.data().neg(*c));
    FieldElem out(*this);
    out.value_ = Rational(-std::get<Rational>(value_));
    return out;
}

FieldElem& FieldElem::operator+=(const FieldElem& rhs) {
    require_same(field_, rhs.field_);
    if (auto c = std::get_if<std::uint64_t>(&value_)) {
        *c = field_.data().add(*c, std::get<std::uint64_t>(rhs.value_));
    } else {
        auto& r = std::get<Rational>(value_);
        r += std::get<Rational>(rhs.value_);
        check_coefficient_size(r);
    }
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& rhs) {
    require_same(field_, rhs.field_);
    if (auto c = std::get_if<std::uint64_t>(&value_)) {
        const auto& d = field_.data();
        *c = d.add(*c, d.neg(std::get<std::uint64_t>(rhs.value_)));
    } else {
        auto& r = std::get<Rational>(value_);
        r -= std::get<Rational>(rhs.value_);
        check_coefficient_size(r);
    }
    return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& rhs) {
    require_same(field_, rhs.field_);
    if (auto c = std::get_if<std::uint64_t>(&value_)) {
        *c = field_.data().mul(*c, std::get<std::uint64_t>(rhs.value_));
    } else {
        auto& r = std::get<Rational>(value_);
        r *= std::get<Rational>(rhs.value_);
        check_coefficient_size(r);
    }
    return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& rhs) {
    require_same(field_, rhs.field_);
    if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
    if (auto c = std::get_if<std::uint64_t>(&value_)) {
        const auto& d = field_.data();
        *c = d.mul(*c, d.inv(std::get<std::uint64_t>(rhs.value_)));
    } else {
        auto& r = std::get<Rational>(value_);
        r /= std::get<Rational>(rhs.value_);
        check_coefficient_size(r);
    }
    return *this;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    if (auto c = std::get_if<std::uint64_t>(&value_)) return FieldElem(field_, field_.data().inv(*c));
    return FieldElem(field_, Rational(1) / std::get<Rational>(value_));
}

FieldElem FieldElem::pow(const Integer& exponent) const {
    if (sgn(exponent) < 0) return inverse().pow(Integer(-exponent));
    if (auto c = std::get_if<std::uint64_t>(&value_)) {
        const auto& d = field_.data();
        if (*c == 0) return sgn(exponent) == 0 ? field_.one() : field_.zero();
        // a^(q-1) = 1, so reduce the exponent first.
        Integer e;
        mpz_fdiv_r_ui(e.get_mpz_t(), exponent.get_mpz_t(), d.q - 1);
        const std::uint64_t small = e.get_ui();
        if (d.k == 1) return FieldElem(field_, d.pow_prime(*c, small));
        const auto l = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(d.log_table[*c]) * small % (d.q - 1));
        return FieldElem(field_, std::uint64_t{d.exp_table[l]});
    }
    if (!exponent.fits_ulong_p()) throw Error(ErrorCode::CoefficientBlowup, "exponent too large over Q");
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), std::get<Rational>(value_).get_num_mpz_t(), exponent.get_ui());
    mpz_pow_ui(r.get_den_mpz_t(), std::get<Rational>(value_).get_den_mpz_t(), exponent.get_ui());
    check_coefficient_size(r);
    return FieldElem(field_, r);
}

int compare(const FieldElem& a, const FieldElem& b) {
    require_same(a.field_, b.field_);
    if (auto c = std::get_if<std::uint64_t>(&a.value_)) {
        const auto d = std::get<std::uint64_t>(b.value_);
        return *c < d ? -1 : (*c > d ? 1 : 0);
    }
    return cmp(std::get<Rational>(a.value_), std::get<Rational>(b.value_));
}

std::string FieldElem::to_string() const {
    if (auto r = std::get_if<Rational>(&value_)) return r->get_str();
    const auto c = std::get<std::uint64_t>(value_);
    if (c < field_.characteristic()) return std::to_string(c);
    const auto l = log();
    return l == 1 ? std::string("g") : "g^" + std::to_string(l);
}

bool is_square(const FieldElem& a) {
    if (a.is_zero()) return true;
    const Field& f = a.field();
    if (!f.is_finite()) {
        const Rational& r = a.rational();
        if (sgn(r) < 0) return false;
        return mpz_perfect_square_p(r.get_num_mpz_t()) && mpz_perfect_square_p(r.get_den_mpz_t());
    }
    if (f.characteristic() == 2) return true;
    return a.pow(Integer((f.order() - 1) / 2)).is_one();
}

std::optional<FieldElem> sqrt_exact(const FieldElem& a) {
    if (!is_square(a)) return std::nullopt;
    if (a.is_zero()) return a;
    const Field& f = a.field();
    if (!f.is_finite()) {
        Rational r;
        mpz_sqrt(r.get_num_mpz_t(), a.rational().get_num_mpz_t());
        mpz_sqrt(r.get_den_mpz_t(), a.rational().get_den_mpz_t());
        return FieldElem(f, r);
    }
    const std::uint64_t q = f.order();
    if (q % 2 == 0) return a.pow(Integer(q / 2));
    // Tonelli-Shanks over GF(q).
    std::uint64_t s = 0, odd = q - 1;
    while (odd % 2 == 0) {
        odd /= 2;
        ++s;
    }
    FieldElem z = f.one();
    for (std::uint64_t c = 2; c < q; ++c) {
        FieldElem cand = f.from_code(c);
        if (!is_square(cand)) {
            z = cand;
            break;
        }
    }
    FieldElem cpow = z.pow(Integer(odd));
    FieldElem t = a.pow(Integer(odd));
    FieldElem r = a.pow(Integer((odd + 1) / 2));
    std::uint64_t m = s;
    while (!t.is_one()) {
        std::uint64_t i = 0;
        FieldElem t2 = t;
        while (!t2.is_one()) {
            t2 *= t2;
            ++i;
        }
        FieldElem b = cpow;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b *= b;
        m = i;
        cpow = b * b;
        t *= cpow;
        r *= b;
    }
    return r;
}

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
        case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
        case ErrorCode::UnsupportedField: return "UnsupportedField";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::CoefficientBlowup: return "CoefficientBlowup";
        case ErrorCode::DuplicateNodes: return "DuplicateNodes";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::NonMonicFiber: return "NonMonicFiber";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::NotSeparable: return "NotSeparable";
        case ErrorCode::InseparableFamily: return "InseparableFamily";
        case ErrorCode::BadDegree: return "BadDegree";
        case ErrorCode::RamifiedPoint: return "RamifiedPoint";
        case ErrorCode::WrongBase: return "WrongBase";
        case ErrorCode::SplitTrinomialNotFound: return "SplitTrinomialNotFound";
        case ErrorCode::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::NTooSmall: return "NTooSmall";
        case ErrorCode::SearchBudgetExhausted: return "SearchBudgetExhausted";
        case ErrorCode::RingMismatch: return "RingMismatch";
        case ErrorCode::ZeroInput: return "ZeroInput";
        case ErrorCode::InvalidAutomorphism: return "InvalidAutomorphism";
        case ErrorCode::NotASubgroup: return "NotASubgroup";
        case ErrorCode::GroupTooLarge: return "GroupTooLarge";
        case ErrorCode::NonDivisible: return "NonDivisible";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace gforge
