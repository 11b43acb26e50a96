#include "gforge/galois.hpp"

#include <algorithm>
#include <numeric>

namespace gforge {

namespace {

std::string sn_label(int n) { return "S" + std::to_string(n); }

bool is_prime_number(long n) { return n >= 2 && is_prime(static_cast<std::uint64_t>(n)); }

/// Representative of the square class of a nonzero integer: square factors of
/// primes below the trial bound are stripped, as is a perfect-square cofactor.
Integer square_class(Integer n) {
    const int sign = sgn(n);
    n = abs(n);
    Integer out = 1;
    for (unsigned long p = 2; p < 100'000 && p * p <= n; ++p) {
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e % 2) out *= p;
    }
    if (!mpz_perfect_square_p(n.get_mpz_t())) out *= n;
    return sign * out;
}

Integer integer_value(const FieldElem& e) {
    const Rational& r = e.rational();
    if (r.get_den() != 1) throw Error(ErrorCode::InvalidArgument, "expected an integer, got " + e.to_string());
    return r.get_num();
}

}  // namespace

bool unramified_at(const ParamPoly& a, const FieldElem& t0) {
    const UniPoly disc = discriminant_y(a);
    if (disc.is_zero()) throw Error(ErrorCode::InseparableFamily, "disc_Y vanishes identically for " + a.to_string());
    if (t0.field() != a.field()) throw Error(ErrorCode::FieldMismatch, "t0 is not in " + a.field().name());
    return !disc(t0).is_zero();
}

SpecializationReport specialize_at(const ParamPoly& a, const FieldElem& t0, const FactorOptions& options) {
    if (t0.field() != a.field()) throw Error(ErrorCode::FieldMismatch, "t0 is not in " + a.field().name());
    SpecializationReport report;
    report.t0 = t0;
    const UniPoly disc = discriminant_y(a);
    report.unramified = !disc.is_zero() && !disc(t0).is_zero();
    const UniPoly fiber = a.specialize(t0);
    int total = 0;
    if (fiber.degree() > 0) {
        for (auto& [g, m] : factor(fiber, options)) {
            report.fibers.push_back({g, g.degree(), m});
            total += g.degree() * m;
        }
    }
    report.degree_sum_ok = total == a.degree_y();
    return report;
}

std::vector<int> cycle_type_mod(const UniPoly& f, std::uint64_t p) {
    const Field fp = Field::prime(p);
    std::vector<FieldElem> c;
    for (const auto& x : f.coeffs()) c.push_back(fp.from_integer(integer_value(x)));
    auto degrees = factor_degrees(UniPoly(fp, std::move(c)));
    std::reverse(degrees.begin(), degrees.end());
    return degrees;
}

UniPoly integral_monic_model(const UniPoly& f) {
    if (f.field().kind() != Field::Kind::Rationals) throw Error(ErrorCode::WrongBase, "expected a polynomial over Q");
    if (!f.is_monic()) throw Error(ErrorCode::NotMonic, f.to_string() + " is not monic");
    Integer d = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.rational().get_den_mpz_t());
    // d^n f(Y/d) has coefficients d^(n-i) c_i.
    const int n = f.degree();
    std::vector<FieldElem> out;
    Integer scale = 1;
    std::vector<Integer> powers(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        powers[static_cast<std::size_t>(i)] = scale;
        scale *= d;
    }
    for (int i = 0; i <= n; ++i)
        out.push_back(f.coeff(i) * f.field().from_integer(powers[static_cast<std::size_t>(n - i)]));
    return UniPoly(f.field(), std::move(out));
}

GroupCertificate cubic_galois_group(const UniPoly& f, const FactorOptions& options) {
    if (f.degree() != 3) throw Error(ErrorCode::BadDegree, "expected a cubic, got degree " + std::to_string(f.degree()));
    if (!is_separable(f)) throw Error(ErrorCode::NotSeparable, f.to_string() + " is not separable");
    GroupCertificate cert;
    const FieldElem disc = discriminant(f);
    cert.discriminant = disc;
    const auto degrees = factor_degrees(f, options);
    if (degrees.size() > 1) {
        cert.split_type = degrees;
        cert.claimed_group = degrees.size() == 3 ? "C1" : "C2";
        cert.reason = "reducible";
        return cert;
    }
    const std::uint64_t ch = f.field().characteristic();
    if (ch == 2 || ch == 3) {
        cert.claimed_group = "inconclusive";
        cert.reason = "characteristic " + std::to_string(ch) + " is not covered by the discriminant criterion";
        return cert;
    }
    if (auto root = sqrt_exact(disc)) {
        cert.claimed_group = "C3";
        cert.reason = "irreducible, discriminant is a square";
        cert.discriminant_is_square = true;
        cert.square_class_witness = *root;
        return cert;
    }
    cert.claimed_group = "S3";
    cert.reason = "irreducible, discriminant is not a square";
    cert.discriminant_is_square = false;
    if (f.field().is_finite()) {
        cert.square_class_witness = disc;
    } else {
        const Rational& r = disc.rational();
        cert.square_class_witness = f.field().from_integer(square_class(r.get_num() * r.get_den()));
    }
    return cert;
}

GroupCertificate certify_sn(const UniPoly& f, long prime_budget, const FactorOptions& options) {
    if (f.field().kind() != Field::Kind::Rationals) throw Error(ErrorCode::WrongBase, "certify_sn works over Q");
    if (f.degree() < 1) throw Error(ErrorCode::BadDegree, "expected a nonconstant polynomial");
    if (!f.is_monic()) throw Error(ErrorCode::NotMonic, f.to_string() + " is not monic");
    const UniPoly g = integral_monic_model(f);
    const FieldElem disc = discriminant(g);
    if (disc.is_zero()) throw Error(ErrorCode::NotSeparable, f.to_string() + " is not separable");

    const int n = g.degree();
    GroupCertificate cert;
    cert.discriminant = disc;
    if (n == 1) {
        cert.claimed_group = sn_label(1);
        cert.reason = "degree 1";
        return cert;
    }
    const auto degrees = factor_degrees(g, options);
    if (degrees.size() > 1) {
        cert.claimed_group = "inconclusive";
        cert.reason = "reducible";
        cert.split_type = degrees;
        return cert;
    }
    if (n == 2) {
        cert.claimed_group = sn_label(2);
        cert.reason = "irreducible quadratic";
        return cert;
    }

    const Integer d = abs(integer_value(disc));
    std::optional<CycleEvidence> transposition, long_cycle;
    for (long p = 2; p <= prime_budget; ++p) {
        if (!is_prime_number(p)) continue;
        ++cert.budget_used;
        if (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        const auto type = cycle_type_mod(g, static_cast<std::uint64_t>(p));
        // One 2-cycle with every other cycle odd: an odd power is a transposition.
        if (!transposition && std::count(type.begin(), type.end(), 2) == 1 &&
            std::all_of(type.begin(), type.end(), [](int c) { return c == 2 || c % 2 == 1; }))
            transposition = CycleEvidence{static_cast<std::uint64_t>(p), type};
        // A prime cycle length above n/2 is coprime to every other length.
        if (!long_cycle && std::any_of(type.begin(), type.end(), [n](int c) { return 2 * c > n && is_prime_number(c); }))
            long_cycle = CycleEvidence{static_cast<std::uint64_t>(p), type};
        if (transposition && long_cycle) break;
    }
    if (transposition && long_cycle) {
        cert.claimed_group = sn_label(n);
        cert.reason = "irreducible, with a transposition and a prime cycle longer than n/2";
        cert.evidence.push_back(*transposition);
        if (long_cycle->prime != transposition->prime) cert.evidence.push_back(*long_cycle);
        std::sort(cert.evidence.begin(), cert.evidence.end(),
                  [](const CycleEvidence& a, const CycleEvidence& b) { return a.prime < b.prime; });
        return cert;
    }
    cert.claimed_group = "inconclusive";
    cert.reason = transposition ? "no long prime cycle within the prime budget"
                                : "no transposition within the prime budget";
    if (transposition) cert.evidence.push_back(*transposition);
    if (long_cycle) cert.evidence.push_back(*long_cycle);
    return cert;
}

std::vector<DecompositionEntry> frobenius_decomposition(const ParamPoly& a, const FieldElem& t0,
                                                        const FactorOptions& options) {
    const Field& field = a.field();
    if (!field.is_finite()) throw Error(ErrorCode::WrongBase, "decomposition groups are computed over finite bases only");
    if (t0.field() != field) throw Error(ErrorCode::FieldMismatch, "t0 is not in " + field.name());
    const UniPoly fiber = a.specialize(t0);
    if (fiber.degree() < 1) throw Error(ErrorCode::ConstantPolynomial, "the fiber is constant");
    if (!is_separable(fiber)) throw Error(ErrorCode::RamifiedPoint, "fiber " + fiber.to_string() + " is not separable");

    const Integer q = Integer(std::to_string(field.order()));
    std::vector<DecompositionEntry> out;
    for (const auto& fac : factor(fiber, options)) {
        const UniPoly& h = fac.factor;
        const UniPoly y = UniPoly::x(field) % h;
        UniPoly x = y;
        int order = 0;
        do {
            x = pow_mod(x, q, h);
            ++order;
        } while (!(x == y));
        out.push_back({h, h.degree(), order});
    }
    return out;
}

}  // namespace gforge
