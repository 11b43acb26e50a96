#include "gforge/construct.hpp"

#include <algorithm>

namespace gforge {

namespace {

UniPoly linear(const Field& f, const FieldElem& root) { return UniPoly(f, {-root, f.one()}); }

bool splits_into_distinct_linear_factors(const UniPoly& f, const FactorOptions& options) {
    for (const auto& fac : factor(f, options))
        if (fac.factor.degree() != 1 || fac.multiplicity != 1) return false;
    return true;
}

void require_rational_stem(const UniPoly& stem) {
    if (stem.field().kind() != Field::Kind::Rationals) throw Error(ErrorCode::WrongBase, "the stem must be over Q");
    if (stem.degree() < 1) throw Error(ErrorCode::ConstantPolynomial, "the stem is constant");
    if (!stem.is_monic()) throw Error(ErrorCode::NotMonic, stem.to_string() + " is not monic");
}

}  // namespace

ParamPoly lp_trinomial(const FieldElem& x) {
    const Field& f = x.field();
    const UniPoly t_minus_x(f, {-x, f.one()});
    return ParamPoly(f, {t_minus_x, t_minus_x, UniPoly(f), UniPoly::constant(f.one())});
}

TrinomialFamilyData lp_trinomial_data(const FieldElem& x) {
    const Field& f = x.field();
    TrinomialFamilyData out{lp_trinomial(x), UniPoly(f), UniPoly(f)};
    out.discriminant = discriminant_y(out.poly);
    if (out.discriminant.is_zero()) return out;
    UniPoly part = UniPoly::constant(out.discriminant.leading());
    for (const auto& fac : squarefree_decomposition(out.discriminant))
        if (fac.multiplicity % 2) part *= fac.factor;
    out.squarefree_part = part;
    out.discriminant_nonsquare = part.degree() > 0 || !is_square(part.leading());
    return out;
}

DistinctnessCheck trinomial_distinctness_check(const FieldElem& x1, const FieldElem& x2) {
    if (x1.field() != x2.field()) throw Error(ErrorCode::FieldMismatch, "x1 and x2 lie in different fields");
    DistinctnessCheck out{resultant_y(lp_trinomial(x1).coeffs(), lp_trinomial(x2).coeffs())};
    out.coprime = !out.resultant.is_zero();
    return out;
}

bool admissible_alpha(const FieldElem& alpha) {
    const Field& f = alpha.field();
    if (f.characteristic() == 3) return false;
    for (long long bad : {0, 1, -1, -2})
        if (alpha == f.from_int(bad)) return false;
    if (f.characteristic() != 2 && alpha == f.from_rational(Rational(-1, 2))) return false;
    return !(alpha * alpha + alpha + f.one()).is_zero();
}

SplitTrinomialResult split_trinomial_at(const FieldElem& alpha) {
    const Field& f = alpha.field();
    if (f.characteristic() == 3)
        throw Error(ErrorCode::UnsupportedCharacteristic, "the split trinomial formulas need characteristic != 3");
    if (!admissible_alpha(alpha)) throw Error(ErrorCode::InvalidArgument, "alpha = " + alpha.to_string() + " is not admissible");
    const FieldElem num = -(alpha * alpha) - alpha - f.one();
    const FieldElem den = alpha * alpha + alpha;
    const FieldElem beta = num / den;
    const FieldElem a = num * num * num / (den * den);
    SplitTrinomialResult out{alpha, a, {beta, beta * alpha, beta * (-f.one() - alpha)}, "formula"};
    const UniPoly product = linear(f, out.roots[0]) * linear(f, out.roots[1]) * linear(f, out.roots[2]);
    if (!(product == UniPoly(f, {a, a, f.zero(), f.one()})) || out.roots[0] == out.roots[1] ||
        out.roots[0] == out.roots[2] || out.roots[1] == out.roots[2] || a.is_zero())
        throw Error(ErrorCode::InvalidArgument, "alpha = " + alpha.to_string() + " does not give a split trinomial");
    return out;
}

SplitTrinomialResult split_trinomial(const Field& field) {
    if (field.characteristic() == 3)
        throw Error(ErrorCode::UnsupportedCharacteristic, "the split trinomial formulas need characteristic != 3");
    if (!field.is_finite()) {
        // Order 2, 3, -3, 4, -4, ...
        if (admissible_alpha(field.from_int(2))) return split_trinomial_at(field.from_int(2));
        for (long k = 3;; ++k)
            for (long s : {k, -k})
                if (admissible_alpha(field.from_int(s))) return split_trinomial_at(field.from_int(s));
    }
    for (const auto& alpha : field.elements()) {
        if (!admissible_alpha(alpha)) continue;
        try {
            return split_trinomial_at(alpha);
        } catch (const Error&) {
        }
    }
    const auto elems = field.elements();
    for (const auto& a : elems) {
        if (a.is_zero()) continue;
        std::vector<FieldElem> roots;
        for (const auto& r : elems)
            if ((r * r * r + a * r + a).is_zero()) roots.push_back(r);
        if (roots.size() == 3) return {std::nullopt, a, {roots[0], roots[1], roots[2]}, "search"};
    }
    throw Error(ErrorCode::SplitTrinomialNotFound, "no a with Y^3 + a*Y + a totally split and separable over " + field.name());
}

PaddedFibers build_padded_fibers(const UniPoly& stem, int n, const FactorOptions& options) {
    require_rational_stem(stem);
    if (n < stem.degree())
        throw Error(ErrorCode::NTooSmall, "n = " + std::to_string(n) + " is below deg stem = " + std::to_string(stem.degree()));
    if (!is_irreducible(stem, options)) throw Error(ErrorCode::NotIrreducible, stem.to_string() + " is reducible over Q");
    const Field& q = stem.field();
    PaddedFibers out{stem, UniPoly::constant(q.one()), {}};
    for (long r = 0; static_cast<int>(out.pad_roots.size()) < n - stem.degree(); ++r) {
        if (stem(q.from_int(r)).is_zero()) continue;
        out.pad_roots.push_back(r);
        out.p0 *= linear(q, q.from_int(r));
    }
    for (int i = 0; i < n; ++i) out.p1 *= linear(q, q.from_int(i));
    return out;
}

SnSearchResult search_sn_polynomial(int n, long prime_budget, long attempt_budget, const FactorOptions& options) {
    if (n < 1) throw Error(ErrorCode::BadDegree, "n must be positive");
    const Field q = Field::rationals();
    SnSearchResult out{UniPoly(q), {}, 0};
    auto attempt = [&](const UniPoly& f) {
        if (out.attempts >= attempt_budget)
            throw Error(ErrorCode::SearchBudgetExhausted,
                        "no S_" + std::to_string(n) + " polynomial within " + std::to_string(attempt_budget) + " attempts");
        ++out.attempts;
        if (discriminant(f).is_zero()) return false;
        auto cert = certify_sn(f, prime_budget, options);
        if (!cert.conclusive()) return false;
        out.poly = f;
        out.certificate = std::move(cert);
        return true;
    };

    if (n == 1) {
        attempt(UniPoly::x(q));
        return out;
    }
    std::vector<Integer> first(static_cast<std::size_t>(n) + 1, 0);
    first[0] = -1;
    first[1] = -1;
    first.back() = 1;
    const UniPoly trinomial = from_integers(q, first);
    if (attempt(trinomial)) return out;

    // Height h: every coefficient vector with max |c_i| = h, values ordered 0, 1, -1, 2, -2, ...
    for (long h = 1;; ++h) {
        std::vector<long> values{0};
        for (long v = 1; v <= h; ++v) {
            values.push_back(v);
            values.push_back(-v);
        }
        std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
        for (;;) {
            std::vector<Integer> c;
            long height = 0;
            for (auto i : idx) {
                c.push_back(values[i]);
                height = std::max(height, std::abs(values[i]));
            }
            c.push_back(1);
            if (height == h) {
                const UniPoly f = from_integers(q, c);
                if (!(f == trinomial) && attempt(f)) return out;
            }
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == values.size()) idx[k++] = 0;
            if (k == idx.size()) break;
        }
    }
}

BBCertificate bb_construct(const UniPoly& stem, int n, const BBOptions& options) {
    const PaddedFibers fibers = build_padded_fibers(stem, n, options.factor);
    const Field& q = stem.field();
    BBCertificate cert;
    cert.input_stem = stem;
    cert.target_n = n;
    cert.prime_budget = options.prime_budget;
    cert.pad_roots = fibers.pad_roots;
    cert.fiber0 = fibers.p0;
    if (n == 1) {
        // Every monic linear polynomial is totally split with group S_1.
        cert.fiber1 = fibers.p0;
        cert.fiberA = fibers.p0;
        cert.sn_cert = certify_sn(fibers.p0, options.prime_budget, options.factor);
    } else if (options.q_override) {
        const UniPoly& qy = *options.q_override;
        if (qy.field() != q || qy.degree() != n || !qy.is_monic())
            throw Error(ErrorCode::InvalidArgument, "Q must be a monic degree-" + std::to_string(n) + " polynomial over Q");
        cert.fiber1 = fibers.p1;
        cert.fiberA = qy;
        cert.sn_cert = certify_sn(qy, options.prime_budget, options.factor);
        if (!cert.sn_cert.conclusive())
            throw Error(ErrorCode::InvalidArgument, qy.to_string() + " has no S_" + std::to_string(n) +
                                                        " certificate within the prime budget");
    } else {
        auto found = search_sn_polynomial(n, options.prime_budget, options.attempt_budget, options.factor);
        cert.fiber1 = fibers.p1;
        cert.fiberA = found.poly;
        cert.sn_cert = std::move(found.certificate);
    }
    cert.node_a = q.from_int(2);
    cert.R = lagrange_interpolate_coeffwise({q.zero(), q.one(), cert.node_a}, {cert.fiber0, cert.fiber1, cert.fiberA});
    cert.checks.fiber0_separable = is_separable(cert.fiber0);
    cert.checks.fiber0_contains_stem = (cert.fiber0 % stem).is_zero();
    cert.checks.fiber1_totally_split = splits_into_distinct_linear_factors(cert.fiber1, options.factor);
    cert.checks.nodes_distinct = !(cert.node_a == q.zero()) && !(cert.node_a == q.one());
    return cert;
}

VerifyResult verify_bb_certificate(const BBCertificate& cert, const FactorOptions& options) {
    VerifyResult out;
    auto fail = [&](std::string reason) { out.reasons.push_back(std::move(reason)); };
    try {
        const Field& q = cert.input_stem.field();
        const int n = cert.target_n;
        const std::string sn = "S" + std::to_string(n);
        if (q.kind() != Field::Kind::Rationals || cert.R.field() != q) fail("certificate is not over Q");
        if (!cert.input_stem.is_monic() || cert.input_stem.degree() < 1 || !is_irreducible(cert.input_stem, options))
            fail("stem not monic irreducible");
        for (const auto* f : {&cert.fiber0, &cert.fiber1, &cert.fiberA})
            if (f->degree() != n || !f->is_monic()) fail("fiber not monic of degree " + std::to_string(n));
        if (cert.R.degree_y() != n) fail("R has Y-degree " + std::to_string(cert.R.degree_y()));
        if (cert.node_a == q.zero() || cert.node_a == q.one()) fail("node a coincides with 0 or 1");

        if (!(cert.R.specialize(q.zero()) == cert.fiber0)) fail("node mismatch at T=0");
        if (!(cert.R.specialize(q.one()) == cert.fiber1)) fail("node mismatch at T=1");
        if (!(cert.R.specialize(cert.node_a) == cert.fiberA)) fail("node mismatch at T=a");

        if (cert.fiber0.degree() < 1 || !is_separable(cert.fiber0)) fail("fiber at 0 not separable");
        if (cert.input_stem.degree() >= 1) {
            const auto [cofactor, rem] = divmod(cert.fiber0, cert.input_stem);
            if (!rem.is_zero() || (cofactor.degree() > 0 && !splits_into_distinct_linear_factors(cofactor, options)))
                fail("fiber at 0 is not the stem times linear factors");
        }
        if (cert.fiber1.degree() < 1 || !splits_into_distinct_linear_factors(cert.fiber1, options))
            fail("fiber at 1 not totally split");
        if (cert.fiberA.degree() >= 1 && cert.fiberA.is_monic() && !discriminant(cert.fiberA).is_zero()) {
            const auto sn_cert = certify_sn(cert.fiberA, cert.prime_budget, options);
            if (sn_cert.claimed_group != sn) fail("fiber at a has no " + sn + " certificate");
            if (cert.sn_cert.claimed_group != sn_cert.claimed_group || cert.sn_cert.evidence != sn_cert.evidence)
                fail("recorded " + sn + " certificate does not reproduce");
        } else {
            fail("fiber at a has no " + sn + " certificate");
        }
    } catch (const std::exception& e) {
        fail(e.what());
    }
    out.ok = out.reasons.empty();
    return out;
}

}  // namespace gforge
