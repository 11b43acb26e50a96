// Acceptance suite: one PASS/FAIL line per criterion, each with a wall-clock limit.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "gforge/construct.hpp"
#include "gforge/skew.hpp"
#include "gforge/text.hpp"
#include "oracles.hpp"
#include "skew_oracles.hpp"

using namespace gforge;

namespace {

const Field Q = Field::rationals();

/// Collects the first failure of a criterion.
class Check {
public:
    void operator()(bool ok, const std::string& what) {
        ++count_;
        if (!ok && failure_.empty()) failure_ = what;
    }
    const std::string& failure() const { return failure_; }
    long count() const { return count_; }

private:
    std::string failure_;
    long count_ = 0;
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<void(Check&)> body;
};

std::string str(const UniPoly& p) { return p.to_string(); }

// 1 -------------------------------------------------------------------------

void split_trinomial_suite(Check& check) {
    const auto anchor = split_trinomial_at(Q.from_int(2));
    check(anchor.a == Q.from_rational(Rational(-343, 36)), "anchor a for alpha = 2");
    check(anchor.roots[0] == Q.from_rational(Rational(-7, 6)) && anchor.roots[1] == Q.from_rational(Rational(-7, 3)) &&
              anchor.roots[2] == Q.from_rational(Rational(7, 2)),
          "anchor roots for alpha = 2");

    // Deterministic enumeration of rationals of height <= 50.
    std::set<Rational> seen;
    int tested = 0;
    for (long h = 1; h <= 50 && tested < 1000; ++h)
        for (long num = -h; num <= h && tested < 1000; ++num)
            for (long den = 1; den <= h && tested < 1000; ++den) {
                if (std::max(std::abs(num), den) != h) continue;
                const Rational al(num, den);
                if (!seen.insert(al).second) continue;
                const FieldElem alpha = Q.from_rational(al);
                if (!admissible_alpha(alpha)) continue;
                ++tested;
                const auto r = split_trinomial_at(alpha);
                const Rational n = -al * al - al - 1, d = al * al + al;
                const Rational beta = n / d, a = n * n * n / (d * d);
                const UniPoly y = UniPoly::x(Q);
                const UniPoly product = (y - UniPoly::constant(Q.from_rational(beta))) *
                                        (y - UniPoly::constant(Q.from_rational(beta * al))) *
                                        (y - UniPoly::constant(Q.from_rational(beta * (-1 - al))));
                const FieldElem ae = Q.from_rational(a);
                check(product == UniPoly(Q, {ae, ae, Q.zero(), Q.one()}), "expansion at alpha = " + al.get_str());
                check(r.a == ae, "closed-form a at alpha = " + al.get_str());
                check(r.roots[0].rational() == beta && r.roots[1].rational() == beta * al &&
                          r.roots[2].rational() == beta * (-1 - al),
                      "roots at alpha = " + al.get_str());
            }
    check(tested == 1000, "only " + std::to_string(tested) + " admissible alpha of height <= 50");
}

// 2 -------------------------------------------------------------------------

/// Distinct integer roots of a monic integral polynomial in [-bound, bound].
int integer_root_count(const UniPoly& f, long bound) {
    int count = 0;
    for (long r = -bound; r <= bound; ++r) count += f(Q.from_int(r)).is_zero();
    return count;
}

void bb_suite(Check& check) {
    int built = 0;
    for (int d = 1; d <= 3; ++d) {
        std::vector<int> c(static_cast<std::size_t>(d), -3);
        for (;;) {
            std::vector<Integer> ints(c.begin(), c.end());
            ints.push_back(1);
            const UniPoly stem = from_integers(Q, ints);
            if (is_irreducible(stem)) {
                ++built;
                const auto cert = bb_construct(stem, d);
                const auto v = verify_bb_certificate(cert);
                check(v.ok, str(stem) + ": " + (v.reasons.empty() ? "" : v.reasons.front()));
                check(cert.R.specialize(Q.zero()) == stem, str(stem) + ": R(0,Y) differs from the stem");
            }
            std::size_t k = 0;
            while (k < c.size() && ++c[k] > 3) c[k++] = -3;
            if (k == c.size()) break;
        }
    }
    check(built > 100, "sweep built only " + std::to_string(built) + " stems");

    const UniPoly stem = parse_unipoly("Y^3 - 2", Q);
    const auto cert = bb_construct(stem, 3);
    check(cert.R.specialize(Q.zero()) == stem, "Y^3 - 2: R(0,Y)");
    const UniPoly f1 = cert.R.specialize(Q.one());
    check(f1.degree() == 3 && integer_root_count(f1, 1000) == 3, "Y^3 - 2: R(1,Y) not totally split");
    check(cert.sn_cert.claimed_group == "S3", "Y^3 - 2: node certificate " + cert.sn_cert.claimed_group);
    check(cubic_galois_group(cert.R.specialize(cert.node_a)).claimed_group == "S3", "Y^3 - 2: fiber at a is not S3");
    check(verify_bb_certificate(cert).ok, "Y^3 - 2: certificate does not verify");
}

// 3 -------------------------------------------------------------------------

void specialization_suite(Check& check) {
    std::mt19937_64 rng(0x5EED);
    long points = 0;
    for (int iter = 0; iter < 500; ++iter) {
        const Field f = iter % 2 ? Field::finite(9) : Field::prime(5);
        const int dy = 1 + static_cast<int>(rng() % 5), dt = static_cast<int>(rng() % 4);
        const ParamPoly a = oracle::random_parampoly(f, rng, dy, dt);
        if (discriminant_y(a).is_zero()) continue;
        for (const auto& t0 : f.elements()) {
            if (!unramified_at(a, t0)) continue;
            ++points;
            const auto report = specialize_at(a, t0);
            const std::string where = a.to_string() + " at " + t0.to_string();
            int sum = 0;
            for (const auto& fib : report.fibers) {
                sum += fib.degree;
                check(fib.multiplicity == 1, where + ": repeated factor");
            }
            check(sum == dy && report.degree_sum_ok, where + ": residue degrees do not sum to deg_Y");
            const auto brute = oracle::brute_force_factor(a.specialize(t0));
            check(brute.size() == report.fibers.size(), where + ": factor count differs from brute force");
            for (const auto& e : frobenius_decomposition(a, t0))
                check(e.group_order == e.residue_degree, where + ": |D| != residue degree");
        }
    }
    check(points > 1000, "only " + std::to_string(points) + " unramified points");
}

// 4 -------------------------------------------------------------------------

std::vector<int> brute_cycle_type(const UniPoly& f, std::uint64_t p) {
    const Field fp = Field::prime(p);
    std::vector<FieldElem> c;
    for (const auto& x : f.coeffs()) c.push_back(fp.from_integer(x.rational().get_num()));
    std::vector<int> out;
    for (auto& [g, m] : oracle::brute_force_factor(UniPoly(fp, c)))
        for (int i = 0; i < m; ++i) out.push_back(g.degree());
    std::sort(out.rbegin(), out.rend());
    return out;
}

void certify_suite(Check& check) {
    const UniPoly f = parse_unipoly("Y^5 - Y - 1", Q);
    const auto cert = certify_sn(f, 200);
    check(cert.claimed_group == "S5", "Y^5 - Y - 1 certified as " + cert.claimed_group);
    check(!cert.evidence.empty(), "Y^5 - Y - 1 has no evidence");
    for (const auto& e : cert.evidence)
        check(e.cycle_type == brute_cycle_type(f, e.prime), "cycle type mod " + std::to_string(e.prime));

    std::mt19937_64 rng(1000);
    std::uniform_int_distribution<int> coef(-4, 4);
    int fuzzed = 0;
    while (fuzzed < 1000) {
        auto monic = [&](int d) {
            std::vector<Integer> c;
            for (int i = 0; i < d; ++i) c.push_back(coef(rng));
            c.push_back(1);
            return from_integers(Q, c);
        };
        const int d1 = 1 + static_cast<int>(rng() % 4), d2 = 1 + static_cast<int>(rng() % 3);
        const UniPoly g = monic(d1) * monic(d2);
        if (!is_separable(g)) continue;
        ++fuzzed;
        const auto c = certify_sn(g, 100);
        check(!c.conclusive() || c.claimed_group.rfind("S", 0) != 0, str(g) + " labelled " + c.claimed_group);
        check(c.claimed_group == "inconclusive", str(g) + " not inconclusive");
    }
}

// 5 -------------------------------------------------------------------------

UniPoly as_unipoly(const SkewPoly& f) {
    std::vector<FieldElem> c;
    for (const auto& x : f.coeffs()) c.push_back(x.field_elem());
    return UniPoly(f.ring().field(), c);
}

void skew_suite(Check& check) {
    std::mt19937_64 rng(55);
    const std::vector<oracle::RefRing> rings = {oracle::ref_frobenius(4), oracle::ref_frobenius(9),
                                                oracle::ref_quaternion(Quaternion::i())};
    for (const auto& ref : rings) {
        const std::string name = ref.ring.to_string();
        for (int t = 0; t < 10'000; ++t) {
            const SkewPoly f = oracle::random_skew(ref.ring, rng, 3);
            const SkewPoly g = oracle::random_skew(ref.ring, rng, 3);
            const SkewPoly h = oracle::random_skew(ref.ring, rng, 3);
            const SkewPoly fg = skew_mul(f, g);
            if (t < 1000) check(fg == ref.mul(f, g), name + ": product differs from the reference");
            check(skew_mul(fg, h) == skew_mul(f, skew_mul(g, h)), name + ": associativity");
            check(skew_mul(f, g + h) == fg + skew_mul(f, h), name + ": left distributivity");
            check(skew_mul(f + g, h) == skew_mul(f, h) + skew_mul(g, h), name + ": right distributivity");
            if (!f.is_zero() && !g.is_zero()) check(fg.degree() == f.degree() + g.degree(), name + ": degree additivity");
        }
        for (int t = 0; t < 1000; ++t) {
            const SkewPoly a = oracle::random_skew(ref.ring, rng, 6);
            const SkewPoly b = oracle::random_nonzero_skew(ref.ring, rng, 3);
            auto [q, r] = right_divide(a, b);
            check(ref.mul(q, b) + r == a && r.degree() < b.degree(), name + ": right_divide contract");
            const SkewPoly x = oracle::random_nonzero_skew(ref.ring, rng, 3);
            const SkewPoly y = oracle::random_nonzero_skew(ref.ring, rng, 3);
            auto [wr, ws] = ore_witness(x, y);
            const SkewPoly common = ref.mul(x, wr);
            check(!common.is_zero() && common == ref.mul(y, ws), name + ": Ore witness");
        }
    }
    for (std::uint64_t q : {4u, 9u}) {
        const SkewRing id = SkewRing::frobenius(Field::finite(q), 0);
        for (int t = 0; t < 1000; ++t) {
            const SkewPoly f = oracle::random_skew(id, rng, 5);
            const SkewPoly g = oracle::random_nonzero_skew(id, rng, 3);
            check(as_unipoly(skew_mul(f, g)) == as_unipoly(f) * as_unipoly(g), "sigma = id: product");
            check(as_unipoly(f + g) == as_unipoly(f) + as_unipoly(g), "sigma = id: sum");
            auto [sq, sr] = right_divide(f, g);
            const auto [uq, ur] = divmod(as_unipoly(f), as_unipoly(g));
            check(as_unipoly(sq) == uq && as_unipoly(sr) == ur, "sigma = id: division");
            check(skew_mul(f, g).to_string() == (as_unipoly(f) * as_unipoly(g)).to_string('T'), "sigma = id: text");
        }
    }
}

// 6 -------------------------------------------------------------------------

void center_suite(Check& check) {
    for (std::uint64_t q : {4u, 9u}) {
        const SkewRing ring = SkewRing::frobenius(Field::finite(q));
        const int n = ring.order();
        std::vector<SkewCoeff> fixed;
        for (const auto& e : ring.field().elements())
            if (ring.sigma(e) == SkewCoeff(e)) fixed.push_back(e);
        for (const auto& c0 : fixed)
            for (const auto& c1 : fixed)
                for (const auto& c2 : fixed) {
                    std::vector<SkewCoeff> c(static_cast<std::size_t>(2 * n + 1), ring.zero());
                    c[0] = c0;
                    c[static_cast<std::size_t>(n)] = c1;
                    c[static_cast<std::size_t>(2 * n)] = c2;
                    const SkewPoly f(ring, c);
                    check(center_test(f), ring.to_string() + ": " + f.to_string() + " not central");
                }
        for (int m = 1; m <= 4 * n; ++m)
            if (m % n) check(!center_test(SkewPoly::monomial(ring, ring.one(), m)), "T^" + std::to_string(m) + " central");
    }
    const SkewRing gf4 = SkewRing::parse("GF(4);frob");
    const SkewPoly wt2 = parse_skewpoly("g*T^2", gf4);
    check(!center_test(wt2), "g*T^2 labelled central");
    const SkewPoly t = parse_skewpoly("T", gf4);
    check(!(skew_mul(t, wt2) == skew_mul(wt2, t)), "g*T^2 commutes with T");
}

// 7 -------------------------------------------------------------------------

/// Roots of f in Q[Y]/(f): degree-n factors of a squarefree shifted norm.
int roots_in_stem_field(const UniPoly& f) {
    for (long s = 1;; ++s) {
        const UniPoly norm = oracle::shifted_norm(f, s);
        if (!is_separable(norm)) continue;
        int count = 0;
        for (const auto& fac : factor(norm)) count += fac.factor.degree() == f.degree();
        return count;
    }
}

void normalizer_suite(Check& check) {
    const PermGroup s3 = PermGroup::symmetric(3);
    const auto nq = normalizer_quotient(s3, PermGroup::parse("(1 2)", 3));
    check(nq.order == 1, "S3/<(1 2)> has order " + std::to_string(nq.order));
    const int roots = roots_in_stem_field(parse_unipoly("Y^3 - 2", Q));
    check(static_cast<std::size_t>(roots) == nq.order, "Y^3 - 2 has " + std::to_string(roots) + " roots in its stem field");

    for (int n : {3, 4}) {
        const PermGroup g = PermGroup::symmetric(n);
        const auto elements = oracle::all_perms(n);
        const auto subgroups = all_subgroups(g);
        check(subgroups.size() == (n == 3 ? 6u : 30u), "subgroup count of S" + std::to_string(n));
        for (const auto& k : subgroups) {
            const auto r = normalizer_quotient(g, k);
            const std::size_t index = g.order() / k.order();
            const std::size_t brute = oracle::brute_normalizer_order(elements, k.elements());
            check(r.normalizer_order == brute, "normalizer order vs brute force");
            check(index % r.order == 0, "|N/K| does not divide |G|/|K|");
            check((r.order == index) == k.is_normal_in(g), "normality criterion");
        }
    }
}

// 8 -------------------------------------------------------------------------

void discriminant_suite(Check& check) {
    std::mt19937_64 rng(8);
    for (const Field& f : {Q, Field::prime(5)}) {
        for (int i = 0; i < 100; ++i) {
            const FieldElem x = oracle::random_elem(f, rng, 50);
            const UniPoly tx(f, {-x, f.one()});
            const UniPoly expected = -(tx * tx) * (tx.scaled(f.from_int(4)) + UniPoly::constant(f.from_int(27)));
            const ParamPoly p = lp_trinomial(x);
            check(discriminant_y(p) == expected, f.name() + ": disc_Y(P_x) at x = " + x.to_string());
            for (int t = 0; t < 5; ++t) {
                const FieldElem t0 = f.from_int(t);
                check(oracle::euclid_discriminant(p.specialize(t0)) == expected(t0),
                      f.name() + ": pointwise discriminant at x = " + x.to_string());
            }
        }
    }
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "split trinomial closed form on 1000 admissible alpha", 1.0, split_trinomial_suite},
        {2, "Beckmann-Black sweep, stems of degree <= 3 with coefficients in [-3,3]", 60.0, bb_suite},
        {3, "specialization invariants on 500 random families over GF(5)/GF(9)", 30.0, specialization_suite},
        {4, "S_n certification of Y^5 - Y - 1 and 1000 reducible polynomials", 60.0, certify_suite},
        {5, "skew ring axioms, division, Ore witnesses, identity twist", 60.0, skew_suite},
        {6, "center membership in GF(4)[T,Frob] and GF(9)[T,Frob]", 5.0, center_suite},
        {7, "normalizer quotients vs brute force and roots of Y^3 - 2", 10.0, normalizer_suite},
        {8, "disc_Y(P_x) = -(T-x)^2 (4(T-x) + 27) for 100 x over Q and GF(5)", 5.0, discriminant_suite},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.body(check);
        } catch (const std::exception& e) {
            error = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (error.empty()) error = check.failure();
        if (error.empty() && seconds > c.limit_seconds) error = "time limit exceeded";
        std::ostringstream line;
        line << (error.empty() ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << check.count()
             << " checks, " << std::fixed << std::setprecision(2) << seconds << " s, limit " << std::setprecision(0)
             << c.limit_seconds << " s)";
        if (!error.empty()) line << ": " << error;
        std::cout << line.str() << std::endl;
        failed += !error.empty();
    }
    std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : "acceptance: all criteria passed")
              << std::endl;
    return failed ? 1 : 0;
}
