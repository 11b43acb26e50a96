#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gforge/factor.hpp"
#include "gforge/text.hpp"
#include "oracles.hpp"

using namespace gforge;

namespace {

UniPoly Y(const Field& f, std::string_view text) { return parse_unipoly(text, f); }

std::vector<Factor> expected(std::initializer_list<std::pair<UniPoly, int>> items) {
    std::vector<Factor> out;
    for (auto& [g, m] : items) out.push_back({g, m});
    return out;
}

}  // namespace

TEST_CASE("field specs parse and intern") {
    CHECK(Field::parse("Q") == Field::rationals());
    CHECK(Field::parse("GF(5)") == Field::prime(5));
    CHECK(Field::parse("GF(9)") == Field::gf(3, 2));
    CHECK(Field::parse("GF(3^2)") == Field::gf(3, 2));
    CHECK(Field::parse("GF(9)").characteristic() == 3);
    CHECK(Field::rationals().characteristic() == 0);
    CHECK_THROWS_AS(Field::parse("GF(6)"), Error);
    CHECK_THROWS_AS(Field::parse("F5"), ParseError);
}

TEST_CASE("extension modulus is the lexicographically smallest irreducible") {
    // GF(4): Y^2 + Y + 1 is the only irreducible quadratic over GF(2).
    CHECK(Field::gf(2, 2).modulus() == std::vector<std::uint64_t>{1, 1, 1});
    // GF(9): Y^2 + 1 precedes Y^2 + Y + 2 and Y^2 + 2Y + 2.
    CHECK(Field::gf(3, 2).modulus() == std::vector<std::uint64_t>{1, 0, 1});
    // GF(8): Y^3 + Y + 1 precedes Y^3 + Y^2 + 1.
    CHECK(Field::gf(2, 3).modulus() == std::vector<std::uint64_t>{1, 1, 0, 1});
    for (auto [p, k] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}, {5u, 2u}, {3u, 3u}}) {
        const Field f = Field::gf(p, k);
        std::vector<FieldElem> c;
        const Field fp = Field::prime(p);
        for (auto m : f.modulus()) c.push_back(fp.from_int(static_cast<long long>(m)));
        CHECK(oracle::brute_force_factor(UniPoly(fp, c)).size() == 1);
    }
}

TEST_CASE("generator g is primitive and prints as g") {
    for (const char* spec : {"GF(4)", "GF(9)", "GF(25)", "GF(7)"}) {
        const Field f = Field::parse(spec);
        const FieldElem g = f.generator();
        FieldElem x = g;
        std::uint64_t order = 1;
        while (!x.is_one()) {
            x *= g;
            ++order;
        }
        CHECK(order == f.order() - 1);
        if (f.degree() > 1) CHECK(g.to_string() == "g");
    }
}

TEST_CASE("rationals stay in lowest terms") {
    const Field q = Field::rationals();
    const FieldElem a = q.from_rational(Rational(6, -4));
    CHECK(a.rational().get_num() == -3);
    CHECK(a.rational().get_den() == 2);
    CHECK(a.to_string() == "-3/2");
    CHECK_THROWS_AS(q.zero().inverse(), Error);
}

TEST_CASE("coefficient blowup guard") {
    const FieldElem two = Field::rationals().from_int(2);
    try {
        (void)two.pow(3'400'000);
        FAIL("expected CoefficientBlowup");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CoefficientBlowup);
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(1);
    for (const char* spec : {"Q", "GF(5)", "GF(9)", "GF(4)"}) {
        const Field f = Field::parse(spec);
        int failures = 0;
        for (int i = 0; i < 10000; ++i) {
            const auto a = oracle::random_elem(f, rng), b = oracle::random_elem(f, rng), c = oracle::random_elem(f, rng);
            failures += !((a + b) + c == a + (b + c));
            failures += !((a * b) * c == a * (b * c));
            failures += !(a * (b + c) == a * b + a * c);
            failures += !(a + (-a) == f.zero());
            failures += !(a + b == b + a && a * b == b * a);
            if (!a.is_zero()) failures += !((a * a.inverse()).is_one());
        }
        CHECK_MESSAGE(failures == 0, spec);
    }
}

TEST_CASE("polynomial ring axioms on random triples") {
    std::mt19937_64 rng(2);
    for (const char* spec : {"Q", "GF(5)", "GF(9)"}) {
        const Field f = Field::parse(spec);
        int failures = 0;
        for (int i = 0; i < 10000; ++i) {
            const auto a = oracle::random_poly(f, rng, 4, 5), b = oracle::random_poly(f, rng, 4, 5),
                       c = oracle::random_poly(f, rng, 4, 5);
            failures += !((a + b) + c == a + (b + c));
            failures += !((a * b) * c == a * (b * c));
            failures += !(a * (b + c) == a * b + a * c);
            failures += !((a - a).is_zero());
            if (!b.is_zero()) {
                auto [q, r] = divmod(a, b);
                failures += !(q * b + r == a && r.degree() < b.degree());
            }
        }
        CHECK_MESSAGE(failures == 0, spec);
    }
}

TEST_CASE("text grammar round-trips") {
    const Field q = Field::rationals();
    const ParamPoly p = parse_parampoly("Y^3 + (T - 1)*Y + (T - 1)", q);
    CHECK(p.to_string() == "Y^3 + (T - 1)*Y + (T - 1)");
    CHECK(parse_parampoly(p.to_string(), q) == p);
    const ParamPoly r = parse_parampoly("Y^2 + (T^2 - 2*T)*Y - 5/2*T^2 + 9/2*T - 2", q);
    CHECK(r.to_string() == "Y^2 + (T^2 - 2*T)*Y + (-5/2*T^2 + 9/2*T - 2)");
    CHECK(parse_parampoly(r.to_string(), q) == r);
    CHECK(Y(q, "(Y - 1)*(Y - 2)").to_string() == "Y^2 - 3*Y + 2");
    CHECK(Y(q, "-Y^2 + 1/3").to_string() == "-Y^2 + 1/3");

    const Field f9 = Field::parse("GF(9)");
    const UniPoly h = Y(f9, "g^3*Y^2 + g*Y + 2");
    CHECK(h.to_string() == "g^3*Y^2 + g*Y + 2");
    CHECK(Y(f9, h.to_string()) == h);

    std::mt19937_64 rng(3);
    for (const char* spec : {"Q", "GF(5)", "GF(9)", "GF(4)"}) {
        const Field f = Field::parse(spec);
        for (int i = 0; i < 300; ++i) {
            const UniPoly a = oracle::random_poly(f, rng, 6);
            CHECK(Y(f, a.to_string()) == a);
        }
    }
}

TEST_CASE("parse errors carry positions") {
    const Field q = Field::rationals();
    try {
        (void)parse_unipoly("Y^2 +\n  * 3", q);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_unipoly("Y + X", q), ParseError);
    CHECK_THROWS_AS(parse_unipoly("Y + T", q), ParseError);
    CHECK_THROWS_AS(parse_unipoly("Y/(Y+1)", q), ParseError);
    CHECK_THROWS_AS(parse_parampoly("2*Y^2 + T", q), Error);
}

TEST_CASE("discriminant examples") {
    const Field q = Field::rationals();
    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i) {
        const FieldElem b = oracle::random_elem(q, rng), c = oracle::random_elem(q, rng);
        const UniPoly f(q, {c, b, q.one()});
        CHECK(discriminant(f) == b * b - q.from_int(4) * c);
    }
    for (const char* spec : {"Q", "GF(5)", "GF(7)"}) {
        const Field f = Field::parse(spec);
        for (int i = 0; i < 200; ++i) {
            const FieldElem p = oracle::random_elem(f, rng), r = oracle::random_elem(f, rng);
            const UniPoly cubic(f, {r, p, f.zero(), f.one()});
            const FieldElem expect = -f.from_int(4) * p * p * p - f.from_int(27) * r * r;
            CHECK(discriminant(cubic) == expect);
            CHECK(oracle::euclid_discriminant(cubic) == expect);
        }
    }
    CHECK_THROWS_AS(discriminant(UniPoly::constant(q.from_int(3))), Error);
}

TEST_CASE("discriminant agrees with the Euclidean oracle") {
    std::mt19937_64 rng(5);
    for (const char* spec : {"Q", "GF(5)", "GF(9)", "GF(4)"}) {
        const Field f = Field::parse(spec);
        for (int i = 0; i < 300; ++i) {
            UniPoly g = oracle::random_poly(f, rng, 6, 4);
            if (g.degree() < 1) continue;
            CHECK(discriminant(g) == oracle::euclid_discriminant(g));
        }
    }
}

TEST_CASE("discriminant in Y of the trinomial family") {
    const Field q = Field::rationals();
    const ParamPoly p = parse_parampoly("Y^3 + (T - 3)*Y + (T - 3)", q);
    const UniPoly expect = parse_unipoly("-(T - 3)^2*(4*(T - 3) + 27)", q, 'T');
    CHECK(discriminant_y(p) == expect);
    // Quadratic case with T-dependent coefficients.
    const ParamPoly quad = parse_parampoly("Y^2 + T*Y + T^2 + 1", q);
    CHECK(discriminant_y(quad) == parse_unipoly("-3*T^2 - 4", q, 'T'));
    // Inseparable family in characteristic 5.
    const ParamPoly insep = parse_parampoly("Y^5 - T", Field::prime(5));
    CHECK(discriminant_y(insep).is_zero());
}

TEST_CASE("factor examples") {
    const Field f5 = Field::prime(5), f2 = Field::prime(2), q = Field::rationals();
    // Y + 1 sorts before Y - 1 = Y + 4.
    CHECK(factor(Y(f5, "Y^2 - 1")) == expected({{Y(f5, "Y + 1"), 1}, {Y(f5, "Y - 1"), 1}}));
    CHECK(factor(Y(q, "Y^4 + 1")) == expected({{Y(q, "Y^4 + 1"), 1}}));
    CHECK(factor(Y(f2, "Y^4 + 1")) == expected({{Y(f2, "Y + 1"), 4}}));
}

TEST_CASE("Y^4 + 1 has no rational quadratic factors (undetermined coefficients)") {
    // (Y^2 + aY + b)(Y^2 - aY + d): b + d = a^2, a(d - b) = 0, bd = 1.
    // a = 0 forces b^2 = -1; d = b forces b = +-1 and a^2 = 2b.
    const Field q = Field::rationals();
    CHECK_FALSE(is_square(q.from_int(-1)));
    CHECK_FALSE(is_square(q.from_int(2)));
    CHECK_FALSE(is_square(q.from_int(-2)));
    const UniPoly f = Y(q, "Y^4 + 1");
    CHECK_FALSE(f(q.one()).is_zero());
    CHECK_FALSE(f(q.from_int(-1)).is_zero());
    CHECK(is_irreducible(f));
}

TEST_CASE("factor over Q needs recombination") {
    const Field q = Field::rationals();
    // Splits into factors of degree <= 2 modulo every prime.
    CHECK(is_irreducible(Y(q, "Y^4 - 10*Y^2 + 1")));
    CHECK(is_irreducible(Y(q, "Y^8 - 40*Y^6 + 352*Y^4 - 960*Y^2 + 576")));
    const UniPoly prod = Y(q, "(Y^2 - 2)*(Y^2 - 3)*(Y^3 - Y - 1)*(Y - 1/2)^2*(3*Y^2 + 5)");
    const auto fs = factor(prod);
    CHECK(fs == expected({{Y(q, "Y - 1/2"), 2},
                          {Y(q, "Y^2 - 3"), 1},
                          {Y(q, "Y^2 - 2"), 1},
                          {Y(q, "Y^2 + 5/3"), 1},
                          {Y(q, "Y^3 - Y - 1"), 1}}));
    CHECK(expand(fs, prod.leading()) == prod);
}

TEST_CASE("factor over finite fields matches brute force") {
    std::mt19937_64 rng(6);
    for (const char* spec : {"GF(2)", "GF(5)", "GF(4)", "GF(9)"}) {
        const Field f = Field::parse(spec);
        for (int i = 0; i < 150; ++i) {
            UniPoly g = oracle::random_poly(f, rng, 7);
            if (g.degree() < 1) continue;
            auto brute = oracle::brute_force_factor(g);
            std::vector<Factor> want;
            for (auto& [h, m] : brute) want.push_back({h, m});
            std::sort(want.begin(), want.end(), [](auto& a, auto& b) { return compare(a.factor, b.factor) < 0; });
            CHECK(factor(g) == want);
        }
    }
}

TEST_CASE("factor round trip and squarefreeness") {
    std::mt19937_64 rng(7);
    for (const char* spec : {"Q", "GF(5)", "GF(9)"}) {
        const Field f = Field::parse(spec);
        for (int i = 0; i < 150; ++i) {
            UniPoly g = oracle::random_poly(f, rng, 5, 6) * oracle::random_poly(f, rng, 4, 6);
            if (g.degree() < 1) continue;
            const auto fs = factor(g);
            CHECK(expand(fs, g.leading()) == g);
            for (const auto& fac : fs) CHECK(fac.factor.is_monic());
            if (!discriminant(g).is_zero())
                for (const auto& fac : fs) CHECK(fac.multiplicity == 1);
        }
    }
}

TEST_CASE("factor error paths") {
    const Field q = Field::rationals();
    UniPoly big = UniPoly::monomial(q.one(), 65) - UniPoly::constant(q.one());
    try {
        (void)factor(big);
        FAIL("expected DegreeCapExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegreeCapExceeded);
    }
    CHECK_THROWS_AS(factor(UniPoly(q)), Error);
}

TEST_CASE("is_separable examples and agreement with the discriminant") {
    const Field q = Field::rationals(), f5 = Field::prime(5);
    CHECK(is_separable(Y(q, "Y^2 - 2")));
    CHECK_FALSE(is_separable(Y(q, "(Y - 1)^2")));
    CHECK_FALSE(is_separable(Y(f5, "Y^5 - 1")));

    std::mt19937_64 rng(8);
    for (const char* spec : {"Q", "GF(5)", "GF(9)"}) {
        const Field f = Field::parse(spec);
        for (int i = 0; i < 400; ++i) {
            std::uniform_int_distribution<int> deg(1, 5);
            UniPoly g = oracle::random_monic(f, rng, deg(rng), 3);
            if (i % 3 == 0) g = g * UniPoly(f, {oracle::random_elem(f, rng, 3), f.one()});
            if (i % 5 == 0) g = g * g;
            CHECK(is_separable(g) == !discriminant(g).is_zero());
        }
    }
}

TEST_CASE("coefficientwise Lagrange interpolation") {
    const Field q = Field::rationals();
    const std::vector<FieldElem> nodes{q.from_int(0), q.from_int(1), q.from_int(2)};
    const UniPoly c = Y(q, "Y^2 - 2");
    CHECK(lagrange_interpolate_coeffwise(nodes, {c, c, c}) == ParamPoly::from_fiber(c));

    const ParamPoly r = lagrange_interpolate_coeffwise(nodes, {c, Y(q, "Y^2 - Y"), Y(q, "Y^2 - 3")});
    CHECK(r == parse_parampoly("Y^2 + (T^2 - 2*T)*Y + (-5/2*T^2 + 9/2*T - 2)", q));

    try {
        (void)lagrange_interpolate_coeffwise({q.zero(), q.zero()}, {c, c});
        FAIL("expected DuplicateNodes");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DuplicateNodes);
    }
    try {
        (void)lagrange_interpolate_coeffwise({q.zero(), q.one()}, {c, Y(q, "Y^3")});
        FAIL("expected DegreeMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegreeMismatch);
    }
    try {
        (void)lagrange_interpolate_coeffwise({q.zero(), q.one()}, {c, Y(q, "2*Y^2")});
        FAIL("expected NonMonicFiber");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonMonicFiber);
    }
}

TEST_CASE("interpolate then evaluate is the identity") {
    std::mt19937_64 rng(9);
    for (const char* spec : {"Q", "GF(7)", "GF(9)"}) {
        const Field f = Field::parse(spec);
        for (int i = 0; i < 100; ++i) {
            std::uniform_int_distribution<int> count(2, 5), deg(1, 4);
            const int n = count(rng), d = deg(rng);
            std::vector<FieldElem> nodes;
            while (static_cast<int>(nodes.size()) < n) {
                auto x = oracle::random_elem(f, rng);
                if (std::find(nodes.begin(), nodes.end(), x) == nodes.end()) nodes.push_back(x);
            }
            std::vector<UniPoly> fibers;
            for (int j = 0; j < n; ++j) fibers.push_back(oracle::random_monic(f, rng, d));
            const ParamPoly r = lagrange_interpolate_coeffwise(nodes, fibers);
            CHECK(r.degree_t() < n);
            for (int j = 0; j < n; ++j) CHECK(r.specialize(nodes[static_cast<std::size_t>(j)]) == fibers[static_cast<std::size_t>(j)]);
        }
    }
}
