#include "gforge/factor.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>

namespace gforge {

namespace {

// ---------------------------------------------------------------------------
// Finite fields

UniPoly pth_root(const UniPoly& f) {
    const Field& field = f.field();
    const std::uint64_t p = field.characteristic();
    // a^(1/p) = a^(q/p) in GF(q).
    const Integer root_exp = Integer(static_cast<unsigned long>(field.order() / p));
    std::vector<FieldElem> out;
    for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) out.push_back(f.coeff(i).pow(root_exp));
    return UniPoly(field, std::move(out));
}

std::vector<Factor> squarefree_finite(const UniPoly& monic_f) {
    std::vector<Factor> out;
    if (monic_f.degree() < 1) return out;
    const int p = static_cast<int>(monic_f.field().characteristic());
    const UniPoly one = UniPoly::constant(monic_f.field().one());
    const UniPoly d = monic_f.derivative();
    if (d.is_zero()) {
        for (auto& [g, m] : squarefree_finite(pth_root(monic_f))) out.push_back({g, m * p});
        return out;
    }
    UniPoly c = gcd(monic_f, d);
    UniPoly w = monic_f / c;
    int i = 1;
    while (w.degree() > 0) {
        UniPoly y = gcd(w, c);
        UniPoly z = w / y;
        if (z.degree() > 0) out.push_back({z.monic(), i});
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) {
        for (auto& [g, m] : squarefree_finite(pth_root(c.monic()))) out.push_back({g, m * p});
    }
    return out;
}

std::vector<Factor> squarefree_rational(const UniPoly& monic_f) {
    std::vector<Factor> out;
    if (monic_f.degree() < 1) return out;
    const UniPoly fp = monic_f.derivative();
    const UniPoly a0 = gcd(monic_f, fp);
    UniPoly b = monic_f / a0;
    UniPoly c = fp / a0;
    UniPoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        UniPoly a = gcd(b, d);
        b = b / a;
        c = d / a;
        d = c - b.derivative();
        if (a.degree() > 0) out.push_back({a.monic(), i});
    }
    return out;
}

FieldElem random_elem(const Field& f, std::mt19937_64& rng) {
    return f.from_code(rng() % f.order());
}

// Equal-degree splitting of a monic squarefree g whose irreducible factors all have degree d.
void equal_degree(const UniPoly& g, int d, std::mt19937_64& rng, std::vector<UniPoly>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const Field& f = g.field();
    const std::uint64_t q = f.order();
    const UniPoly one = UniPoly::constant(f.one());
    Integer qd = 1;
    for (int i = 0; i < d; ++i) qd *= static_cast<unsigned long>(q);
    for (;;) {
        std::vector<FieldElem> coeffs;
        for (int i = 0; i < g.degree(); ++i) coeffs.push_back(random_elem(f, rng));
        const UniPoly a(f, std::move(coeffs));
        if (a.degree() < 1) continue;
        UniPoly b(f);
        if (q % 2 == 1) {
            b = pow_mod(a, Integer((qd - 1) / 2), g) - one;
        } else {
            // Trace map to GF(2): a + a^2 + ... + a^(2^(kd-1)).
            const std::size_t steps = mpz_sizeinbase(qd.get_mpz_t(), 2) - 1;
            UniPoly term = a % g;
            b = term;
            for (std::size_t i = 1; i < steps; ++i) {
                term = (term * term) % g;
                b += term;
            }
        }
        UniPoly u = gcd(g, b);
        if (u.degree() > 0 && u.degree() < g.degree()) {
            equal_degree(u, d, rng, out);
            equal_degree(g / u, d, rng, out);
            return;
        }
    }
}

std::vector<UniPoly> factor_squarefree_finite(const UniPoly& g, std::mt19937_64& rng) {
    std::vector<UniPoly> out;
    for (auto& [part, d] : distinct_degree_factorization(g)) equal_degree(part, d, rng, out);
    return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials (ascending, trimmed) for Hensel lifting over Z/m.

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zmod(ZPoly a, const Integer& m) {
    for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    ztrim(a);
    return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    ztrim(out);
    return out;
}

ZPoly zadd(ZPoly a, const ZPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    ztrim(a);
    return a;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    ztrim(a);
    return a;
}

ZPoly zscale(ZPoly a, const Integer& c) {
    for (auto& x : a) x *= c;
    ztrim(a);
    return a;
}

// a = q*b + r mod m with b monic mod m.
std::pair<ZPoly, ZPoly> zdivmod_monic(ZPoly a, const ZPoly& b, const Integer& m) {
    a = zmod(std::move(a), m);
    const int db = zdeg(b);
    if (zdeg(a) < db) return {{}, a};
    ZPoly q(static_cast<std::size_t>(zdeg(a) - db) + 1, Integer(0));
    for (int i = zdeg(a); i >= db; --i) {
        Integer c = a[static_cast<std::size_t>(i)];
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (sgn(c) == 0) continue;
        q[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
    }
    a.resize(static_cast<std::size_t>(db));
    return {zmod(std::move(q), m), zmod(std::move(a), m)};
}

// Exact quotient over Z, or nullopt when b does not divide a.
std::optional<ZPoly> zexact_div(ZPoly a, const ZPoly& b) {
    const int db = zdeg(b);
    if (zdeg(a) < db) return std::nullopt;
    ZPoly q(static_cast<std::size_t>(zdeg(a) - db) + 1, Integer(0));
    const Integer& lb = b.back();
    for (int i = zdeg(a); i >= db; --i) {
        const Integer& top = a[static_cast<std::size_t>(i)];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        Integer c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        q[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(i - db + j)] -= c * b[static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < db && i <= zdeg(a); ++i)
        if (sgn(a[static_cast<std::size_t>(i)]) != 0) return std::nullopt;
    ztrim(q);
    return q;
}

ZPoly zprimitive(ZPoly a) {
    Integer content = 0;
    for (const auto& c : a) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (a.empty() || sgn(content) == 0) return a;
    if (sgn(a.back()) < 0) content = -content;
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    return a;
}

ZPoly to_zpoly(const UniPoly& f) {
    ZPoly out;
    for (const auto& c : f.coeffs()) out.emplace_back(static_cast<unsigned long>(c.code()));
    return out;
}

ZPoly symmetric(ZPoly a, const Integer& m) {
    const Integer half = m / 2;
    for (auto& c : a) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    ztrim(a);
    return a;
}

struct HenselState {
    ZPoly g, h, s, t;
};

void hensel_step(const ZPoly& f, HenselState& st, const Integer& m) {
    const Integer m2 = m * m;
    const ZPoly e = zmod(zsub(f, zmul(st.g, st.h)), m2);
    auto [q, r] = zdivmod_monic(zmul(st.s, e), st.h, m2);
    const ZPoly g2 = zmod(zadd(zadd(st.g, zmul(st.t, e)), zmul(q, st.g)), m2);
    const ZPoly h2 = zmod(zadd(st.h, r), m2);
    const ZPoly b = zmod(zsub(zadd(zmul(st.s, g2), zmul(st.t, h2)), ZPoly{Integer(1)}), m2);
    auto [c, d] = zdivmod_monic(zmul(st.s, b), h2, m2);
    st.s = zmod(zsub(st.s, d), m2);
    st.t = zmod(zsub(zsub(st.t, zmul(st.t, b)), zmul(c, g2)), m2);
    st.g = g2;
    st.h = h2;
}

// f == lc(f) * prod(factors) mod p, factors monic; returns monic lifts mod target (a power p^(2^j)).
std::vector<ZPoly> multifactor_lift(const ZPoly& f, const std::vector<UniPoly>& factors, const Field& fp,
                                    const Integer& p, const Integer& target) {
    if (factors.size() == 1) {
        Integer inv;
        Integer lc = f.back();
        mpz_fdiv_r(lc.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t());
        mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t());
        return {zmod(zscale(f, inv), target)};
    }
    const std::size_t half = factors.size() / 2;
    UniPoly hp = UniPoly::constant(fp.one()), gp = UniPoly::constant(fp.from_integer(f.back()));
    for (std::size_t i = 0; i < factors.size(); ++i) (i < half ? hp : gp) *= factors[i];
    const Xgcd bez = xgcd(gp, hp);
    HenselState st{to_zpoly(gp), to_zpoly(hp), to_zpoly(bez.s), to_zpoly(bez.t)};
    for (Integer m = p; m < target; m = m * m) hensel_step(f, st, m);
    const std::vector<UniPoly> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
    const std::vector<UniPoly> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
    auto out = multifactor_lift(st.h, left, fp, p, target);
    auto rest = multifactor_lift(st.g, right, fp, p, target);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

std::vector<std::uint64_t> small_divisors(const Integer& n) {
    Integer a = abs(n);
    if (a > Integer("1000000000000")) return {};
    std::uint64_t v = a.get_ui();
    std::vector<std::uint64_t> divs;
    for (std::uint64_t d = 1; d * d <= v; ++d) {
        if (v % d) continue;
        divs.push_back(d);
        if (d != v / d) divs.push_back(v / d);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Linear factors q*Y - p with p | a0 and q | lc, when both are small enough to enumerate.
std::vector<ZPoly> extract_rational_roots(ZPoly& g) {
    std::vector<ZPoly> found;
    const auto ps = small_divisors(g.front());
    const auto qs = small_divisors(g.back());
    if (ps.empty() || qs.empty() || ps.size() * qs.size() > 20000) return found;
    for (auto qd : qs) {
        for (auto pd : ps) {
            for (int sign : {1, -1}) {
                if (zdeg(g) < 2) return found;
                Integer num = sign * Integer(static_cast<unsigned long>(pd));
                Integer den(static_cast<unsigned long>(qd));
                Integer common;
                mpz_gcd(common.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
                if (common != 1) continue;
                ZPoly lin{Integer(-num), den};
                if (auto quot = zexact_div(g, lin)) {
                    found.push_back(lin);
                    g = *quot;
                }
            }
        }
    }
    return found;
}

Integer isqrt_ceil(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r < n) r += 1;
    return r;
}

std::vector<ZPoly> zassenhaus(const ZPoly& g, std::mt19937_64& rng) {
    const int n = zdeg(g);
    const Integer& lc = g.back();

    // Pick the good prime with the fewest modular factors among the first few.
    std::optional<std::uint64_t> best;
    std::size_t best_count = 0;
    int tried = 0;
    for (std::uint64_t p = 3; tried < 5 && p < 100000; p += 2) {
        if (!is_prime(p) || mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
        const Field fp = Field::prime(p);
        const UniPoly gp = from_integers(fp, g).monic();
        if (gp.degree() != n || gcd(gp, gp.derivative()).degree() != 0) continue;
        ++tried;
        std::size_t count = 0;
        for (auto& [part, d] : distinct_degree_factorization(gp)) count += static_cast<std::size_t>(part.degree() / d);
        if (!best || count < best_count) {
            best = p;
            best_count = count;
        }
        if (count == 1) return {g};
    }
    if (!best) throw Error(ErrorCode::UnsupportedField, "no good prime found for Zassenhaus");

    const Field fp = Field::prime(*best);
    const UniPoly gp = from_integers(fp, g).monic();
    std::vector<UniPoly> modular = factor_squarefree_finite(gp, rng);
    std::sort(modular.begin(), modular.end(), [](const UniPoly& a, const UniPoly& b) { return compare(a, b) < 0; });

    Integer norm2 = 0;
    for (const auto& c : g) norm2 += c * c;
    Integer bound = 2 * abs(lc) * isqrt_ceil(norm2);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
    const Integer p(static_cast<unsigned long>(*best));
    Integer modulus = p;
    while (modulus <= bound) modulus = modulus * modulus;

    std::vector<ZPoly> lifted = multifactor_lift(g, modular, fp, p, modulus);

    std::vector<ZPoly> out;
    ZPoly rest = g;
    std::vector<std::size_t> alive(lifted.size());
    for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
    for (std::size_t size = 1; 2 * size <= alive.size();) {
        bool found = false;
        std::vector<std::size_t> pick(size);
        for (std::size_t i = 0; i < size; ++i) pick[i] = i;
        for (;;) {
            ZPoly cand{rest.back()};
            for (auto idx : pick) cand = zmod(zmul(cand, lifted[alive[idx]]), modulus);
            cand = zprimitive(symmetric(cand, modulus));
            if (auto quot = zexact_div(rest, cand)) {
                out.push_back(cand);
                rest = *quot;
                std::vector<std::size_t> keep;
                for (std::size_t i = 0; i < alive.size(); ++i)
                    if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(alive[i]);
                alive = std::move(keep);
                found = true;
                break;
            }
            // Next combination in lexicographic order.
            std::size_t k = size;
            while (k > 0 && pick[k - 1] == alive.size() - size + k - 1) --k;
            if (k == 0) break;
            ++pick[k - 1];
            for (std::size_t j = k; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!found) ++size;
    }
    if (zdeg(rest) > 0) out.push_back(zprimitive(rest));
    return out;
}

std::vector<ZPoly> factor_squarefree_integer(ZPoly g, std::mt19937_64& rng) {
    std::vector<ZPoly> out;
    if (sgn(g.front()) == 0) {
        out.push_back({Integer(0), Integer(1)});
        g.erase(g.begin());
    }
    if (zdeg(g) < 1) return out;
    if (zdeg(g) == 1) {
        out.push_back(g);
        return out;
    }
    for (auto& lin : extract_rational_roots(g)) out.push_back(lin);
    if (zdeg(g) == 1) {
        out.push_back(zprimitive(g));
    } else if (zdeg(g) > 1) {
        for (auto& h : zassenhaus(zprimitive(g), rng)) out.push_back(h);
    }
    return out;
}

void sort_factors(std::vector<Factor>& fs) {
    std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) { return compare(a.factor, b.factor) < 0; });
}

}  // namespace

std::vector<std::pair<UniPoly, int>> distinct_degree_factorization(const UniPoly& f) {
    const Field& field = f.field();
    if (!field.is_finite()) throw Error(ErrorCode::UnsupportedField, "distinct-degree factorization needs a finite field");
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly rest = f.monic();
    const UniPoly x = UniPoly::x(field);
    const Integer q(static_cast<unsigned long>(field.order()));
    UniPoly h = x % rest;
    for (int d = 1; rest.degree() >= 2 * d; ++d) {
        h = pow_mod(h, q, rest);
        UniPoly g = gcd(rest, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
    return out;
}

std::vector<Factor> squarefree_decomposition(const UniPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "squarefree decomposition of zero");
    const UniPoly m = f.monic();
    return f.field().is_finite() ? squarefree_finite(m) : squarefree_rational(m);
}

std::vector<Factor> factor(const UniPoly& f, const FactorOptions& options) {
    if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "cannot factor the zero polynomial");
    if (f.degree() > options.degree_cap) {
        throw Error(ErrorCode::DegreeCapExceeded,
                    "degree " + std::to_string(f.degree()) + " exceeds cap " + std::to_string(options.degree_cap));
    }
    std::mt19937_64 rng(options.seed);
    std::map<std::string, Factor> merged;  // keyed by printed form, merges repeated irreducibles
    auto add = [&](const UniPoly& g, int m) {
        auto [it, inserted] = merged.try_emplace(g.to_string(), Factor{g, 0});
        it->second.multiplicity += m;
    };
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        if (f.field().is_finite()) {
            for (auto& g : factor_squarefree_finite(part, rng)) add(g, mult);
        } else {
            for (auto& h : factor_squarefree_integer(primitive_integer_part(part), rng))
                add(from_integers(f.field(), h).monic(), mult);
        }
    }
    std::vector<Factor> out;
    for (auto& [key, fac] : merged) out.push_back(std::move(fac));
    sort_factors(out);
    return out;
}

UniPoly expand(const std::vector<Factor>& factors, const FieldElem& leading) {
    UniPoly out = UniPoly::constant(leading);
    for (const auto& [g, m] : factors)
        for (int i = 0; i < m; ++i) out *= g;
    return out;
}

std::vector<int> factor_degrees(const UniPoly& f, const FactorOptions& options) {
    std::vector<int> degs;
    for (const auto& [g, m] : factor(f, options))
        for (int i = 0; i < m; ++i) degs.push_back(g.degree());
    std::sort(degs.begin(), degs.end());
    return degs;
}

bool is_irreducible(const UniPoly& f, const FactorOptions& options) {
    if (f.degree() < 1) return false;
    const auto fs = factor(f, options);
    return fs.size() == 1 && fs.front().multiplicity == 1;
}

}  // namespace gforge
