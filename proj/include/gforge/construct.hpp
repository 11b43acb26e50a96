#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gforge/galois.hpp"

namespace gforge {

/// Y^3 + (T - x)Y + (T - x) over the field of x.
ParamPoly lp_trinomial(const FieldElem& x);

struct TrinomialFamilyData {
    ParamPoly poly;
    /// disc_Y = -(T - x)^2 (4(T - x) + 27).
    UniPoly discriminant;
    /// Product of the odd-multiplicity parts of the discriminant, with its leading coefficient.
    UniPoly squarefree_part;
    /// The squarefree part has positive degree, so the discriminant is not a square in k(T).
    bool discriminant_nonsquare = false;
};

TrinomialFamilyData lp_trinomial_data(const FieldElem& x);

struct DistinctnessCheck {
    /// res_Y(P_x1, P_x2) as a polynomial in T.
    UniPoly resultant;
    /// gcd_Y(P_x1, P_x2) = 1 over k(T), a necessary condition for distinct stem fields.
    bool coprime = false;
    /// The full claim k_x1 != k_x2 is not decided.
    bool stem_fields_distinct_verified = false;
};

DistinctnessCheck trinomial_distinctness_check(const FieldElem& x1, const FieldElem& x2);

struct SplitTrinomialResult {
    std::optional<FieldElem> alpha;  // empty when a came from the exhaustive search
    FieldElem a;
    std::array<FieldElem, 3> roots;
    /// "formula" or "search".
    std::string method;
};

/// The closed forms a = (-alpha^2 - alpha - 1)^3 / (alpha^2 + alpha)^2 and roots beta, beta*alpha,
/// beta*(-1 - alpha) with beta = (-alpha^2 - alpha - 1) / (alpha^2 + alpha).
/// Throws InvalidArgument when alpha violates the admissibility constraints.
SplitTrinomialResult split_trinomial_at(const FieldElem& alpha);

bool admissible_alpha(const FieldElem& alpha);

/// Over Q: the first admissible alpha in the order 2, 3, -3, 4, -4, ...
/// Over finite fields: the first admissible alpha in code order, else an
/// exhaustive search over a. Throws UnsupportedCharacteristic in characteristic 3.
SplitTrinomialResult split_trinomial(const Field& field);

struct PaddedFibers {
    UniPoly p0;
    UniPoly p1;
    std::vector<Integer> pad_roots;
};

/// P0 = stem times (Y - r) for the smallest non-negative integers r that are not
/// roots of the stem; P1 = Y(Y - 1)...(Y - (n - 1)).
PaddedFibers build_padded_fibers(const UniPoly& stem, int n, const FactorOptions& options = {});

struct SnSearchResult {
    UniPoly poly;
    GroupCertificate certificate;
    long attempts = 0;
};

/// Y^n - Y - 1 first, then monic integer polynomials by increasing coefficient height.
SnSearchResult search_sn_polynomial(int n, long prime_budget, long attempt_budget, const FactorOptions& options = {});

struct BBOptions {
    long prime_budget = 200;
    long attempt_budget = 1000;
    /// Replaces the searched S_n polynomial at the third node.
    std::optional<UniPoly> q_override;
    FactorOptions factor;
};

struct BBChecks {
    bool fiber0_separable = false;
    bool fiber0_contains_stem = false;
    bool fiber1_totally_split = false;
    bool nodes_distinct = false;

    friend bool operator==(const BBChecks&, const BBChecks&) = default;
};

inline constexpr const char* kGaloisClosureAssumption =
    "the Galois closure of Q[Y]/(stem) over Q is taken to be the target field F (caller-supplied)";

struct BBCertificate {
    UniPoly input_stem{Field::rationals()};
    int target_n = 0;
    ParamPoly R = ParamPoly::from_fiber(UniPoly::x(Field::rationals()));
    FieldElem node_a;
    UniPoly fiber0{Field::rationals()};
    UniPoly fiber1{Field::rationals()};
    UniPoly fiberA{Field::rationals()};
    GroupCertificate sn_cert;
    BBChecks checks;
    long prime_budget = 0;
    std::vector<Integer> pad_roots;
    std::string assumption = kGaloisClosureAssumption;
};

/// Interpolates R(T, Y) through (0, P0), (1, P1), (a, Q) with a = 2.
BBCertificate bb_construct(const UniPoly& stem, int n, const BBOptions& options = {});

struct VerifyResult {
    bool ok = false;
    std::vector<std::string> reasons;
};

/// Re-derives every claim of the certificate from its polynomials.
VerifyResult verify_bb_certificate(const BBCertificate& cert, const FactorOptions& options = {});

}  // namespace gforge
