#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gforge/factor.hpp"
#include "gforge/poly.hpp"

namespace gforge {

struct FiberFactor {
    UniPoly factor;           // monic irreducible factor of A(t0, Y)
    int degree = 0;           // residue degree
    int multiplicity = 1;
};

struct SpecializationReport {
    FieldElem t0;
    bool unramified = false;
    std::vector<FiberFactor> fibers;
    /// Sum of degree * multiplicity over the fibers equals deg_Y A.
    bool degree_sum_ok = false;
};

/// disc_Y(A)(t0) != 0. Throws InseparableFamily when disc_Y(A) vanishes identically.
bool unramified_at(const ParamPoly& a, const FieldElem& t0);

/// Factors the fiber A(t0, Y). An inseparable family is reported as ramified
/// everywhere instead of raising.
SpecializationReport specialize_at(const ParamPoly& a, const FieldElem& t0, const FactorOptions& options = {});

struct CycleEvidence {
    std::uint64_t prime = 0;
    std::vector<int> cycle_type;  // partition of n, descending

    friend bool operator==(const CycleEvidence&, const CycleEvidence&) = default;
};

struct GroupCertificate {
    /// "S5", "C3", ..., or "inconclusive".
    std::string claimed_group;
    std::string reason;
    std::vector<CycleEvidence> evidence;
    /// Discriminant of the polynomial the certificate speaks about.
    std::optional<FieldElem> discriminant;
    /// A square root of the discriminant when it is a square, otherwise its
    /// squarefree part over Q (or the discriminant itself over a finite field).
    std::optional<FieldElem> square_class_witness;
    std::optional<bool> discriminant_is_square;
    /// Degrees of the irreducible factors, ascending (reducible inputs only).
    std::vector<int> split_type;
    long budget_used = 0;

    bool conclusive() const { return claimed_group != "inconclusive"; }
};

/// Galois group of a separable cubic. Reducible inputs are labelled by their
/// split type ("C2" for (1,2), "C1" for (1,1,1)); irreducible ones by the square
/// class of the discriminant. Characteristic 2 and 3 give "inconclusive".
GroupCertificate cubic_galois_group(const UniPoly& f, const FactorOptions& options = {});

/// Dedekind-reduction certificate that a monic separable f over Q has group S_n.
/// Rational coefficients are cleared by the substitution Y -> Y/d. Primes up
/// to `prime_budget` not dividing the discriminant are scanned in ascending
/// order; the result is S_n or "inconclusive", never a false S_n.
GroupCertificate certify_sn(const UniPoly& f, long prime_budget, const FactorOptions& options = {});

/// Degrees of the irreducible factors of f mod p, descending (f integral and monic over Q).
std::vector<int> cycle_type_mod(const UniPoly& f, std::uint64_t p);

/// The integral monic polynomial d^n f(Y/d) with d the least common denominator.
UniPoly integral_monic_model(const UniPoly& f);

struct DecompositionEntry {
    UniPoly factor;
    int residue_degree = 0;
    /// Order of the Frobenius y -> y^q on F_q[Y]/(factor).
    int group_order = 0;
};

/// The decomposition data at an unramified point over a finite base: one entry
/// per fiber with its residue degree and the order of the decomposition group,
/// computed independently as the order of Frobenius on the residue field.
std::vector<DecompositionEntry> frobenius_decomposition(const ParamPoly& a, const FieldElem& t0,
                                                        const FactorOptions& options = {});

}  // namespace gforge
