#pragma once

#include <cstdint>
#include <vector>

#include "gforge/poly.hpp"

namespace gforge {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

struct FactorOptions {
    int degree_cap = 64;
    /// Seeds the Cantor-Zassenhaus splitting; the output does not depend on it.
    std::uint64_t seed = kDefaultSeed;
};

struct Factor {
    UniPoly factor;  // monic irreducible
    int multiplicity = 1;

    friend bool operator==(const Factor& a, const Factor& b) {
        return a.multiplicity == b.multiplicity && a.factor == b.factor;
    }
};

/// Complete factorization over Q or a finite field into monic irreducibles,
/// sorted by degree and then by coefficients from the top down.
/// Throws DegreeCapExceeded above the cap and InvalidArgument for f == 0.
std::vector<Factor> factor(const UniPoly& f, const FactorOptions& options = {});

/// Product of factor^multiplicity, times `leading`.
UniPoly expand(const std::vector<Factor>& factors, const FieldElem& leading);

/// Monic squarefree parts with their multiplicities (Yun; p-th roots in characteristic p).
std::vector<Factor> squarefree_decomposition(const UniPoly& f);

/// Distinct-degree split of a monic squarefree polynomial over a finite field:
/// pairs (product of all irreducible factors of degree d, d).
std::vector<std::pair<UniPoly, int>> distinct_degree_factorization(const UniPoly& f);

/// Degrees of the irreducible factors (with multiplicity), ascending.
std::vector<int> factor_degrees(const UniPoly& f, const FactorOptions& options = {});

bool is_irreducible(const UniPoly& f, const FactorOptions& options = {});

}  // namespace gforge
