#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gforge/factor.hpp"

namespace gforge::cli {

struct RunConfig {
    std::string command;
    std::string field_spec = "Q";
    long prime_budget = 200;
    long attempt_budget = 1000;
    int degree_cap = 64;
    std::uint64_t seed = kDefaultSeed;
    std::string output_path;  // empty: artifact goes to the output stream
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;

/// Runs one command line (args excludes the program name). The JSON artifact
/// goes to --out or to `out`; diagnostics go to `err`. GFORGE_SEED, when set,
/// replaces the configured seed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gforge::cli
