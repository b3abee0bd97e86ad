#pragma once

// Self-check suites shared by the `check` subcommand: each one compares
// independent derivation routes, or a route against the density oracle, and
// records every individual comparison.

#include "binmom/scalar.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace binmom {

struct CheckRecord {
    std::string name;
    bool passed = false;
    std::string detail;  // empty on success
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckRecord> checks;
    nlohmann::ordered_json extra = nlohmann::ordered_json::object();

    bool passed() const;
    std::size_t failures() const;
    void record(std::string name, bool ok, std::string detail = {});
    nlohmann::ordered_json to_json() const;
};

/// The p values used by the oracle suite: 0, 1, 1/2, 1/3, 2/7, 9/10.
std::vector<Rational> oracle_probabilities();

/// Every derivation route evaluated against the oracle, d <= d_max, n <= n_max.
SuiteReport check_oracle(std::uint32_t d_max, std::uint32_t n_max);

/// Raw routes agree; all central routes agree in Z[n, p]; d <= d_max.
SuiteReport check_routes(std::uint32_t d_max);

/// Alg1 and Alg2 agree and land in Z[n, s]; the expansion reproduces Z[n, p].
SuiteReport check_algorithms(std::uint32_t d_max);

/// Stable p,q form is symmetric for even d and antisymmetric for odd d.
SuiteReport check_symmetry(std::uint32_t d_max);

/// Exact upper and lower moment inequalities for even d <= d_max,
/// n <= n_max and p in {1/10, 1/4, 1/2}; reports the ratio band.
SuiteReport check_bounds(std::uint32_t d_max, std::uint32_t n_max);

/// Stirling base change, ordered-partition counts, S2 <= S.
SuiteReport check_combinatorics(std::uint32_t d_max);

} // namespace binmom
