#pragma once

// Ground truth by brute force: exact summation of g(k) against the binomial
// density for k = 0..n. Shares no code with the symbolic derivations beyond
// the density itself.

#include "binmom/formula.hpp"
#include "binmom/scalar.hpp"

#include <cstdint>

namespace binmom {

struct OracleResult {
    std::uint32_t n = 0;
    Rational p;
    std::uint32_t d = 0;
    MomentKind kind = MomentKind::Central;
    Rational value;
};

/// sum_k P(S = k) g(k), with g(k) = k^d, (k - np)^d or the falling power.
/// Throws std::domain_error for p outside [0, 1].
OracleResult oracle_moment(std::uint32_t n, const Rational& p, std::uint32_t d, MomentKind kind);

/// Exact value of a derived formula at (n, p).
Rational evaluate_formula(const FormulaDoc& f, std::uint32_t n, const Rational& p);

} // namespace binmom
