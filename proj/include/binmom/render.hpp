#pragma once

// Text and LaTeX renderers for Poly, plus the JSON term encoding.
//
// Text spells the variance as s2 ("3*n^2*s2^2"); LaTeX uses \sigma^{2k}
// with sympy-style spacing ("- 2 p + 1", \left( ... \right)).

#include "binmom/poly.hpp"

#include <json.hpp>

#include <string>

namespace binmom {

enum class Style { Text, Latex };

/// All terms, leading term first.
std::string render(const Poly& a, Style style);

/// Collected as a polynomial in `outer` (descending) whose coefficients are
/// rendered flat, e.g. "15*n^3*s2^3 + n^2*(-130*s2^3 + 25*s2^2) + ...".
std::string render_collected(const Poly& a, Var outer, Style style);

/// For polynomials in n and p only. Ascending powers of p, each coefficient
/// written in falling powers of n: "n*p + n*(n-1)*p^2".
std::string render_falling_basis(const Poly& a, Style style);

/// For polynomials in n and p only. Descending powers of p with coefficients
/// in the binomial basis binom(n, j): "2*p^2*binom(n,2) + p*binom(n,1)".
std::string render_binomial_basis(const Poly& a, Style style);

/// For polynomials in n and p only. Collected in n; each coefficient has its
/// p^a (1-p)^b factors pulled out: "n*p*(1-p)".
std::string render_pq_factored(const Poly& a, Style style);

/// {"variables": ["n","s2","p","q"], "terms": [[[e_n,e_s,e_p,e_q], "coef"], ...]}
/// with coefficients as decimal strings ("a" or "a/b").
nlohmann::ordered_json poly_to_json(const Poly& a);
/// Inverse of poly_to_json; throws std::invalid_argument on malformed input.
Poly poly_from_json(const nlohmann::ordered_json& j);

} // namespace binmom
