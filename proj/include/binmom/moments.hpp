#pragma once

// Closed-form binomial moments, each available through several independent
// derivation routes so they can be checked against one another.

#include "binmom/combinatorics.hpp"
#include "binmom/formula.hpp"
#include "binmom/poly.hpp"

#include <cstdint>
#include <vector>

namespace binmom {

/// P(S = k) for S ~ Binom(n, p). Throws std::domain_error unless
/// 0 <= k <= n and 0 <= p <= 1.
Rational density(std::uint32_t n, const Rational& p, std::uint32_t k);

/// E[S^(d falling)] = n^(d falling) p^d.
FormulaDoc factorial_moment(std::uint32_t d);

/// E[S^d] = sum_k S(d, k) n^(k falling) p^k.
FormulaDoc raw_moment_via_factorial(std::uint32_t d);

/// E[S^d] = sum_k binom(n, k) p^k sum_{d_1..d_k > 0} multinomial(d; d_1..d_k).
FormulaDoc raw_moment_via_counting(std::uint32_t d);

/// q^(d_i - 1) - (-p)^(d_i - 1): the centered moment of one Bernoulli trial
/// divided by pq.
struct BernoulliCentralFactor {
    std::uint32_t part = 0;
    Poly value;

    static BernoulliCentralFactor make(std::uint32_t part);
};

/// One summand binom(n, k) (pq)^k multinomial(d; parts) prod(factors) of the
/// stable central-moment formula, kept unexpanded.
struct StableTerm {
    std::uint32_t k = 0;
    Composition composition;
    Integer multinomial;
    std::vector<BernoulliCentralFactor> factors;

    Poly expand() const;
    Rational evaluate(std::uint32_t n, const Rational& p) const;
};

/// All summands for order d, ordered by k and then lexicographically by parts.
std::vector<StableTerm> stable_terms(std::uint32_t d);

/// Sum of stable_terms(d), as a polynomial in n, p, q.
FormulaDoc central_moment_stable(std::uint32_t d);

/// Per-k count of (l, j) index pairs that contributed to the fast path.
struct FastPathStats {
    std::vector<std::size_t> terms_per_k;  // index k; entry 0 unused
};

/// The associated-Stirling regrouping: (1-p)^d sum_k binom(n, k) p^k U_k with
/// U_k a polynomial in x = -p/q. Same polynomial as central_moment_stable.
FormulaDoc central_moment_fast(std::uint32_t d, FastPathStats* stats = nullptr);

/// Central moment over Z[n, s] (times 1 - 2p for odd d) via symmetrization
/// (Alg1) or reduction modulo s - p(1 - p) (Alg2).
FormulaDoc central_moment_variance_form(std::uint32_t d, Method method);

/// sum_j binom(d, j) (-np)^(d-j) E[S^j], in Z[n, p].
FormulaDoc central_moment_from_raw(std::uint32_t d);

/// Dispatches a validated query to the matching route.
FormulaDoc derive(const MomentQuery& query);

} // namespace binmom
