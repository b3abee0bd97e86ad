#pragma once

// Growth envelope of even central moments and the exact inequalities that
// sandwich them. Pass/fail is decided on exact rationals; the floating-point
// quantities (envelope, d-th roots, ratios) are for reporting only.

#include "binmom/combinatorics.hpp"
#include "binmom/scalar.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace binmom {

/// max{ k^(1 - k/d) (n s)^(k/d) : k = 2..d/2 }, or the single k = 1 term
/// sqrt(n s) when d = 2. Throws std::domain_error for odd d, d = 0, n = 0 or
/// s < 0.
long double envelope(std::uint32_t n, const Rational& sigma2, std::uint32_t d);

/// The k-th candidate of the envelope maximum.
long double envelope_term(std::uint32_t n, const Rational& sigma2, std::uint32_t d, std::uint32_t k);

struct UpperCheck {
    bool holds = false;
    Rational moment;
    Rational bound;  // sum_{k=1}^{d/2} binom(n, k) (pq)^k k^d
};

/// moment <= bound for p <= 1/2 and even d. Throws std::domain_error otherwise.
UpperCheck check_upper_inequality(std::uint32_t n, const Rational& p, std::uint32_t d);

/// The witness composition of d into k even parts: write d = k r + l with r
/// and l even, k <= l < 2k when r had to be lowered, then l/2 parts r + 2
/// followed by k - l/2 parts r. Throws std::domain_error unless d is even and
/// 1 <= k <= d/2.
Composition balanced_even_composition(std::uint32_t d, std::uint32_t k);

struct LowerCheck {
    bool holds = false;
    std::uint32_t k = 0;
    Composition composition;
    Rational moment;
    Rational bound;  // binom(n, k) (pq)^k multinomial(d; composition) 2^(2k - d)
};

/// moment >= bound for one k. Requires 0 < p < 1, even d, 1 <= k <= d/2.
LowerCheck check_lower_witness(std::uint32_t n, const Rational& p, std::uint32_t d, std::uint32_t k);

struct EnvelopeReport {
    std::uint32_t n = 0;
    Rational p;
    std::uint32_t d = 0;
    Rational moment;
    long double moment_root = 0;
    long double envelope = 0;
    long double ratio = 0;       // moment_root / envelope, 0 when the envelope vanishes
    long double k1_term = 0;     // (n s)^(1/d), reported alongside the k >= 2 maximum
    UpperCheck upper;
    std::vector<LowerCheck> lower;  // k = 1..d/2

    bool holds() const;
};

EnvelopeReport make_report(std::uint32_t n, const Rational& p, std::uint32_t d);

struct GridSummary {
    bool all_hold = true;
    std::size_t upper_checks = 0;
    std::size_t lower_checks = 0;
    long double min_ratio = 0;
    long double max_ratio = 0;
    std::vector<EnvelopeReport> rows;
};

/// Every even d in [2, d_max], n in [1, n_max] and each p (0 < p <= 1/2).
GridSummary scan_grid(std::uint32_t d_max, std::uint32_t n_max, std::span<const Rational> ps);

} // namespace binmom
