#include "binmom/asymptotics.hpp"

#include "binmom/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace binmom {

namespace {

long double log_of(const Integer& x)
{
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return std::log(static_cast<long double>(mant)) + static_cast<long double>(exp2) * std::log(2.0L);
}

/// Natural log of a positive rational.
long double log_of(const Rational& x)
{
    return log_of(Integer(x.get_num())) - log_of(Integer(x.get_den()));
}

Rational power(const Rational& x, std::uint32_t e)
{
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), e);
    return r;
}

void require_even(std::uint32_t d, const char* who)
{
    if (d == 0 || d % 2 != 0) {
        throw std::domain_error(std::string(who) + ": d must be a positive even integer");
    }
}

} // namespace

long double envelope_term(std::uint32_t n, const Rational& sigma2, std::uint32_t d, std::uint32_t k)
{
    const Rational ns = Rational(n) * sigma2;
    if (ns == 0) {
        return 0.0L;
    }
    const long double kd = static_cast<long double>(k) / static_cast<long double>(d);
    return std::exp((1.0L - kd) * std::log(static_cast<long double>(k)) + kd * log_of(ns));
}

long double envelope(std::uint32_t n, const Rational& sigma2, std::uint32_t d)
{
    require_even(d, "envelope");
    if (n == 0) {
        throw std::domain_error("envelope: n must be at least 1");
    }
    if (sigma2 < 0) {
        throw std::domain_error("envelope: variance must be non-negative");
    }
    if (d == 2) {
        return envelope_term(n, sigma2, d, 1);
    }
    long double best = 0.0L;
    for (std::uint32_t k = 2; k <= d / 2; ++k) {
        best = std::max(best, envelope_term(n, sigma2, d, k));
    }
    return best;
}

UpperCheck check_upper_inequality(std::uint32_t n, const Rational& p, std::uint32_t d)
{
    require_even(d, "check_upper_inequality");
    if (p < 0 || p * 2 > 1) {
        throw std::domain_error("check_upper_inequality: p must lie in [0, 1/2]");
    }
    const Rational pq = p * (1 - p);
    UpperCheck r;
    r.moment = oracle_moment(n, p, d, MomentKind::Central).value;
    r.bound = 0;
    for (std::uint32_t k = 1; k <= d / 2; ++k) {
        r.bound += Rational(binom(n, k)) * power(pq, k) * power(Rational(k), d);
    }
    r.holds = r.moment <= r.bound;
    return r;
}

Composition balanced_even_composition(std::uint32_t d, std::uint32_t k)
{
    require_even(d, "balanced_even_composition");
    if (k == 0 || 2 * k > d) {
        throw std::domain_error("balanced_even_composition: need 1 <= k <= d/2");
    }
    std::uint32_t r = d / k;
    std::uint32_t l = d % k;
    if (r % 2 != 0) {
        r -= 1;
        l += k;
    }
    if (l % 2 != 0 || r < 2) {
        throw std::logic_error("balanced_even_composition: no even split exists");
    }
    Composition c;
    for (std::uint32_t i = 0; i < k; ++i) {
        c.parts.push_back(i < l / 2 ? r + 2 : r);
    }
    return c;
}

LowerCheck check_lower_witness(std::uint32_t n, const Rational& p, std::uint32_t d, std::uint32_t k)
{
    if (p <= 0 || p >= 1) {
        throw std::domain_error("check_lower_witness: p must lie strictly between 0 and 1");
    }
    LowerCheck r;
    r.k = k;
    r.composition = balanced_even_composition(d, k);
    r.moment = oracle_moment(n, p, d, MomentKind::Central).value;

    const Rational pq = p * (1 - p);
    // 2^(2k - d) with 2k <= d
    const Rational scale = make_rational(Integer(1), Integer(1) << static_cast<mp_bitcnt_t>(d - 2 * k));
    r.bound = Rational(binom(n, k)) * power(pq, k) * Rational(multinomial(d, r.composition.parts)) * scale;
    r.holds = r.moment >= r.bound;
    return r;
}

bool EnvelopeReport::holds() const
{
    return upper.holds && std::all_of(lower.begin(), lower.end(), [](const LowerCheck& c) { return c.holds; });
}

EnvelopeReport make_report(std::uint32_t n, const Rational& p, std::uint32_t d)
{
    EnvelopeReport rep;
    rep.n = n;
    rep.p = p;
    rep.d = d;
    rep.upper = check_upper_inequality(n, p, d);
    rep.moment = rep.upper.moment;
    for (std::uint32_t k = 1; k <= d / 2; ++k) {
        rep.lower.push_back(check_lower_witness(n, p, d, k));
    }

    const Rational sigma2 = p * (1 - p);
    if (rep.moment > 0) {
        rep.moment_root = std::exp(log_of(rep.moment) / static_cast<long double>(d));
    }
    if (n > 0) {
        rep.envelope = envelope(n, sigma2, d);
        rep.k1_term = envelope_term(n, sigma2, d, 1);
    }
    rep.ratio = rep.envelope > 0 ? rep.moment_root / rep.envelope : 0.0L;
    return rep;
}

GridSummary scan_grid(std::uint32_t d_max, std::uint32_t n_max, std::span<const Rational> ps)
{
    GridSummary g;
    g.min_ratio = std::numeric_limits<long double>::infinity();
    g.max_ratio = 0.0L;
    for (std::uint32_t d = 2; d <= d_max; d += 2) {
        for (std::uint32_t n = 1; n <= n_max; ++n) {
            for (const auto& p : ps) {
                EnvelopeReport rep = make_report(n, p, d);
                g.upper_checks += 1;
                g.lower_checks += rep.lower.size();
                g.all_hold = g.all_hold && rep.holds();
                if (rep.envelope > 0) {
                    g.min_ratio = std::min(g.min_ratio, rep.ratio);
                    g.max_ratio = std::max(g.max_ratio, rep.ratio);
                }
                g.rows.push_back(std::move(rep));
            }
        }
    }
    if (g.rows.empty()) {
        g.min_ratio = 0.0L;
    }
    return g;
}

} // namespace binmom
