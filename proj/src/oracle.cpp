#include "binmom/oracle.hpp"

#include "binmom/combinatorics.hpp"
#include "binmom/moments.hpp"

#include <stdexcept>

namespace binmom {

namespace {

Rational power(const Rational& x, std::uint32_t e)
{
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), e);
    return r;
}

} // namespace

OracleResult oracle_moment(std::uint32_t n, const Rational& p, std::uint32_t d, MomentKind kind)
{
    if (p < 0 || p > 1) {
        throw std::domain_error("oracle_moment: p must lie in [0, 1]");
    }
    const Rational mean = Rational(n) * p;
    Rational sum = 0;
    for (std::uint32_t k = 0; k <= n; ++k) {
        const Rational weight = density(n, p, k);
        if (weight == 0) {
            continue;
        }
        Rational g;
        switch (kind) {
        case MomentKind::Raw:
            g = power(Rational(k), d);
            break;
        case MomentKind::Central:
            g = power(Rational(k) - mean, d);
            break;
        case MomentKind::Factorial:
            g = Rational(falling_power(static_cast<std::int64_t>(k), d));
            break;
        }
        sum += weight * g;
    }
    return OracleResult{n, p, d, kind, sum};
}

Rational evaluate_formula(const FormulaDoc& f, std::uint32_t n, const Rational& p)
{
    if (p < 0 || p > 1) {
        throw std::domain_error("evaluate_formula: p must lie in [0, 1]");
    }
    const Rational q = 1 - p;
    Assignment at;
    at.set(Var::N, Rational(n)).set(Var::P, p).set(Var::Q, q).set(Var::S, p * q);
    Rational value = evaluate(f.body, at);
    if (f.odd_factor) {
        value *= 1 - 2 * p;
    }
    return value;
}

} // namespace binmom
