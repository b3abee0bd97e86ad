#include "binmom/moments.hpp"
#include "binmom/oracle.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace binmom;

TEST(Oracle, HandComputedValues)
{
    const Rational half = make_rational(1, 2);
    // S ~ Binom(2, 1/2): (S - 1)^4 is 1 with probability 1/2
    EXPECT_EQ(oracle_moment(2, half, 4, MomentKind::Central).value, half);
    EXPECT_EQ(oracle_moment(1, half, 6, MomentKind::Central).value, make_rational(1, 64));
    EXPECT_EQ(oracle_moment(5, half, 2, MomentKind::Factorial).value, Rational(5));
    EXPECT_EQ(oracle_moment(7, make_rational(2, 7), 3, MomentKind::Raw).value, make_rational(842, 49));
    EXPECT_EQ(oracle_moment(12, make_rational(2, 7), 10, MomentKind::Central).value,
              make_rational(25348772541720, 282475249));
}

TEST(Oracle, DegenerateCases)
{
    for (std::uint32_t d = 0; d <= 6; ++d) {
        EXPECT_EQ(oracle_moment(0, make_rational(1, 3), d, MomentKind::Raw).value, d == 0 ? 1 : 0);
        EXPECT_EQ(oracle_moment(5, Rational(0), d, MomentKind::Central).value, d == 0 ? 1 : 0);
        EXPECT_EQ(oracle_moment(5, Rational(1), d, MomentKind::Central).value, d == 0 ? 1 : 0);
    }
    EXPECT_EQ(oracle_moment(4, Rational(1), 3, MomentKind::Raw).value, Rational(64));
    EXPECT_THROW(oracle_moment(3, Rational(-1), 2, MomentKind::Raw), std::domain_error);
}

TEST(Oracle, ResultEchoesQuery)
{
    const auto r = oracle_moment(3, make_rational(1, 3), 2, MomentKind::Central);
    EXPECT_EQ(r.n, 3u);
    EXPECT_EQ(r.d, 2u);
    EXPECT_EQ(r.p, make_rational(1, 3));
    EXPECT_EQ(r.kind, MomentKind::Central);
    EXPECT_EQ(r.value, make_rational(2, 3));
}

TEST(Oracle, EveryRouteMatches)
{
    const Rational ps[] = {0, 1, make_rational(1, 2), make_rational(1, 3), make_rational(2, 7), make_rational(9, 10)};
    for (std::uint32_t d = 0; d <= 8; ++d) {
        const FormulaDoc routes[] = {raw_moment_via_factorial(d), raw_moment_via_counting(d)};
        const FormulaDoc central[] = {central_moment_stable(d), central_moment_fast(d), central_moment_from_raw(d)};
        for (std::uint32_t n = 0; n <= 9; ++n) {
            for (const auto& p : ps) {
                const Rational raw = oracle_moment(n, p, d, MomentKind::Raw).value;
                const Rational cen = oracle_moment(n, p, d, MomentKind::Central).value;
                for (const auto& f : routes) {
                    EXPECT_EQ(evaluate_formula(f, n, p), raw);
                }
                for (const auto& f : central) {
                    EXPECT_EQ(evaluate_formula(f, n, p), cen);
                }
                if (d >= 2) {
                    EXPECT_EQ(evaluate_formula(central_moment_variance_form(d, Method::Alg2), n, p), cen);
                }
                EXPECT_EQ(evaluate_formula(factorial_moment(d), n, p),
                          oracle_moment(n, p, d, MomentKind::Factorial).value);
            }
        }
    }
}
