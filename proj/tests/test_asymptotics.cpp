#include "binmom/asymptotics.hpp"
#include "binmom/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

using namespace binmom;

TEST(Envelope, FrozenValues)
{
    // n s = 16, d = 8: candidates 3.36, 5.62, 8 for k = 2, 3, 4
    EXPECT_NEAR(static_cast<double>(envelope(16, Rational(1), 8)), 8.0, 1e-12);
    EXPECT_NEAR(static_cast<double>(envelope_term(16, Rational(1), 8, 2)), 3.3635856610148585, 1e-12);
    EXPECT_NEAR(static_cast<double>(envelope_term(16, Rational(1), 8, 3)), 5.620122446251489, 1e-12);
    // d = 2 is the standard deviation
    EXPECT_NEAR(static_cast<double>(envelope(9, make_rational(1, 4), 2)), 1.5, 1e-15);
}

TEST(Envelope, DomainErrors)
{
    EXPECT_THROW(envelope(4, make_rational(1, 4), 3), std::domain_error);
    EXPECT_THROW(envelope(4, make_rational(1, 4), 0), std::domain_error);
    EXPECT_THROW(envelope(0, make_rational(1, 4), 4), std::domain_error);
    EXPECT_THROW(envelope(4, make_rational(-1, 4), 4), std::domain_error);
}

TEST(Bounds, UpperFrozen)
{
    const auto u = check_upper_inequality(10, make_rational(1, 3), 6);
    EXPECT_TRUE(u.holds);
    EXPECT_EQ(u.moment, make_rational(106420, 729));
    EXPECT_EQ(u.bound, make_rational(9940, 9));
    EXPECT_EQ(u.bound - u.moment, make_rational(698720, 729));
    EXPECT_THROW(check_upper_inequality(10, make_rational(2, 3), 6), std::domain_error);
    EXPECT_THROW(check_upper_inequality(10, make_rational(1, 3), 5), std::domain_error);
}

TEST(Bounds, LowerFrozen)
{
    const auto l = check_lower_witness(10, make_rational(1, 3), 6, 2);
    EXPECT_TRUE(l.holds);
    EXPECT_EQ(l.composition.parts, (std::vector<std::uint32_t>{4, 2}));
    EXPECT_EQ(l.bound, make_rational(25, 3));
    EXPECT_EQ(l.moment, oracle_moment(10, make_rational(1, 3), 6, MomentKind::Central).value);
    EXPECT_THROW(check_lower_witness(10, Rational(0), 6, 2), std::domain_error);
    EXPECT_THROW(check_lower_witness(10, make_rational(1, 3), 6, 4), std::domain_error);
}

TEST(Bounds, BalancedCompositions)
{
    EXPECT_EQ(balanced_even_composition(8, 1).parts, (std::vector<std::uint32_t>{8}));
    EXPECT_EQ(balanced_even_composition(8, 3).parts, (std::vector<std::uint32_t>{4, 2, 2}));
    EXPECT_EQ(balanced_even_composition(16, 3).parts, (std::vector<std::uint32_t>{6, 6, 4}));
    for (std::uint32_t d = 2; d <= 16; d += 2) {
        for (std::uint32_t k = 1; k <= d / 2; ++k) {
            const auto c = balanced_even_composition(d, k);
            EXPECT_EQ(c.size(), k);
            EXPECT_EQ(std::accumulate(c.parts.begin(), c.parts.end(), 0u), d);
            const auto [lo, hi] = std::minmax_element(c.parts.begin(), c.parts.end());
            EXPECT_LE(*hi - *lo, 2u);
            for (auto part : c.parts) {
                EXPECT_EQ(part % 2, 0u);
            }
        }
    }
    EXPECT_THROW(balanced_even_composition(7, 2), std::domain_error);
    EXPECT_THROW(balanced_even_composition(8, 5), std::domain_error);
}

TEST(Bounds, ReportAndSmallGrid)
{
    const auto rep = make_report(20, make_rational(1, 4), 8);
    EXPECT_TRUE(rep.holds());
    EXPECT_EQ(rep.lower.size(), 4u);
    EXPECT_GT(rep.ratio, 0.0L);
    EXPECT_NEAR(static_cast<double>(rep.moment_root),
                std::pow(static_cast<double>(rep.moment.get_d()), 1.0 / 8), 1e-9);

    const Rational ps[] = {make_rational(1, 10), make_rational(1, 2)};
    const auto grid = scan_grid(8, 16, ps);
    EXPECT_TRUE(grid.all_hold);
    EXPECT_EQ(grid.rows.size(), 4u * 16u * 2u);
    EXPECT_EQ(grid.upper_checks, grid.rows.size());
    EXPECT_EQ(grid.lower_checks, 16u * 2u * (1 + 2 + 3 + 4));
    EXPECT_LE(grid.min_ratio, grid.max_ratio);
}
