#include "binmom/combinatorics.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <thread>
#include <vector>

using namespace binmom;

namespace {

// Counts set partitions of {0..m-1} into j blocks by explicit restricted
// growth strings; blocks of size < min_block disqualify a partition.
Integer brute_partitions(std::uint32_t m, std::uint32_t j, std::uint32_t min_block)
{
    if (m == 0) {
        return j == 0 ? 1 : 0;
    }
    std::vector<std::uint32_t> label(m, 0);
    Integer count = 0;
    while (true) {
        const std::uint32_t blocks = *std::max_element(label.begin(), label.end()) + 1;
        if (blocks == j) {
            std::vector<std::uint32_t> sizes(blocks, 0);
            for (auto l : label) {
                ++sizes[l];
            }
            if (std::all_of(sizes.begin(), sizes.end(), [&](auto s) { return s >= min_block; })) {
                ++count;
            }
        }
        // next restricted growth string
        std::size_t i = m;
        while (i-- > 1) {
            const std::uint32_t prefix_max = *std::max_element(label.begin(), label.begin() + static_cast<long>(i));
            if (label[i] <= prefix_max) {
                ++label[i];
                std::fill(label.begin() + static_cast<long>(i) + 1, label.end(), 0);
                break;
            }
        }
        if (i == 0) {
            return count;
        }
    }
}

} // namespace

TEST(Combinatorics, FactorialBinomialFalling)
{
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(10), 3628800);
    EXPECT_EQ(binom(10, 3), 120);
    EXPECT_EQ(binom(3, 5), 0);
    EXPECT_EQ(falling_power(5, 2), 20);
    EXPECT_EQ(falling_power(3, 5), 0);
    EXPECT_EQ(falling_power(-2, 2), 6);
    EXPECT_EQ(falling_power(7, 0), 1);
    const std::vector<std::uint32_t> parts{2, 1, 1};
    EXPECT_EQ(multinomial(4, parts), 12);
    EXPECT_EQ(multinomial(5, parts), 0);
}

TEST(Combinatorics, PolynomialBinomMatchesNumeric)
{
    for (std::uint32_t k = 0; k <= 6; ++k) {
        const Poly b = binom(n_var(), k);
        const Poly f = falling_power(n_var(), k);
        for (std::uint32_t n = 0; n <= 10; ++n) {
            Assignment at;
            at.set(Var::N, n);
            EXPECT_EQ(evaluate(b, at), Rational(binom(n, k)));
            EXPECT_EQ(evaluate(f, at), Rational(falling_power(std::int64_t{n}, k)));
        }
    }
}

TEST(Combinatorics, StirlingAgainstBruteForce)
{
    for (std::uint32_t m = 0; m <= 10; ++m) {
        for (std::uint32_t j = 0; j <= m; ++j) {
            EXPECT_EQ(stirling2(m, j), brute_partitions(m, j, 1)) << m << "," << j;
            EXPECT_EQ(assoc_stirling2(m, j), brute_partitions(m, j, 2)) << m << "," << j;
        }
    }
}

TEST(Combinatorics, StirlingKnownValues)
{
    EXPECT_EQ(stirling2(10, 5), 42525);
    EXPECT_EQ(assoc_stirling2(10, 5), 945);
    EXPECT_EQ(assoc_stirling2(6, 2), 25);
    EXPECT_EQ(stirling2(3, 7), 0);
}

TEST(Combinatorics, StirlingTableIsThreadSafe)
{
    StirlingTable table;
    std::vector<std::thread> pool;
    std::vector<Integer> results(8);
    for (std::size_t t = 0; t < results.size(); ++t) {
        pool.emplace_back([&, t] { results[t] = table.plain(30 + static_cast<std::uint32_t>(t), 7); });
    }
    for (auto& th : pool) {
        th.join();
    }
    for (std::size_t t = 0; t < results.size(); ++t) {
        EXPECT_EQ(results[t], stirling2(30 + static_cast<std::uint32_t>(t), 7));
    }
}

TEST(Combinatorics, CompositionsEnumerateInOrder)
{
    const auto all = Compositions(6, 2, 2).to_vector();
    ASSERT_EQ(all.size(), 3u);
    EXPECT_EQ(all[0].parts, (std::vector<std::uint32_t>{2, 4}));
    EXPECT_EQ(all[1].parts, (std::vector<std::uint32_t>{3, 3}));
    EXPECT_EQ(all[2].parts, (std::vector<std::uint32_t>{4, 2}));
    EXPECT_TRUE(Compositions(3, 2, 2).to_vector().empty());
    EXPECT_EQ(Compositions(0, 0, 1).to_vector().size(), 1u);
    EXPECT_TRUE(Compositions(3, 0, 1).to_vector().empty());
}

TEST(Combinatorics, CompositionCounts)
{
    // compositions of d into k positive parts: binom(d-1, k-1)
    for (std::uint32_t d = 1; d <= 12; ++d) {
        for (std::uint32_t k = 1; k <= d; ++k) {
            const auto all = Compositions(d, k, 1).to_vector();
            EXPECT_EQ(Integer(static_cast<unsigned long>(all.size())), binom(d - 1, k - 1));
            for (const auto& c : all) {
                EXPECT_EQ(c.total(), d);
                EXPECT_EQ(c.size(), k);
            }
        }
    }
}

TEST(Combinatorics, OrderedPartitionIdentities)
{
    for (std::uint32_t d = 1; d <= 12; ++d) {
        for (std::uint32_t k = 1; k <= d; ++k) {
            Integer plain = 0;
            Integer atleast2 = 0;
            for (const auto& c : Compositions(d, k, 1)) {
                plain += multinomial(d, c.parts);
            }
            for (const auto& c : compositions_min2(d, k)) {
                atleast2 += multinomial(d, c.parts);
            }
            EXPECT_EQ(plain, factorial(k) * stirling2(d, k));
            EXPECT_EQ(atleast2, factorial(k) * assoc_stirling2(d, k));
        }
    }
}

TEST(Combinatorics, PowerBaseChange)
{
    for (std::uint32_t m = 0; m <= 12; ++m) {
        for (std::int64_t x = -3; x <= 9; ++x) {
            Integer sum = 0;
            for (std::uint32_t j = 0; j <= m; ++j) {
                sum += stirling2(m, j) * falling_power(x, j);
            }
            Integer want = 1;
            for (std::uint32_t i = 0; i < m; ++i) {
                want *= x;
            }
            EXPECT_EQ(sum, want);
        }
    }
}
