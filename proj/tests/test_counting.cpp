#include "support.hpp"

#include <gtest/gtest.h>

using namespace lbf;

TEST(Counting, Solutions)
{
    EXPECT_EQ(count_solutions_leq(1), 2);
    EXPECT_EQ(count_solutions_leq(2), 4);
    EXPECT_EQ(count_solutions_leq(4), 12);
}

TEST(Counting, SolutionsBruteForce)
{
    // a_1 + 2a_2 + 3a_3 <= 3 by direct enumeration
    unsigned c = 0;
    for (unsigned a1 = 0; a1 <= 3; ++a1)
        for (unsigned a2 = 0; a2 <= 1; ++a2)
            for (unsigned a3 = 0; a3 <= 1; ++a3)
                c += a1 + 2 * a2 + 3 * a3 <= 3;
    EXPECT_EQ(count_solutions_leq(3), c);
}

TEST(Counting, Partitions)
{
    EXPECT_EQ(count_partitions(0), 1);
    EXPECT_EQ(count_partitions(5), 7);
    EXPECT_EQ(count_partitions(10), 42);
    for (unsigned j = 0; j <= 40; ++j)
        EXPECT_EQ(count_partitions(j), test::brute_partitions(j, j)) << j;
    EXPECT_EQ(count_partitions(100), BigInt("190569292"));
}

TEST(Counting, SumIdentityAndBinomialBound)
{
    BigInt running = 0;
    for (unsigned k = 0; k <= 100; ++k) {
        running += count_partitions(k);
        EXPECT_EQ(count_solutions_leq(k), running);
        const unsigned s = isqrt(k);
        EXPECT_GE(count_solutions_leq(k), binomial(2 * s, s));
    }
}

TEST(Counting, HalfBiasedBound)
{
    EXPECT_EQ(half_biased_lower_bound(4).exact, 2);
    EXPECT_EQ(half_biased_lower_bound(8).exact, 4);
    EXPECT_THROW(half_biased_lower_bound(5), std::invalid_argument);
}

TEST(Counting, NullSpace)
{
    EXPECT_EQ(null_space_dimension(2), 2);
    EXPECT_EQ(null_space_dimension(4), 6);
    EXPECT_EQ(null_space_dimension(6), 20);
    for (unsigned n : {2u, 4u, 6u})
        EXPECT_EQ(BigInt(adjacency_kernel_dimension(n)), null_space_dimension(n)) << n;
}

TEST(Counting, Isqrt)
{
    for (unsigned k = 0; k < 2000; ++k) {
        const unsigned s = isqrt(k);
        EXPECT_LE(s * s, k);
        EXPECT_GT((s + 1) * (s + 1), k);
    }
}
