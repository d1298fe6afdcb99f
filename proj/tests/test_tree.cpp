#include "support.hpp"

#include <gtest/gtest.h>

using namespace lbf;

TEST(Tree, GreedyExamples)
{
    auto t = tree_greedy(3, 4, 1);
    EXPECT_EQ(t.size(), tree_size(3, 4));
    EXPECT_EQ(t.size(), 1u + 3 + 6 + 12 + 24);
    EXPECT_TRUE(verify_tree(t, 1));

    auto zero = tree_greedy(3, 3, 0);
    EXPECT_EQ(zero.signs[0], -1);
    EXPECT_TRUE(verify_tree(zero, 0));

    auto all = tree_greedy(4, 3, 4);
    EXPECT_TRUE(std::all_of(all.signs.begin(), all.signs.end(), [](auto s) { return s == 1; }));
    EXPECT_TRUE(verify_tree(all, 4));
}

TEST(Tree, EveryQuotaVerifies)
{
    for (unsigned n = 3; n <= 6; ++n)
        for (unsigned b = 0; b <= n; ++b) {
            EXPECT_TRUE(verify_tree(tree_greedy(n, 4, b), b)) << n << ' ' << b;
            EXPECT_TRUE(verify_tree(tree_greedy(n, 4, b, 77), b)) << n << ' ' << b;
        }
}

TEST(Tree, SeededIsDeterministic)
{
    auto a = tree_greedy(4, 5, 2, 5), b = tree_greedy(4, 5, 2, 5);
    EXPECT_EQ(a.signs, b.signs);
}

TEST(Tree, VerifyDetectsDamage)
{
    auto t = tree_greedy(3, 3, 1);
    t.signs[1] = -t.signs[1];
    EXPECT_FALSE(verify_tree(t, 1));
}

TEST(Tree, Bounds)
{
    EXPECT_THROW(tree_greedy(2, 3, 1), std::invalid_argument);
    EXPECT_THROW(tree_greedy(3, 1, 1), std::invalid_argument);
    EXPECT_THROW(tree_greedy(3, 3, 4), std::invalid_argument);
}
