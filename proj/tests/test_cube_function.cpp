#include "support.hpp"

#include <gtest/gtest.h>

using namespace lbf;

TEST(Neighbors, FlipsOneBit)
{
    EXPECT_EQ(neighbors(0, 2), (std::vector<Vertex>{1, 2}));
    EXPECT_EQ(neighbors(5, 3), (std::vector<Vertex>{4, 7, 1}));
    EXPECT_EQ(neighbors(0, 1), (std::vector<Vertex>{1}));
}

TEST(CubeFunction, RejectsBadTables)
{
    EXPECT_THROW(CubeFunction(2, {1, 1, 1}), std::invalid_argument);
    EXPECT_THROW(CubeFunction(1, {1, 0}), std::invalid_argument);
    EXPECT_THROW(CubeFunction::constant(kMaxDimension + 1, 1), std::out_of_range);
}

TEST(CubeFunction, CoordinateConvention)
{
    // bit i-1 set means x_i = -1
    EXPECT_EQ(coordinate(0b010, 1), -1);
    EXPECT_EQ(coordinate(0b010, 0), 1);
    EXPECT_EQ(character(0b011, 0b001), -1);
    EXPECT_EQ(character(0b011, 0b011), 1);
}

TEST(LocalProfile, Examples)
{
    auto ones = CubeFunction::constant(2, 1);
    auto prof = local_profile(ones, ProfileKind::bias);
    EXPECT_TRUE(std::all_of(prof.counts.begin(), prof.counts.end(), [](auto c) { return c == 2; }));

    auto x1x2 = CubeFunction::from(2, [](Vertex v) { return coordinate(v, 0) * coordinate(v, 1); });
    prof = local_profile(x1x2, ProfileKind::stability);
    EXPECT_TRUE(std::all_of(prof.counts.begin(), prof.counts.end(), [](auto c) { return c == 0; }));

    prof = local_profile(parity_g(4), ProfileKind::bias);
    EXPECT_TRUE(std::all_of(prof.counts.begin(), prof.counts.end(), [](auto c) { return c == 2; }));
}

TEST(LocalBias, Examples)
{
    EXPECT_EQ(*is_locally_biased(CubeFunction::constant(3, -1)), 0);
    EXPECT_EQ(*is_locally_biased(base_h()), make_rational(1, 2));
    for (unsigned n = 2; n <= 7; ++n) {
        auto f = CubeFunction::from(n, [n](Vertex v) { return character((Vertex{1} << (n - 1)) - 1, v); });
        EXPECT_EQ(*is_locally_stable(f), make_rational(1, n)) << n;
    }
    auto x1 = CubeFunction::from(3, [](Vertex v) { return coordinate(v, 0); });
    EXPECT_FALSE(is_locally_biased(x1).has_value());
}

TEST(LocalBias, AgreesWithNaiveOracle)
{
    CounterRng rng(11);
    for (unsigned n = 1; n <= 6; ++n)
        for (int rep = 0; rep < 50; ++rep) {
            auto f = test::random_function(n, rng);
            EXPECT_EQ(is_locally_biased(f), test::naive_bias(f, false));
            EXPECT_EQ(is_locally_stable(f), test::naive_bias(f, true));
        }
}

TEST(CubeFunction, OrderingAndStrings)
{
    auto a = test::table(1, "-+"), b = test::table(1, "+-");
    EXPECT_LT(a, b);
    EXPECT_EQ(table_string(b), "+-");
    EXPECT_EQ(-a, b);
    EXPECT_EQ(support_size(b), 1u);
}
