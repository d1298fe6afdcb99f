#include "support.hpp"

#include <gtest/gtest.h>

using namespace lbf;

namespace {
Rational r(int a, int b) { return make_rational(a, b); }
} // namespace

TEST(Walk, ShapeAndDeterminism)
{
    auto w = random_walk(5, 0, 7);
    EXPECT_EQ(w.vertices.size(), 1u);
    auto a = random_walk(6, 40, 99), b = random_walk(6, 40, 99), c = random_walk(6, 40, 100);
    EXPECT_EQ(a.vertices, b.vertices);
    EXPECT_NE(a.vertices, c.vertices);
    EXPECT_TRUE(a.valid());
    EXPECT_EQ(random_walk(3, 4, 1, Vertex{5}).vertices.front(), 5u);
    EXPECT_THROW(random_walk(3, 4, 1, Vertex{8}), std::out_of_range);
}

TEST(Scenery, Examples)
{
    auto ones = CubeFunction::constant(4, 1);
    auto w = random_walk(4, 10, 3);
    EXPECT_EQ(to_word(scenery(ones, w)), std::string(11, '+'));
    auto x1 = test::table(1, "+-");
    EXPECT_EQ(to_word(scenery(x1, Walk{1, {0, 1, 0, 1}})), "+-+-");
    auto g4 = parity_g(4);
    auto walk = random_walk(4, 5, 12);
    auto s = scenery(g4, walk);
    for (std::size_t i = 0; i < s.size(); ++i)
        EXPECT_EQ(s[i], g4(walk.vertices[i]));
    EXPECT_THROW(scenery(x1, walk), std::invalid_argument);
}

TEST(ExactLaw, SupportFraction)
{
    auto f = biased_from_code(hamming_code(2));
    auto d = exact_scenery_distribution(f, 0);
    EXPECT_EQ(d.length, 1u);
    EXPECT_EQ(d.probability("+"), r(4, 16));
    EXPECT_EQ(d.probability("-"), r(12, 16));
}

TEST(ExactLaw, G4IsUniform)
{
    auto d = exact_scenery_distribution(parity_g(4), 6);
    EXPECT_EQ(d.probs.size(), 128u);
    for (const auto & [w, p] : d.probs)
        EXPECT_EQ(p, r(1, 128));
    EXPECT_EQ(d.probs, test::path_sum_law(parity_g(4), 6, false));
}

TEST(ExactLaw, PointMass)
{
    auto d = exact_scenery_distribution(CubeFunction::constant(3, -1), 4);
    ASSERT_EQ(d.probs.size(), 1u);
    EXPECT_EQ(d.probability("-----"), 1);
}

TEST(ExactLaw, Limits)
{
    EXPECT_THROW(exact_scenery_distribution(CubeFunction::constant(13, 1), 1), std::out_of_range);
    EXPECT_THROW(exact_scenery_distribution(CubeFunction::constant(2, 1), 13), std::out_of_range);
}

TEST(Bernoulli, Examples)
{
    auto zero = bernoulli_product(0, 3);
    ASSERT_EQ(zero.probs.size(), 1u);
    EXPECT_EQ(zero.probability("---"), 1);
    auto half = bernoulli_product(r(1, 2), 3);
    EXPECT_EQ(half.probs.size(), 8u);
    for (const auto & [w, p] : half.probs)
        EXPECT_EQ(p, r(1, 8));
    EXPECT_EQ(bernoulli_product(r(1, 8), 2).probability("++"), r(1, 64));
    EXPECT_EQ(bernoulli_product(r(1, 3), 5).total(), 1);
}

TEST(PairLaw, Examples)
{
    auto full = CubeFunction::from(4, [](Vertex v) { return character(0xF, v); });
    auto d = stability_pair_distribution(full, 3);
    ASSERT_EQ(d.probs.size(), 1u);
    EXPECT_EQ(d.probability("---"), 1);
    auto ones = stability_pair_distribution(CubeFunction::constant(3, 1), 3);
    EXPECT_EQ(ones.probability("+++"), 1);

    auto sp = stable_parity(3, 1);
    auto law = stability_pair_distribution(sp, 4);
    EXPECT_TRUE(distributions_equal(law, bernoulli_product(r(1, 3), 4)));
    EXPECT_EQ(law.probs, test::path_sum_law(sp, 4, true));
}

TEST(Compare, Examples)
{
    auto g = exact_scenery_distribution(parity_g(4), 6);
    EXPECT_TRUE(distributions_equal(g, g));
    EXPECT_TRUE(distributions_equal(g, exact_scenery_distribution(base_h(), 6)));
    EXPECT_FALSE(distributions_equal(g, bernoulli_product(0, 7)));
    EXPECT_THROW(distributions_equal(g, bernoulli_product(0, 6)), std::invalid_argument);
}

TEST(ChiSquare, Examples)
{
    auto ref = bernoulli_product(r(1, 2), 3);
    std::map<SignWord, std::uint64_t> prop;
    for (const auto & [w, p] : ref.probs)
        prop[w] = 5;
    EXPECT_DOUBLE_EQ(chi_square_report(prop, ref).statistic, 0.0);
    auto single = chi_square_report({{"+++", 8}}, ref);
    EXPECT_DOUBLE_EQ(single.statistic, 56.0);
    EXPECT_EQ(single.degrees_of_freedom, 7u);
    auto bad = chi_square_report({{"+", 1}}, bernoulli_product(1, 1));
    EXPECT_TRUE(bad.incompatible.empty());
    auto incompatible = chi_square_report({{"-", 1}}, bernoulli_product(1, 1));
    EXPECT_EQ(incompatible.incompatible.size(), 1u);
}

TEST(ChiSquare, SampledHMatchesProductLaw)
{
    const std::uint64_t N = 100'000;
    auto counts = sample_scenery_counts(base_h(), 6, N, kDefaultSeed);
    auto rep = chi_square_report(counts, bernoulli_product(r(1, 2), 7));
    EXPECT_EQ(rep.total, N);
    EXPECT_EQ(rep.degrees_of_freedom, 127u);
    // mean dof, sd sqrt(2 dof) ~ 16
    EXPECT_LT(std::abs(rep.statistic - 127.0), 3 * 16.0);
    EXPECT_EQ(counts, sample_scenery_counts(base_h(), 6, N, kDefaultSeed));
}
