// Randomised invariants over many inputs.

#include "support.hpp"

#include <gtest/gtest.h>

using namespace lbf;

class PerDimension : public ::testing::TestWithParam<unsigned> {};

TEST_P(PerDimension, WalshRoundTripAndParseval)
{
    const unsigned n = GetParam();
    CounterRng rng(1000 + n);
    for (int rep = 0; rep < 10'000; ++rep) {
        auto f = test::random_function(n, rng);
        auto s = walsh_transform(f);
        ASSERT_EQ(walsh_inverse(s), f);
        // sum c_S^2 = 4^n for a ±1 function
        std::int64_t sq = 0;
        for (auto c : s.coeffs)
            sq += c * c;
        ASSERT_EQ(sq, std::int64_t{1} << (2 * n));
        Rational weight = 0;
        for (unsigned d = 0; d <= n; ++d)
            weight += degree_weight(s, d);
        ASSERT_EQ(weight, 1);
    }
}

TEST_P(PerDimension, NegationDuality)
{
    const unsigned n = GetParam();
    CounterRng rng(2000 + n);
    for (int rep = 0; rep < 200; ++rep) {
        auto f = rep % 2 ? test::random_function(n, rng) : build_locally_biased(n, *std::next(permissible_p(n).begin(), rng.below(permissible_p(n).size())));
        auto pf = is_locally_biased(f), pn = is_locally_biased(-f);
        ASSERT_EQ(pf.has_value(), pn.has_value());
        if (pf) {
            ASSERT_EQ(*pn, 1 - *pf);
        }
        ASSERT_EQ(is_locally_stable(f), is_locally_stable(-f));
    }
}

TEST_P(PerDimension, VerifierInvariantUnderAutomorphisms)
{
    const unsigned n = GetParam();
    CounterRng rng(3000 + n);
    const auto ps = permissible_p(n);
    for (int rep = 0; rep < 1'000; ++rep) {
        const auto & p = *std::next(ps.begin(), rng.below(ps.size()));
        auto f = rep % 4 == 0 ? test::random_function(n, rng) : build_locally_biased(n, p);
        auto g = apply_automorphism(f, test::random_automorphism(n, rng));
        ASSERT_EQ(is_locally_biased(g), is_locally_biased(f));
        ASSERT_EQ(is_locally_stable(g), is_locally_stable(f));
        ASSERT_EQ(support_size(g), support_size(f));
    }
}

INSTANTIATE_TEST_SUITE_P(Dimensions, PerDimension, ::testing::Range(1u, 11u));

TEST(Properties, SpectrumTransformsUnderAutomorphism)
{
    CounterRng rng(4000);
    for (int rep = 0; rep < 300; ++rep) {
        const unsigned n = 1 + rng.below(8);
        auto f = test::random_function(n, rng);
        auto a = test::random_automorphism(n, rng);
        auto sf = walsh_transform(f), sg = walsh_transform(apply_automorphism(f, a));
        for (std::uint32_t S = 0; S < sf.coeffs.size(); ++S) {
            std::uint32_t image = 0;
            for (unsigned i = 0; i < n; ++i)
                if ((S >> i) & 1u)
                    image |= std::uint32_t{1} << a.perm[i];
            const int sign = std::popcount(S & a.flips) % 2 ? -1 : 1;
            ASSERT_EQ(sg[S], sign * sf[image]);
        }
    }
}

TEST(Properties, SceneryDpMatchesPathSums)
{
    CounterRng rng(5000);
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned L = 0; L <= 5; ++L)
            for (int rep = 0; rep < 3; ++rep) {
                auto f = test::random_function(n, rng);
                ASSERT_EQ(exact_scenery_distribution(f, L).probs, test::path_sum_law(f, L, false)) << n << ' ' << L;
                if (L > 0) {
                    ASSERT_EQ(stability_pair_distribution(f, L).probs, test::path_sum_law(f, L, true)) << n << ' ' << L;
                }
            }
}

TEST(Properties, BiasedSceneryHasBernoulliMarginals)
{
    for (unsigned n : {4u, 8u})
        for (const auto & p : permissible_p(n)) {
            auto d = exact_scenery_distribution(build_locally_biased(n, p), 1);
            // both one-step marginals equal p
            EXPECT_EQ(d.probability("++") + d.probability("+-"), p);
            EXPECT_EQ(d.probability("++") + d.probability("-+"), p);
        }
}

TEST(Properties, TensorLiftPreservesP)
{
    for (unsigned c = 1; c <= 4; ++c) {
        EXPECT_EQ(is_locally_biased(tensor_lift(biased_from_code(hamming_code(2)), c)), make_rational(1, 4));
        EXPECT_EQ(is_locally_biased(tensor_lift(base_h(), c)), make_rational(1, 2));
    }
}

TEST(Properties, CanonicalFormIsClassInvariant)
{
    CounterRng rng(6000);
    for (int rep = 0; rep < 200; ++rep) {
        const unsigned n = 1 + rng.below(5);
        auto f = test::random_function(n, rng);
        auto c = canonical_form(f);
        ASSERT_EQ(canonical_form(c), c);
        ASSERT_EQ(canonical_form(apply_automorphism(f, test::random_automorphism(n, rng))), c);
        ASSERT_LE(c, f);
    }
}

TEST(Properties, CayleySearchIsClosed)
{
    for (auto gens : std::vector<std::vector<unsigned>>{{1}, {1, 2}, {2, 3}, {1, 3}})
        for (const auto & c : search_cayley(gens, 14, make_rational(1, 2)).classes) {
            EXPECT_EQ(canonical_pattern(c.pattern), c.pattern);
            EXPECT_EQ(verify_cayley_bias(c), make_rational(1, 2));
        }
}
