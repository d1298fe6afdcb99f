#include "support.hpp"

#include <gtest/gtest.h>

using namespace lbf;

namespace {
Rational r(int a, int b) { return make_rational(a, b); }
CubeFunction x1x3_on(unsigned n)
{
    return CubeFunction::from(n, [](Vertex v) { return coordinate(v, 0) * coordinate(v, 2); });
}
} // namespace

TEST(BiasedFromCode, Examples)
{
    auto f = biased_from_code(hamming_code(2));
    EXPECT_EQ(f.dimension(), 4u);
    EXPECT_EQ(support_size(f), 4u);
    EXPECT_EQ(*is_locally_biased(f), r(1, 4));

    auto g = biased_from_code(hamming_code(3));
    EXPECT_EQ(g.dimension(), 8u);
    EXPECT_EQ(support_size(g), 32u);
    EXPECT_EQ(*is_locally_biased(g), r(1, 8));

    EXPECT_THROW(biased_from_code(BinaryCode(2, {0})), std::invalid_argument);
}

TEST(BiasedMOverN, AllNumerators)
{
    EXPECT_EQ(biased_m_over_n(2, 0), CubeFunction::constant(4, -1));
    EXPECT_EQ(biased_m_over_n(2, 4), CubeFunction::constant(4, 1));
    for (unsigned k = 0; k <= 4; ++k)
        for (unsigned m = 0; m <= (1u << k); ++m)
            EXPECT_EQ(*is_locally_biased(biased_m_over_n(k, m)), r(m, 1 << k)) << k << ' ' << m;
    EXPECT_THROW(biased_m_over_n(3, 9), std::out_of_range);
    EXPECT_THROW(biased_m_over_n(5, 1), std::out_of_range);
}

TEST(TensorLift, Examples)
{
    auto g2 = parity_g(2);
    EXPECT_EQ(tensor_lift(g2, 1), g2);
    auto lifted = tensor_lift(g2, 2);
    EXPECT_EQ(lifted, x1x3_on(4));
    EXPECT_EQ(*is_locally_biased(lifted), r(1, 2));
    auto q = tensor_lift(biased_from_code(hamming_code(2)), 3);
    EXPECT_EQ(q.dimension(), 12u);
    EXPECT_EQ(*is_locally_biased(q), r(1, 4));
    EXPECT_THROW(tensor_lift(g2, 13), std::out_of_range);
    EXPECT_THROW(tensor_lift(g2, 0), std::invalid_argument);
}

TEST(Product, Examples)
{
    auto g2 = parity_g(2);
    auto p = product(g2, g2);
    EXPECT_EQ(p, x1x3_on(4));
    EXPECT_EQ(*is_locally_biased(product(base_h(), g2)), r(1, 2));
    EXPECT_THROW(product(biased_from_code(hamming_code(2)), g2), std::invalid_argument);
}

TEST(Families, ParityG)
{
    EXPECT_EQ(parity_g(2), test::table(2, "+-+-"));
    auto s = walsh_transform(parity_g(4));
    EXPECT_EQ(s.support_size(), 1u);
    EXPECT_NE(s[0b0011], 0);
    EXPECT_EQ(*is_locally_biased(parity_g(6)), r(1, 2));
    EXPECT_THROW(parity_g(3), std::invalid_argument);
}

TEST(Families, BaseH)
{
    auto h = base_h();
    EXPECT_EQ(h(0), 1);
    EXPECT_EQ(h(0b0001), -1);
    EXPECT_EQ(support_size(h), 8u);
    EXPECT_EQ(h_k(1), h);
    for (unsigned k = 1; k <= 4; ++k) {
        auto f = h_k(k);
        EXPECT_EQ(*is_locally_biased(f), r(1, 2));
        auto s = walsh_transform(f);
        EXPECT_EQ(s.support_size(), 4u);
        for (std::uint32_t S = 0; S < s.coeffs.size(); ++S)
            if (s[S]) {
                EXPECT_EQ(std::popcount(S), static_cast<int>(2 * k));
            }
    }
}

TEST(Families, H2HasDisjointMonomials)
{
    auto s = walsh_transform(h_k(2));
    std::vector<std::uint32_t> sets;
    for (std::uint32_t S = 0; S < s.coeffs.size(); ++S)
        if (s[S])
            sets.push_back(S);
    bool disjoint_pair = false;
    for (auto a : sets)
        for (auto b : sets)
            disjoint_pair |= (a & b) == 0;
    EXPECT_TRUE(disjoint_pair);
}

TEST(Signature, Examples)
{
    EXPECT_EQ(half_biased_from_signature(4, {}), parity_g(4));
    EXPECT_EQ(half_biased_from_signature(4, {1}), base_h());
    std::vector<CubeFunction> fs;
    for (auto sig : std::vector<std::vector<unsigned>>{{}, {1}, {2}, {1, 1}}) {
        fs.push_back(half_biased_from_signature(8, sig));
        EXPECT_EQ(*is_locally_biased(fs.back()), r(1, 2));
    }
    for (std::size_t i = 0; i < fs.size(); ++i)
        for (std::size_t j = i + 1; j < fs.size(); ++j)
            EXPECT_EQ(are_isomorphic(fs[i], fs[j]).verdict, Verdict::non_isomorphic) << i << ' ' << j;
    EXPECT_THROW(half_biased_from_signature(8, {1, 2}), std::invalid_argument);
}

TEST(Stable, Parity)
{
    auto f = stable_parity(3, 1);
    EXPECT_EQ(f, CubeFunction::from(3, [](Vertex v) { return coordinate(v, 1) * coordinate(v, 2); }));
    EXPECT_EQ(*is_locally_stable(f), r(1, 3));
    EXPECT_EQ(stable_parity(4, 4), CubeFunction::constant(4, 1));
    EXPECT_EQ(*is_locally_stable(stable_parity(5, 0)), 0);
}

TEST(Stable, FromBiased)
{
    auto a = stable_from_biased(parity_g(2));
    EXPECT_EQ(a, x1x3_on(3));
    EXPECT_EQ(*is_locally_stable(a), r(1, 3));
    EXPECT_EQ(*is_locally_stable(stable_from_biased(base_h())), r(2, 5));
    auto b = stable_from_biased(parity_g(4));
    EXPECT_EQ(b, CubeFunction::from(5, [](Vertex v) { return character(0b10011, v); }));
    EXPECT_EQ(*is_locally_stable(b), r(2, 5));
    EXPECT_THROW(stable_from_biased(biased_from_code(hamming_code(2))), std::invalid_argument);
}

TEST(Stable, Extend)
{
    auto f = x1x3_on(3);
    EXPECT_EQ(stable_extend(f, 3), f);
    EXPECT_EQ(*is_locally_stable(stable_extend(f, 4)), r(2, 4));
    EXPECT_EQ(*is_locally_stable(stable_extend(stable_parity(3, 1), 5)), r(3, 5));
    EXPECT_THROW(stable_extend(f, 2), std::invalid_argument);
}

TEST(BuildLocallyBiased, EveryPermissibleP)
{
    for (unsigned n = 1; n <= 12; ++n)
        for (const auto & p : permissible_p(n))
            EXPECT_EQ(*is_locally_biased(build_locally_biased(n, p)), p) << n << ' ' << to_string(p);
    EXPECT_THROW(build_locally_biased(6, r(1, 4)), std::invalid_argument);
    EXPECT_THROW(build_locally_biased(3, r(1, 3)), std::invalid_argument);
}
