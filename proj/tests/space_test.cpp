#include "dlcalc/space.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace dlcalc;

namespace {

// Degree step of the cohomology generator: Sq^(step k) y^m = C(m, k) y^(m + k).
int step(SpaceId s)
{
    switch (s) {
    case SpaceId::RPinf: return 1;
    case SpaceId::BSpin2: return 2;
    case SpaceId::BSpin3: return 4;
    case SpaceId::SigmaCPinf: return 2;
    }
    return 0;
}

}  // namespace

TEST(Space, Degrees)
{
    EXPECT_EQ(base_degree(SpaceId::RPinf, 3), 3);
    EXPECT_EQ(base_degree(SpaceId::BSpin2, 3), 6);
    EXPECT_EQ(base_degree(SpaceId::BSpin3, 2), 8);
    EXPECT_EQ(base_degree(SpaceId::SigmaCPinf, 0), 1);
    EXPECT_EQ(base_degree(SpaceId::SigmaCPinf, 2), 5);
    EXPECT_TRUE(has_degree_zero_class(SpaceId::RPinf));
    EXPECT_FALSE(has_degree_zero_class(SpaceId::SigmaCPinf));
    EXPECT_EQ(max_index_in_degree(SpaceId::BSpin3, 7), 1);
    EXPECT_EQ(max_index_in_degree(SpaceId::SigmaCPinf, 0), -1);
}

TEST(Space, NamesRoundTrip)
{
    for (SpaceId s : {SpaceId::RPinf, SpaceId::BSpin2, SpaceId::BSpin3, SpaceId::SigmaCPinf})
        EXPECT_EQ(parse_space(space_name(s)), s);
    EXPECT_FALSE(parse_space("cp-inf"));
    EXPECT_EQ(class_name({SpaceId::RPinf, 3}), "e_3");
    EXPECT_EQ(class_name({SpaceId::SigmaCPinf, 0}), "abar_0");
}

TEST(Space, CoproductExamples)
{
    auto e0 = coproduct({SpaceId::RPinf, 0});
    ASSERT_EQ(e0.size(), 1u);
    EXPECT_EQ(e0[0].first, (SpaceClass{SpaceId::RPinf, 0}));
    EXPECT_EQ(e0[0].second, (SpaceClass{SpaceId::RPinf, 0}));

    auto e2 = coproduct({SpaceId::RPinf, 2});
    EXPECT_EQ(e2.size(), 3u);

    auto a3 = coproduct({SpaceId::SigmaCPinf, 3});
    ASSERT_EQ(a3.size(), 2u);
    for (const auto& [l, r] : a3)
        EXPECT_NE(l.has_value(), r.has_value());
}

TEST(Space, CoproductIsBinomialAndCoassociative)
{
    for (SpaceId s : {SpaceId::RPinf, SpaceId::BSpin2, SpaceId::BSpin3}) {
        for (int n = 0; n <= 8; ++n) {
            auto terms = coproduct({s, n});
            std::map<std::pair<int, int>, int> seen;
            for (const auto& [l, r] : terms) {
                ASSERT_TRUE(l && r);
                EXPECT_EQ(l->index + r->index, n);
                seen[{l->index, r->index}] ^= 1;
            }
            EXPECT_EQ(seen.size(), static_cast<std::size_t>(n + 1));
            // (psi (x) 1) psi and (1 (x) psi) psi both give every (i, j, k) with i + j + k = n once.
            std::map<std::tuple<int, int, int>, int> left, right;
            for (const auto& [l, r] : terms) {
                for (const auto& [ll, lr] : coproduct(*l))
                    left[{ll->index, lr->index, r->index}] ^= 1;
                for (const auto& [rl, rr] : coproduct(*r))
                    right[{l->index, rl->index, rr->index}] ^= 1;
            }
            EXPECT_EQ(left, right);
        }
    }
}

TEST(Space, SteenrodExamples)
{
    EXPECT_EQ(steenrod_dual(2, {SpaceId::RPinf, 4}), (std::vector<SpaceClass>{{SpaceId::RPinf, 2}}));
    EXPECT_EQ(steenrod_dual(2, {SpaceId::RPinf, 5}), (std::vector<SpaceClass>{{SpaceId::RPinf, 3}}));
    EXPECT_EQ(steenrod_dual(1, {SpaceId::RPinf, 4}), (std::vector<SpaceClass>{{SpaceId::RPinf, 3}}));
    EXPECT_TRUE(steenrod_dual(1, {SpaceId::BSpin2, 2}).empty());
}

TEST(Space, SteenrodDualMatchesCohomologyBinomials)
{
    for (SpaceId s : {SpaceId::RPinf, SpaceId::BSpin2, SpaceId::BSpin3, SpaceId::SigmaCPinf}) {
        int st = step(s);
        for (int i = 0; i <= 12; ++i) {
            int d = base_degree(s, i);
            for (int a = 0; a <= d; ++a) {
                auto got = steenrod_dual(a, {s, i});
                bool want = false;
                int target = -1;
                if (a % st == 0) {
                    int k = a / st;
                    // Dual of Sq^(st k) y^(i - k) = C(i - k, k) y^i.
                    want = oracle::binom2(i - k, k) == 1;
                    target = i - k;
                }
                if (want) {
                    ASSERT_EQ(got.size(), 1u) << space_name(s) << " Sq^" << a << " index " << i;
                    EXPECT_EQ(got[0].index, target);
                } else {
                    EXPECT_TRUE(got.empty()) << space_name(s) << " Sq^" << a << " index " << i;
                }
            }
        }
    }
}

TEST(Space, LambdaExamples)
{
    EXPECT_EQ(lambda_base(LambdaKind::Lambda, {SpaceId::RPinf, 4}), (std::vector<SpaceClass>{{SpaceId::RPinf, 2}}));
    EXPECT_TRUE(lambda_base(LambdaKind::LambdaPrime, {SpaceId::RPinf, 7}).empty());
    EXPECT_EQ(lambda_base(LambdaKind::LambdaDoublePrime, {SpaceId::RPinf, 4}), (std::vector<SpaceClass>{{SpaceId::RPinf, 3}}));
    EXPECT_TRUE(lambda_base(LambdaKind::Lambda, {SpaceId::RPinf, 3}).empty());
    EXPECT_EQ(lambda_index(LambdaKind::LambdaDoublePrime, 0), std::nullopt);
    EXPECT_EQ(lambda_index(LambdaKind::LambdaPrime, 5), 2);
}
