#include "dlcalc/error.hpp"
#include "dlcalc/maps.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace dlcalc;

namespace {

// One workspace for the whole file; its caches make the suite fast.
Workspace& ws()
{
    static Workspace w;
    return w;
}

}  // namespace

TEST(Transfer, GeneratorValues)
{
    RPPrimitives& rp = ws().rp();
    Model& m = rp.model();
    EXPECT_EQ(partial_on_generator(rp, 1, TailPolicy::Zero), m.normalize(m.parse("e_3 + Q^2 e_1")));
    EXPECT_EQ(partial_on_generator(rp, 0, TailPolicy::Zero), m.normalize(m.parse("e_1 + Q^1 e_0")));
    EXPECT_EQ(partial_on_generator(rp, 1, TailPolicy::Primitive),
              rp.canonical_primitive(make_label({}, 3)) + rp.canonical_primitive(make_label({2}, 1)));
    for (int r = 0; r <= 5; ++r) {
        Element p = partial_on_generator(rp, r, TailPolicy::Primitive);
        EXPECT_TRUE(rp.hopf().is_primitive(p)) << r;
        EXPECT_EQ(rp.hopf().indecomposable_part(p), rp.hopf().indecomposable_part(partial_on_generator(rp, r, TailPolicy::Zero)));
    }
}

TEST(Transfer, TailNames)
{
    EXPECT_EQ(parse_tail("zero"), TailPolicy::Zero);
    EXPECT_EQ(parse_tail(tail_name(TailPolicy::Primitive)), TailPolicy::Primitive);
    EXPECT_FALSE(parse_tail("lifted"));
}

TEST(Transfer, Multiplicative)
{
    QHopf& S = ws().sigma();
    for (auto policy : {TailPolicy::Zero, TailPolicy::Primitive}) {
        PartialMap& f = ws().partial(policy, false);
        for (int d1 = 1; d1 <= 3; ++d1)
            for (int d2 = 1; d2 <= 3; ++d2)
                for (const auto& x : S.basis(d1).monomials())
                    for (const auto& y : S.basis(d2).monomials())
                        EXPECT_EQ(f.apply(Element(x * y)), f.apply(Element(x)) * f.apply(Element(y)));
    }
}

TEST(Transfer, InjectiveAndPrimitive)
{
    for (auto policy : {TailPolicy::Zero, TailPolicy::Primitive}) {
        PartialMap& f = ws().partial(policy, false);
        PartialMap& lifted = ws().partial(policy, true);
        for (int n = 1; n <= 8; ++n) {
            EXPECT_EQ(f.rank(n), ws().sigma().dim(n)) << n;
            EXPECT_EQ(lifted.primitive_rank(n), ws().sigma().primitives(n).dim()) << n;
        }
    }
}

TEST(Transfer, MissingBaseValue)
{
    Model& src = ws().sigma().model();
    Model& tgt = ws().rp().model();
    GeneratorMap f("partial", src, tgt, [&](int i) -> std::optional<Element> {
        if (i == 0)
            return tgt.normalize(tgt.base_element(1));
        return std::nullopt;
    });
    EXPECT_NO_THROW(f.apply(src.base_element(0)));
    try {
        f.apply(src.base_element(1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InsufficientGeneratorData);
    }
}

TEST(Spin, IotaPlusC)
{
    Model& m = ws().bspin2().model();
    auto a = [&](int i) { return m.base_element(i); };
    EXPECT_EQ(transfer_iota_plus_c(m, 2), a(1) * a(1));
    EXPECT_TRUE(transfer_iota_plus_c(m, 3).is_zero());
    EXPECT_EQ(transfer_iota_plus_c(m, 0), a(0) * a(0));
    for (int i = 0; 2 * i + 1 <= 6; ++i) {
        EXPECT_EQ(transfer_iota_plus_c(m, 2 * i), a(i) * a(i));
        EXPECT_TRUE(transfer_iota_plus_c(m, 2 * i + 1).is_zero());
    }
}

TEST(Spin, Composite)
{
    Model& m = ws().bspin2().model();
    EXPECT_EQ(theorem2_composite(m, Generator{1, {}}), m.base_element(1).square());
    EXPECT_EQ(theorem2_composite(m, Generator{1, {6}}), m.gen(Generator{1, {3}}).square());
    EXPECT_EQ(theorem2_composite(m, Generator{0, {}}), m.base_element(0).square());
    try {
        theorem2_composite(m, Generator{0, {3}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonDoubledWord);
    }
}

TEST(Spin, KernelPoincare)
{
    QHopf& B = ws().bspin2();
    auto k = kernel_poincare(B.model(), 12);
    std::vector<int> doubled;
    for (const auto& g : generator_set(SpaceId::BSpin2, 6))
        if (generator_degree(SpaceId::BSpin2, g) > 0)
            doubled.push_back(2 * generator_degree(SpaceId::BSpin2, g));
    EXPECT_EQ(k, oracle::polynomial_counts(doubled, 12));
    for (int n = 1; n <= 12; n += 2)
        EXPECT_EQ(k[n], 0u);
    // (Q^1 a_0)^2 is the only square in degree 2; a_1^2 appears in degree 4.
    EXPECT_EQ(k[2], 1u);
    EXPECT_GE(k[4], 1u);
    EXPECT_EQ(surrogate_kernel_dims(B, 12), k);
}

TEST(Spin, CokernelAndBetti)
{
    auto c = cokernel_generators(ws(), 8, TailPolicy::Primitive);
    for (int n = 1; n <= 10; ++n)
        EXPECT_EQ(c.dual_kernel[n], ws().rp().hopf().primitives(n).dim() - ws().sigma().primitives(n).dim()) << n;
    EXPECT_EQ(c.algebra_dims, exterior_dims(c.generators, 8));
    auto b = spin_betti(ws(), 10, TailPolicy::Zero);
    EXPECT_EQ(b.dims, (std::vector<std::size_t>{1, 1, 2, 3, 7, 11, 19, 28, 48, 75, 118}));
    EXPECT_EQ(b.dims, convolve(b.factors.at("omega2-image"), b.factors.at("xi-kernel"), 10));
    auto bound = corollary18_bound(ws(), 10);
    for (int n = 0; n <= 10; ++n)
        EXPECT_LE(b.dims[n], bound[n]);
}

TEST(Spin, Reports)
{
    EXPECT_TRUE(verify_partial_injective(ws(), 8, TailPolicy::Zero).pass());
    EXPECT_TRUE(verify_partial_injective(ws(), 8, TailPolicy::Primitive).pass());
    EXPECT_TRUE(theorem2_check(ws(), 8).pass());
    EXPECT_TRUE(corollary18_check(ws(), 8, TailPolicy::Primitive).pass());
}
