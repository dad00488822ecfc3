#include "dlcalc/algebra.hpp"
#include "dlcalc/error.hpp"
#include "dlcalc/hopf.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace dlcalc;

namespace {

constexpr int N = 12;

// Triples of rendered monomials with mod-2 multiplicity.
using Triples = std::map<std::tuple<std::string, std::string, std::string>, int>;

Tensor tensor_of(const Element& a, const Element& b)
{
    Tensor t;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms())
            t.toggle(TensorTerm{x, y});
    return t;
}

// (Sq (x) Sq)^a applied termwise.
Tensor sq_tensor(Model& m, int a, const Tensor& t)
{
    Tensor out;
    for (const auto& term : t.terms())
        for (int i = 0; i <= a; ++i)
            out += tensor_of(m.sq(i, Element(term.left)), m.sq(a - i, Element(term.right)));
    return out;
}

std::vector<Element> generators_up_to(Model& m, SpaceId s, int max_degree, bool positive)
{
    std::vector<Element> out;
    for (const auto& g : generator_set(s, max_degree))
        if (!positive || generator_degree(s, g) > 0)
            out.push_back(m.gen(g));
    return out;
}

}  // namespace

TEST(Algebra, ProductExamples)
{
    Model m(SpaceId::RPinf, false, N);
    Element e1 = m.base_element(1), e2 = m.base_element(2);
    EXPECT_EQ(e1 * Element::one(), e1);
    EXPECT_EQ(m.render(e1 * e1), "e_1^2");
    EXPECT_EQ((e1 + e2) * e1, e1 * e1 + e1 * e2);
    EXPECT_TRUE((e1 + e1).is_zero());
    EXPECT_EQ(e1.square(), e1 * e1);
    EXPECT_EQ((e1 + e2).square(), e1.square() + e2.square());
}

TEST(Algebra, ParseRenderRoundTrip)
{
    QHopf H(SpaceId::RPinf);
    Model& m = H.model();
    for (int d = 0; d <= 6; ++d)
        for (const auto& mono : H.basis(d).monomials())
            EXPECT_EQ(m.parse_monomial(m.render(mono)), mono) << m.render(mono);
    EXPECT_EQ(m.render(m.parse("e_1*e_2 + e_3 + Q^2 e_1")), "Q^2 e_1 + e_3 + e_1*e_2");
}

TEST(Algebra, Normalization)
{
    Model m(SpaceId::RPinf, false, N);
    EXPECT_EQ(m.normalize(m.base_element(0)), Element::one());
    EXPECT_EQ(m.normalize(m.base_element(0) * m.base_element(1)), m.base_element(1));
    Model r(SpaceId::RPinf, true, N);
    EXPECT_TRUE(r.normalize(r.gen(Generator{0, {1}})).is_zero());
    EXPECT_FALSE(r.normalize(r.base_element(1)).is_zero());
}

TEST(Algebra, Instability)
{
    for (SpaceId s : {SpaceId::RPinf, SpaceId::BSpin2, SpaceId::SigmaCPinf}) {
        Model m(s, false, N);
        for (const Element& x : generators_up_to(m, s, N / 2, true)) {
            int d = m.degree(x);
            for (int r = 0; r < d; ++r)
                EXPECT_TRUE(m.Q(r, x).is_zero()) << m.render(x) << " r=" << r;
            EXPECT_EQ(m.Q(d, x), x * x) << m.render(x);
        }
    }
}

TEST(Algebra, AdemExamples)
{
    Model m(SpaceId::RPinf, false, N);
    EXPECT_EQ(m.apply_word(std::vector<int>{5, 1}, m.base_element(0)), m.gen(Generator{0, {3}}).square());
    EXPECT_TRUE(m.apply_word(std::vector<int>{3, 1}, m.base_element(1)).is_zero());
    EXPECT_EQ(m.Q(2, m.base_element(1)), m.gen(Generator{1, {2}}));
}

// Q^r Q^s = sum_i C(i - s - 1, 2i - r) Q^(r+s-i) Q^i for r > 2s.
TEST(Algebra, AdemRelationsHold)
{
    for (SpaceId s : {SpaceId::RPinf, SpaceId::BSpin2}) {
        Model m(s, false, N);
        for (const Element& x : generators_up_to(m, s, 3, false)) {
            int d = m.degree(x);
            for (int b = 0; d + 3 * b + 1 <= N; ++b) {
                for (int a = 2 * b + 1; d + a + b <= N; ++a) {
                    Element lhs = m.Q(a, m.Q(b, x));
                    Element rhs;
                    for (int i = 0; i <= a + b; ++i)
                        if (oracle::binom2(i - b - 1, 2 * i - a))
                            rhs += m.Q(a + b - i, m.Q(i, x));
                    EXPECT_EQ(lhs, rhs) << "Q^" << a << " Q^" << b << " " << m.render(x);
                }
            }
        }
    }
}

TEST(Algebra, DyerLashofCartanFormula)
{
    Model m(SpaceId::RPinf, false, N);
    auto gens = generators_up_to(m, SpaceId::RPinf, 3, false);
    for (const Element& x : gens) {
        for (const Element& y : gens) {
            int d = m.degree(x) + m.degree(y);
            for (int r = 0; d + r <= N; ++r) {
                Element want;
                for (int i = 0; i <= r; ++i)
                    want += m.Q(i, x) * m.Q(r - i, y);
                EXPECT_EQ(m.Q(r, x * y), want) << m.render(x) << " * " << m.render(y) << " r=" << r;
            }
        }
    }
}

// The dual action is a right action: (Sq^a Sq^b)_* = Sq^b_* Sq^a_*.  For a < 2b,
// Sq^b_* Sq^a_* = sum_j C(b - 1 - j, a - 2j) Sq^j_* Sq^(a+b-j)_*.
TEST(Algebra, DualSteenrodAdemRelations)
{
    for (SpaceId s : {SpaceId::RPinf, SpaceId::BSpin2}) {
        Model m(s, false, N);
        for (const Element& x : generators_up_to(m, s, N, true)) {
            int d = m.degree(x);
            for (int b = 1; b <= d; ++b) {
                for (int a = 1; a < 2 * b && a + b <= d; ++a) {
                    Element lhs = m.sq(b, m.sq(a, x));
                    Element rhs;
                    for (int j = 0; 2 * j <= a; ++j)
                        if (oracle::binom2(b - 1 - j, a - 2 * j))
                            rhs += m.sq(j, m.sq(a + b - j, x));
                    EXPECT_EQ(lhs, rhs) << m.render(x) << " a=" << a << " b=" << b;
                }
            }
        }
    }
}

TEST(Algebra, DualSteenrodCartanAndSquares)
{
    QHopf H(SpaceId::RPinf);
    Model& m = H.model();
    for (int d = 1; d <= 4; ++d) {
        for (const auto& x : H.basis(d).monomials()) {
            for (int a = 0; a <= 2 * d; ++a) {
                Element sq2 = m.sq(a, Element(x).square());
                Element want = a % 2 ? Element() : m.sq(a / 2, Element(x)).square();
                EXPECT_EQ(sq2, want) << m.render(x) << " a=" << a;
            }
        }
    }
    Element e1 = m.base_element(1), e3 = m.base_element(3);
    for (int a = 0; a <= 4; ++a) {
        Element want;
        for (int i = 0; i <= a; ++i)
            want += m.sq(i, e1) * m.sq(a - i, e3);
        EXPECT_EQ(m.sq(a, e1 * e3), want);
    }
}

TEST(Algebra, LambdaExamples)
{
    Model m(SpaceId::RPinf, false, N);
    EXPECT_EQ(m.lambda(LambdaKind::Lambda, m.Q(4, m.base_element(2))), m.gen(Generator{1, {2}}));
    // Sq^1_* vanishes on squares.
    EXPECT_TRUE(m.lambda(LambdaKind::Lambda, m.base_element(1).square()).is_zero());
    EXPECT_EQ(m.lambda(LambdaKind::Lambda, m.base_element(2).square()), m.base_element(1).square());
    EXPECT_THROW(m.lambda(LambdaKind::Lambda, m.base_element(1)), Error);
    try {
        m.lambda(LambdaKind::LambdaPrime, m.base_element(2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ParityMismatch);
    }
}

TEST(Algebra, CoproductExamples)
{
    Model m(SpaceId::RPinf, false, N);
    EXPECT_EQ(m.render(m.coproduct(m.base_element(2))), "e_2 (x) e_0 + e_1 (x) e_1 + e_0 (x) e_2");
    EXPECT_EQ(m.render(m.coproduct_normalized(m.normalize(m.base_element(1)))), "e_1 (x) 1 + 1 (x) e_1");
    Element e1 = m.base_element(1);
    EXPECT_EQ(m.coproduct(e1 * e1), m.coproduct(e1) * m.coproduct(e1));
}

TEST(Algebra, CoproductCoassociative)
{
    for (SpaceId s : {SpaceId::RPinf, SpaceId::BSpin2, SpaceId::SigmaCPinf}) {
        Model m(s, false, N);
        for (const Element& x : generators_up_to(m, s, 8, false)) {
            Triples left, right;
            Tensor psi = m.coproduct(x);
            for (const auto& t : psi.terms()) {
                Tensor l = m.coproduct(t.left), r = m.coproduct(t.right);
                for (const auto& u : l.terms())
                    left[{m.render(u.left), m.render(u.right), m.render(t.right)}] ^= 1;
                for (const auto& u : r.terms())
                    right[{m.render(t.left), m.render(u.left), m.render(u.right)}] ^= 1;
            }
            std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
            std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
            EXPECT_EQ(left, right) << m.render(x);
        }
    }
}

TEST(Algebra, CoproductMultiplicative)
{
    QHopf H(SpaceId::RPinf);
    Model& m = H.model();
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        int d1 = 1 + static_cast<int>(rng() % 4), d2 = 1 + static_cast<int>(rng() % 4);
        const auto& b1 = H.basis(d1).monomials();
        const auto& b2 = H.basis(d2).monomials();
        Element x, y;
        for (const auto& mono : b1)
            if (rng() & 1)
                x.toggle(mono);
        for (const auto& mono : b2)
            if (rng() & 1)
                y.toggle(mono);
        EXPECT_EQ(m.coproduct(x * y), m.coproduct(x) * m.coproduct(y));
        EXPECT_EQ(m.coproduct_normalized(x * y), m.coproduct_normalized(x) * m.coproduct_normalized(y));
    }
}

TEST(Algebra, NormalizedCounit)
{
    QHopf H(SpaceId::RPinf);
    Model& m = H.model();
    for (int d = 1; d <= 6; ++d) {
        for (const auto& mono : H.basis(d).monomials()) {
            Element left, right;
            Tensor psi = m.coproduct_normalized(Element(mono));
            for (const auto& t : psi.terms()) {
                if (t.right.is_unit())
                    left.toggle(t.left);
                if (t.left.is_unit())
                    right.toggle(t.right);
            }
            EXPECT_EQ(left, Element(mono));
            EXPECT_EQ(right, Element(mono));
        }
    }
}

// Total Sq_* is a map of coalgebras.
TEST(Algebra, SteenrodCoproductCompatibility)
{
    QHopf H(SpaceId::RPinf);
    Model& m = H.model();
    for (int d = 1; d <= 6; ++d) {
        for (const auto& mono : H.basis(d).monomials()) {
            for (int a = 1; a <= d; ++a) {
                Tensor lhs = m.coproduct_normalized(m.sq(a, Element(mono)));
                Tensor rhs = sq_tensor(m, a, m.coproduct_normalized(Element(mono)));
                EXPECT_EQ(lhs, rhs) << m.render(mono) << " a=" << a;
            }
        }
    }
}

TEST(Algebra, TranslatedOperationsOnTheZeroComponent)
{
    Model m(SpaceId::RPinf, false, N);
    Element e1 = m.normalize(m.base_element(1));
    // Q~^r of a class in the 0-component stays in the normalized algebra.
    EXPECT_EQ(m.Qt(1, e1), e1 * e1);
    EXPECT_TRUE(m.Qt(0, e1).is_zero());
    Element q = m.Qt(2, e1);
    EXPECT_EQ(m.degree(q), 3);
    EXPECT_TRUE(q.contains(m.parse_monomial("Q^2 e_1")));
}
