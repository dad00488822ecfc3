#include "dlcalc/error.hpp"
#include "dlcalc/gf2.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dlcalc;
using namespace dlcalc::gf2;

namespace {

F2Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols)
{
    F2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() & 1)
                m.set(r, c);
    return m;
}

// Brute-force oracle: count vectors v in F2^cols with m v = 0.
std::size_t brute_kernel_size(const F2Matrix& m)
{
    std::size_t count = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << m.cols()); ++bits) {
        BitVector v(m.cols());
        for (std::size_t i = 0; i < m.cols(); ++i)
            if ((bits >> i) & 1)
                v.set(i);
        if (!m.apply(v).any())
            ++count;
    }
    return count;
}

BitVector vec(std::initializer_list<int> bits)
{
    BitVector v(bits.size());
    std::size_t i = 0;
    for (int b : bits)
        v.set(i++, b != 0);
    return v;
}

}  // namespace

TEST(Gf2, RankExamples)
{
    EXPECT_EQ(rank(F2Matrix::identity(2)), 2u);
    EXPECT_EQ(rank(F2Matrix(3, 4)), 0u);
    EXPECT_EQ(rank(F2Matrix::from_dense({{1, 1}, {1, 1}})), 1u);
}

TEST(Gf2, KernelExamples)
{
    EXPECT_EQ(kernel_basis(F2Matrix::identity(3)).dim(), 0u);
    EXPECT_EQ(kernel_basis(F2Matrix(2, 3)), F2Subspace::full(3));
    auto k = kernel_basis(F2Matrix::from_dense({{1, 1, 0}, {0, 0, 1}}));
    ASSERT_EQ(k.dim(), 1u);
    EXPECT_EQ(k.basis()[0], vec({1, 1, 0}));
}

TEST(Gf2, ImageExamples)
{
    EXPECT_EQ(image_basis(F2Matrix::identity(3)), F2Subspace::full(3));
    EXPECT_EQ(image_basis(F2Matrix(2, 2)).dim(), 0u);
    auto im = image_basis(F2Matrix::from_dense({{1, 0}, {1, 0}}));
    ASSERT_EQ(im.dim(), 1u);
    EXPECT_EQ(im.basis()[0], vec({1, 1}));
}

TEST(Gf2, QuotientDim)
{
    auto full = F2Subspace::full(3);
    EXPECT_EQ(quotient_dim(full, full), 0u);
    EXPECT_EQ(quotient_dim(F2Subspace(5), F2Subspace::full(5)), 5u);
    std::vector<BitVector> one{vec({1, 1, 0})};
    auto sub = F2Subspace::span(3, one);
    EXPECT_EQ(quotient_dim(sub, full), 2u);
    std::vector<BitVector> other{vec({1, 0, 0})};
    try {
        quotient_dim(sub, F2Subspace::span(3, other));
        FAIL() << "expected NotASubspace";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotASubspace);
    }
}

TEST(Gf2, RankNullityAgainstBruteForce)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 12;
        auto m = random_matrix(rng, rows, cols);
        auto k = kernel_basis(m);
        EXPECT_EQ(rank(m) + k.dim(), cols);
        EXPECT_EQ(std::size_t(1) << k.dim(), brute_kernel_size(m));
        for (const auto& v : k.basis())
            EXPECT_FALSE(m.apply(v).any());
        EXPECT_EQ(F2Subspace::span(cols, k.basis()), k);
        auto im = image_basis(m);
        EXPECT_EQ(im.dim(), rank(m));
        EXPECT_EQ(F2Subspace::span(rows, im.basis()), im);
    }
}

TEST(Gf2, WideMatricesCrossWordBoundaries)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t rows = 50 + rng() % 100, cols = 60 + rng() % 200;
        auto m = random_matrix(rng, rows, cols);
        auto k = kernel_basis(m);
        EXPECT_EQ(rank(m) + k.dim(), cols);
        EXPECT_EQ(rank(m), rank(m.transpose()));
        for (const auto& v : k.basis())
            EXPECT_FALSE(m.apply(v).any());
    }
}

TEST(Gf2, SubspaceOperations)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 10;
        auto a = image_basis(random_matrix(rng, n, rng() % 5));
        auto b = image_basis(random_matrix(rng, n, rng() % 5));
        auto s = a.sum(b);
        auto i = a.intersect(b);
        EXPECT_EQ(s.dim() + i.dim(), a.dim() + b.dim());
        for (const auto& v : i.basis()) {
            EXPECT_TRUE(a.contains(v));
            EXPECT_TRUE(b.contains(v));
        }
        F2Subspace incremental(n);
        for (const auto& v : s.basis())
            incremental.insert(v);
        EXPECT_EQ(incremental, s);
        for (const auto& v : a.basis()) {
            auto c = s.coordinates(v);
            ASSERT_TRUE(c.has_value());
        }
    }
}

TEST(Gf2, SolveConsistentSystems)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
        auto m = random_matrix(rng, rows, cols);
        BitVector x(cols);
        for (std::size_t i = 0; i < cols; ++i)
            x.set(i, rng() & 1);
        auto b = m.apply(x);
        auto sol = solve(m, b);
        ASSERT_TRUE(sol.has_value());
        EXPECT_EQ(m.apply(*sol), b);
    }
    auto m = F2Matrix::from_dense({{1, 0}, {1, 0}});
    EXPECT_FALSE(solve(m, vec({1, 0})).has_value());
}
