#include "dlcalc/word.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

using namespace dlcalc;

namespace {

// All sequences of positive integers with sum <= max.
void sequences(int max, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    out.push_back(cur);
    for (int i = 1; i <= max; ++i) {
        cur.push_back(i);
        sequences(max - i, cur, out);
        cur.pop_back();
    }
}

bool admissible_by_hand(const std::vector<int>& w)
{
    for (std::size_t j = 0; j + 1 < w.size(); ++j)
        if (w[j] > 2 * w[j + 1])
            return false;
    return true;
}

long excess_by_hand(const std::vector<int>& w)
{
    if (w.empty())
        return kInfiniteExcess;
    long e = w[0];
    for (std::size_t j = 1; j < w.size(); ++j)
        e -= w[j];
    return e;
}

}  // namespace

TEST(Word, ExcessExamples)
{
    EXPECT_EQ(excess(std::vector<int>{2, 1}), 1);
    EXPECT_EQ(excess(std::vector<int>{}), kInfiniteExcess);
    EXPECT_EQ(excess(std::vector<int>{4, 2, 1}), 1);
    EXPECT_TRUE(admissible(std::vector<int>{4, 2, 1}));
    EXPECT_FALSE(admissible(std::vector<int>{5, 1}));
    EXPECT_EQ(word_degree(std::vector<int>{3, 1}), 4);
}

TEST(Word, GeneratorSetExamples)
{
    auto names = [](SpaceId s, int d) {
        std::set<std::string> out;
        for (const auto& g : generator_set(s, d))
            out.insert(generator_name(s, g));
        return out;
    };
    EXPECT_EQ(names(SpaceId::RPinf, 1), (std::set<std::string>{"e_0", "e_1", "Q^1 e_0"}));
    EXPECT_EQ(names(SpaceId::RPinf, 2), (std::set<std::string>{"e_0", "e_1", "Q^1 e_0", "e_2", "Q^2 e_0"}));
    EXPECT_EQ(names(SpaceId::BSpin3, 3),
              (std::set<std::string>{"b_0", "Q^1 b_0", "Q^2 b_0", "Q^3 b_0", "Q^2 Q^1 b_0"}));
    EXPECT_EQ(names(SpaceId::SigmaCPinf, 1), (std::set<std::string>{"abar_0"}));
}

TEST(Word, GeneratorSetMatchesBruteForce)
{
    const int N = 12;
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    sequences(N, cur, all);
    for (SpaceId s : {SpaceId::RPinf, SpaceId::BSpin2, SpaceId::BSpin3, SpaceId::SigmaCPinf}) {
        std::set<std::pair<int, std::vector<int>>> want;
        for (int i = 0; base_degree(s, i) <= N; ++i) {
            int d = base_degree(s, i);
            for (const auto& w : all) {
                int deg = d;
                for (int x : w)
                    deg += x;
                if (deg <= N && admissible_by_hand(w) && excess_by_hand(w) > d)
                    want.insert({i, w});
            }
        }
        std::set<std::pair<int, std::vector<int>>> got;
        auto gens = generator_set(s, N);
        for (const auto& g : gens) {
            got.insert({g.base, g.word});
            EXPECT_TRUE(is_generator(s, g));
        }
        EXPECT_EQ(got, want) << space_name(s);
        EXPECT_EQ(got.size(), gens.size());
        EXPECT_TRUE(std::is_sorted(gens.begin(), gens.end(),
                                   [s](const Generator& a, const Generator& b) { return generator_less(s, a, b); }));
    }
}

TEST(Word, AdmissibleWordsMatchBruteForce)
{
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    sequences(10, cur, all);
    for (int d = 1; d <= 10; ++d) {
        for (int min_e = -1; min_e <= 4; ++min_e) {
            std::set<std::vector<int>> want;
            for (const auto& w : all) {
                int deg = 0;
                for (int x : w)
                    deg += x;
                if (!w.empty() && deg == d && admissible_by_hand(w) && excess_by_hand(w) > min_e)
                    want.insert(w);
            }
            auto words = admissible_words(d, min_e);
            std::set<std::vector<int>> got(words.begin(), words.end());
            EXPECT_EQ(got, want) << d << " " << min_e;
        }
    }
}

TEST(Word, Rendering)
{
    EXPECT_EQ(render_word(std::vector<int>{3, 1}), "Q^3 Q^1");
    EXPECT_EQ(generator_name(SpaceId::RPinf, Generator{2, {3, 1}}), "Q^3 Q^1 e_2");
    EXPECT_EQ(generator_degree(SpaceId::BSpin2, Generator{1, {3}}), 5);
}
