#include "dlcalc/word.hpp"

#include <algorithm>
#include <numeric>

namespace dlcalc {

int excess(std::span<const int> word)
{
    if (word.empty())
        return kInfiniteExcess;
    int rest = std::accumulate(word.begin() + 1, word.end(), 0);
    return word.front() - rest;
}

bool admissible(std::span<const int> word)
{
    for (std::size_t j = 0; j + 1 < word.size(); ++j)
        if (word[j] > 2 * word[j + 1])
            return false;
    return true;
}

int word_degree(std::span<const int> word)
{
    return std::accumulate(word.begin(), word.end(), 0);
}

int generator_degree(SpaceId space, const Generator& g)
{
    return base_degree(space, g.base) + word_degree(g.word);
}

bool is_generator(SpaceId space, const Generator& g)
{
    if (g.base < 0)
        return false;
    for (int i : g.word)
        if (i <= 0)
            return false;
    if (!admissible(g.word))
        return false;
    return g.word.empty() || excess(g.word) > base_degree(space, g.base);
}

bool generator_less(SpaceId space, const Generator& a, const Generator& b)
{
    int da = generator_degree(space, a), db = generator_degree(space, b);
    if (da != db)
        return da < db;
    if (a.base != b.base)
        return a.base < b.base;
    return a.word < b.word;
}

namespace {

// Extend an admissible prefix on the right (towards the base class).
void extend_words(Word& prefix, int remaining, int min_excess_exclusive, std::vector<Word>& out)
{
    if (remaining == 0) {
        if (!prefix.empty() && excess(prefix) > min_excess_exclusive)
            out.push_back(prefix);
        return;
    }
    int lo = prefix.empty() ? 1 : (prefix.back() + 1) / 2;
    for (int i = std::max(lo, 1); i <= remaining; ++i) {
        // The excess only drops as the word grows.
        if (!prefix.empty() && prefix.front() - (word_degree(prefix) - prefix.front()) - i <= min_excess_exclusive)
            break;
        prefix.push_back(i);
        extend_words(prefix, remaining - i, min_excess_exclusive, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Word> admissible_words(int d, int min_excess_exclusive)
{
    std::vector<Word> out;
    if (d <= 0)
        return out;
    Word prefix;
    extend_words(prefix, d, min_excess_exclusive, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Generator> generator_set(SpaceId space, int max_degree)
{
    std::vector<Generator> out;
    for (int b = 0; b <= max_index_in_degree(space, max_degree); ++b) {
        int d = base_degree(space, b);
        out.push_back(Generator{b, {}});
        for (int shift = 1; d + shift <= max_degree; ++shift)
            for (auto& w : admissible_words(shift, d))
                out.push_back(Generator{b, std::move(w)});
    }
    std::sort(out.begin(), out.end(),
              [space](const Generator& a, const Generator& b) { return generator_less(space, a, b); });
    return out;
}

std::string render_word(std::span<const int> word)
{
    std::string s;
    for (std::size_t j = 0; j < word.size(); ++j) {
        if (j)
            s += ' ';
        s += "Q^" + std::to_string(word[j]);
    }
    return s;
}

std::string generator_name(SpaceId space, const Generator& g)
{
    std::string base = class_name(SpaceClass{space, g.base});
    if (g.word.empty())
        return base;
    return render_word(g.word) + " " + base;
}

}  // namespace dlcalc
