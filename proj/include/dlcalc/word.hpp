#pragma once

// Dyer-Lashof words Q^I = Q^{i_1} ... Q^{i_k} (i_1 outermost) and the generator sets.

#include "dlcalc/space.hpp"

#include <climits>
#include <span>
#include <string>
#include <vector>

namespace dlcalc {

using Word = std::vector<int>;

constexpr int kInfiniteExcess = INT_MAX;

// i_1 - (i_2 + ... + i_k); kInfiniteExcess for the empty word.
int excess(std::span<const int> word);
bool admissible(std::span<const int> word);
int word_degree(std::span<const int> word);

// Q^word x_base.
struct Generator
{
    int base = 0;
    Word word;

    bool operator==(const Generator&) const = default;
};

int generator_degree(SpaceId space, const Generator& g);
// Admissible, positive indices and e(I) > deg x_base.
bool is_generator(SpaceId space, const Generator& g);
// Deterministic order: degree, then base index, then word lexicographically.
bool generator_less(SpaceId space, const Generator& a, const Generator& b);

// All generators of degree <= max_degree, including degree-0 classes, in generator_less order.
std::vector<Generator> generator_set(SpaceId space, int max_degree);

// All admissible words of degree exactly d with excess > min_excess_exclusive.
std::vector<Word> admissible_words(int d, int min_excess_exclusive);

std::string render_word(std::span<const int> word);   // "Q^3 Q^1" (empty for the empty word)
std::string generator_name(SpaceId space, const Generator& g);  // "Q^3 Q^1 e_2"

}  // namespace dlcalc
