#pragma once

#include <cstdint>

namespace dlcalc {

// C(n, k) mod 2 by Lucas' theorem: odd iff the bits of k are a subset of the bits of n.
// Negative n or k, or k > n, gives 0; this is the convention the Nishida and Adem
// relations need.
constexpr int binom_mod2(std::int64_t n, std::int64_t k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    return (n & k) == k ? 1 : 0;
}

}  // namespace dlcalc
