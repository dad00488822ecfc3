#pragma once

// Plain-arithmetic helpers shared by the tests; deliberately independent of the library.

#include <cstdint>
#include <vector>

namespace oracle {

// C(n, k) mod 2 from Pascal's triangle; 0 outside 0 <= k <= n.
inline int binom2(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    static std::vector<std::vector<int>> rows{{1}};
    while (static_cast<long>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<int> next(prev.size() + 1, 1);
        for (std::size_t i = 1; i < prev.size(); ++i)
            next[i] = (prev[i - 1] + prev[i]) % 2;
        rows.push_back(std::move(next));
    }
    return rows[n][k];
}

// Count monomials of each degree <= max in a free commutative algebra, by enumerating
// exponent vectors one generator at a time.
inline std::vector<std::size_t> polynomial_counts(const std::vector<int>& degrees, int max, bool square_free = false)
{
    std::vector<std::size_t> dims(max + 1, 0);
    dims[0] = 1;
    for (int d : degrees) {
        if (d < 1 || d > max)
            continue;
        std::vector<std::size_t> next(max + 1, 0);
        for (int n = 0; n <= max; ++n)
            for (int e = 0; n + e * d <= max && (!square_free || e <= 1); ++e)
                next[n + e * d] += dims[n];
        dims = std::move(next);
    }
    return dims;
}

}  // namespace oracle
