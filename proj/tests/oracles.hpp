#pragma once

// Brute-force references used only by the tests. None of these call into the
// code paths they are compared against.

#include "tsg/numeric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace tsg::oracle {

/// Standard Young tableaux by removing the largest entry from each corner.
inline BigInt syt_by_corners(std::vector<int> shape)
{
    static std::map<std::vector<int>, BigInt> memo;
    while (!shape.empty() && shape.back() == 0)
        shape.pop_back();
    if (shape.empty())
        return 1;
    if (auto it = memo.find(shape); it != memo.end())
        return it->second;
    BigInt total = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        const int below = i + 1 < shape.size() ? shape[i + 1] : 0;
        if (shape[i] > below) {
            auto smaller = shape;
            --smaller[i];
            total += syt_by_corners(smaller);
        }
    }
    memo.emplace(shape, total);
    return total;
}

/// Enumerates every tuple in {k_1..k_m}^n.
inline unsigned long long zero_weight_by_enumeration(const std::vector<long>& k, int n)
{
    unsigned long long count = 0;
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    while (true) {
        long sum = 0;
        for (std::size_t i : idx)
            sum += k[i];
        if (sum == 0)
            ++count;
        int pos = 0;
        while (pos < n && ++idx[static_cast<std::size_t>(pos)] == k.size())
            idx[static_cast<std::size_t>(pos++)] = 0;
        if (pos == n)
            break;
    }
    return count;
}

/// Number of words of length m·n with every letter 1..m used exactly n times,
/// by DP over occupancy vectors: count(v) = Σ_i count(v − e_i).
inline BigInt equal_occupancy_dp(int m, int n)
{
    std::map<std::vector<int>, BigInt> memo;
    std::function<BigInt(std::vector<int>)> count = [&](std::vector<int> v) -> BigInt {
        if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; }))
            return 1;
        if (auto it = memo.find(v); it != memo.end())
            return it->second;
        BigInt total = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] > 0) {
                --v[i];
                total += count(v);
                ++v[i];
            }
        memo.emplace(v, total);
        return total;
    };
    return count(std::vector<int>(static_cast<std::size_t>(m), n));
}

} // namespace tsg::oracle
