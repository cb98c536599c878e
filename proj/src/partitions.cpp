#include "tsg/partitions.hpp"

#include "tsg/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace tsg {

Partition::Partition(std::vector<int> parts, int rank)
{
    if (rank < 1)
        throw InvalidPartition("rank must be positive");
    if (static_cast<int>(parts.size()) > rank)
        throw InvalidPartition("partition has more than " + std::to_string(rank) + " parts");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw InvalidPartition("negative part");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw InvalidPartition("parts are not weakly decreasing");
    }
    parts.resize(static_cast<std::size_t>(rank), 0);
    parts_ = std::move(parts);
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::length() const noexcept
{
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int x) { return x > 0; }));
}

Partition Partition::conjugate() const
{
    const int width = parts_.empty() ? 0 : parts_.front();
    std::vector<int> conj(static_cast<std::size_t>(width), 0);
    for (int row : parts_)
        for (int c = 0; c < row; ++c)
            ++conj[static_cast<std::size_t>(c)];
    return Partition(std::move(conj), std::max(width, 1));
}

std::string Partition::to_string() const
{
    const int len = length();
    if (len == 0)
        return "∅";
    std::string out = "(";
    for (int i = 0; i < len; ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[static_cast<std::size_t>(i)]);
    }
    return out + ")";
}

SlWeight canonicalize(const std::vector<int>& parts, int rank)
{
    return canonicalize(Partition(parts, rank));
}

SlWeight canonicalize(const Partition& lambda)
{
    std::vector<int> parts(lambda.parts().begin(), lambda.parts().end());
    const int last = parts.back();
    for (int& x : parts)
        x -= last;
    return SlWeight{Partition(std::move(parts), lambda.rank())};
}

BigInt weyl_dimension(const Partition& lambda)
{
    const int m = lambda.rank();
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            num *= lambda[i] - lambda[j] + (j - i);
            den *= j - i;
        }
    return num / den;
}

DualWeightResult dual_weight(const Partition& lambda, int n)
{
    if (lambda.size() != n)
        throw PreconditionError("dual_weight: partition size " + std::to_string(lambda.size()) +
                                " does not match n = " + std::to_string(n));
    const int m = lambda.rank();
    std::vector<int> dual(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        dual[static_cast<std::size_t>(i)] = lambda[0] - lambda[m - 1 - i];
    return {Partition(std::move(dual), m), static_cast<long>(m) * lambda[0] - n};
}

bool is_close_to_mean(std::span<const int> parts, int n, int m, RationalExponent theta)
{
    if (std::accumulate(parts.begin(), parts.end(), 0L) != n)
        throw PreconditionError("is_close_to_mean: parts do not sum to n");
    if (theta.den == 0)
        throw PreconditionError("is_close_to_mean: zero denominator in exponent");
    // Coordinates beyond the stored tuple are zero.
    if (static_cast<int>(parts.size()) > m)
        throw PreconditionError("is_close_to_mean: more than m coordinates");
    const BigInt rhs = power(BigInt(n), theta.num) * power(BigInt(m), theta.den);
    for (int i = 0; i < m; ++i) {
        const long x = i < static_cast<int>(parts.size()) ? parts[static_cast<std::size_t>(i)] : 0;
        const BigInt dev = std::labs(static_cast<long>(m) * x - n);
        if (power(dev, theta.den) >= rhs)
            return false;
    }
    return true;
}

BigInt hook_syt_count(const Partition& lambda)
{
    const Partition conj = lambda.conjugate();
    BigInt hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            hooks *= (lambda[i] - j) + (conj[j] - i) - 1;
    return factorial(static_cast<unsigned long>(lambda.size())) / hooks;
}

std::vector<Partition> partitions_of(int n, int m)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    // Depth-first over parts bounded by the previous part; yields descending
    // lexicographic order.
    auto rec = [&](auto&& self, int remaining, int bound) -> void {
        if (remaining == 0) {
            out.emplace_back(cur, m);
            return;
        }
        if (static_cast<int>(cur.size()) == m)
            return;
        for (int x = std::min(remaining, bound); x >= 1; --x) {
            cur.push_back(x);
            self(self, remaining - x, x);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

} // namespace tsg
