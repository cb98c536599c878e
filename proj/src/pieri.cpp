#include "tsg/pieri.hpp"

#include "tsg/errors.hpp"

#include <set>
#include <vector>

namespace tsg {

namespace {

// Index i where adding a box to row i keeps the tuple a partition of rank m.
bool can_add(std::span<const int> parts, int i)
{
    return i == 0 || parts[static_cast<std::size_t>(i - 1)] > parts[static_cast<std::size_t>(i)];
}

// Index i where removing a box from row i keeps the tuple a partition.
bool can_remove(std::span<const int> parts, int i)
{
    const auto m = static_cast<int>(parts.size());
    const int below = i + 1 < m ? parts[static_cast<std::size_t>(i + 1)] : 0;
    return parts[static_cast<std::size_t>(i)] > below;
}

Partition with_box(const Partition& p, int i, int delta)
{
    std::vector<int> parts(p.parts().begin(), p.parts().end());
    parts[static_cast<std::size_t>(i)] += delta;
    return Partition(std::move(parts), p.rank());
}

} // namespace

Decomposition Decomposition::unit(int m)
{
    if (m < 1)
        throw PreconditionError("rank m must be positive");
    Decomposition d;
    d.m = m;
    d.n = 0;
    d.mults.emplace(Partition({}, m), BigInt(1));
    return d;
}

Decomposition::Map Decomposition::canonical() const
{
    Map out;
    for (const auto& [lambda, mult] : mults)
        out[canonicalize(lambda).canonical] += mult;
    return out;
}

BigInt Decomposition::total_multiplicity() const
{
    BigInt sum = 0;
    for (const auto& [lambda, mult] : mults)
        sum += mult;
    return sum;
}

BigInt Decomposition::total_dimension() const
{
    BigInt sum = 0;
    for (const auto& [lambda, mult] : mults)
        sum += mult * weyl_dimension(lambda);
    return sum;
}

Decomposition pieri_step(const Decomposition& d)
{
    std::set<Partition, std::greater<>> targets;
    for (const auto& entry : d.mults) {
        const Partition& lambda = entry.first;
        for (int i = 0; i < d.m; ++i)
            if (can_add(lambda.parts(), i))
                targets.insert(with_box(lambda, i, +1));
    }
    const std::vector<Partition> keys(targets.begin(), targets.end());
    std::vector<BigInt> values(keys.size());

    const auto count = static_cast<long>(keys.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long t = 0; t < count; ++t) {
        const Partition& mu = keys[static_cast<std::size_t>(t)];
        BigInt acc = 0;
        for (int i = 0; i < d.m; ++i) {
            if (!can_remove(mu.parts(), i))
                continue;
            const auto it = d.mults.find(with_box(mu, i, -1));
            if (it != d.mults.end())
                acc += it->second;
        }
        values[static_cast<std::size_t>(t)] = std::move(acc);
    }

    Decomposition next;
    next.m = d.m;
    next.n = d.n + 1;
    for (std::size_t t = 0; t < keys.size(); ++t)
        next.mults.emplace_hint(next.mults.end(), keys[t], std::move(values[t]));
    return next;
}

Decomposition pieri_step_serial(const Decomposition& d)
{
    Decomposition next;
    next.m = d.m;
    next.n = d.n + 1;
    for (const auto& [lambda, mult] : d.mults)
        for (int i = 0; i < d.m; ++i)
            if (can_add(lambda.parts(), i))
                next.mults[with_box(lambda, i, +1)] += mult;
    return next;
}

Decomposition tensor_power_decomposition(int m, int n)
{
    if (n < 0)
        throw PreconditionError("tensor exponent must be non-negative");
    Decomposition d = Decomposition::unit(m);
    for (int k = 0; k < n; ++k)
        d = pieri_step(d);
    return d;
}

BigInt trivial_multiplicity(int m, int N)
{
    if (N < 0)
        throw PreconditionError("tensor exponent must be non-negative");
    if (m < 1)
        throw PreconditionError("rank m must be positive");
    if (N % m != 0)
        return 0;
    const Decomposition d = tensor_power_decomposition(m, N);
    const auto it = d.mults.find(Partition(std::vector<int>(static_cast<std::size_t>(m), N / m), m));
    return it == d.mults.end() ? BigInt(0) : it->second;
}

MeanMassReport mean_mass_report(const Decomposition& d, RationalExponent theta)
{
    MeanMassReport report;
    for (const auto& [lambda, mult] : d.mults) {
        const BigInt dim = weyl_dimension(lambda);
        if (!is_close_to_mean(lambda.parts(), d.n, d.m, theta)) {
            report.total_far += mult;
            report.dim_far += mult * dim;
            continue;
        }
        report.total_close += mult;
        report.dim_close += mult * dim;
        ++report.close_keys;
        auto& w = report.max_close_witness;
        if (!w || mult > w->second || (mult == w->second && lambda < w->first))
            w = std::make_pair(lambda, mult);
    }
    return report;
}

GrowthSeries ts_series_sl(int m, int max_n)
{
    if (max_n < 1)
        throw PreconditionError("ts_series_sl: max_n must be at least 1");
    GrowthSeries s;
    s.step = static_cast<unsigned>(m);
    s.dim_v = static_cast<std::uint64_t>(m);
    Decomposition d = Decomposition::unit(m);
    for (int l = 1; l <= max_n; ++l) {
        for (int k = 0; k < m; ++k)
            d = pieri_step(d);
        const auto it = d.mults.find(Partition(std::vector<int>(static_cast<std::size_t>(m), l), m));
        s.values.push_back(it == d.mults.end() ? BigInt(0) : it->second);
    }
    return s;
}

} // namespace tsg
